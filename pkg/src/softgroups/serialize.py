"""JSON-compatible dictionaries for every public object.

Formats:

* signed permutation: array of window entries, ``[2, -1]``
* group: ``{"degree": n, "generators": [[...], ...], "order": m}``; elements
  are recomputed from the generators on load and checked against ``order``
  when present
* signed composition: array of nonzero integers
* bi-partition: ``{"plus": [...], "minus": [...]}``
* parameter: string label, signed composition array, bi-partition object, or
  ``{"tuple": [...]}`` for product parameters
* soft group: carrier, parameter list, and per-parameter subgroup generators
* soft morphism: embedded source and target, the carrier map as a full
  ``table`` of window pairs (or generator ``images`` on input), and the
  parameter map as ``{"from": ..., "to": ...}`` records
* verdict: property name, outcome, and any witness morphisms embedded in
  full so they can be re-verified by a separate process

Loaders re-run full validation; a structurally malformed document raises
:class:`FormatError`, a well-formed document that fails a semantic check
raises the underlying validation error.
"""

from __future__ import annotations

from typing import Any, Mapping

from .compositions import BiPartition, SignedComposition
from .permutation import (
    FiniteGroup,
    GroupHom,
    SignedPermutation,
    generating_subset,
    hom_from_generator_images,
)
from .soft import Parameter, SoftGroup, SoftHom
from .category import MorphismVerdict

__all__ = [
    "FormatError",
    "perm_to_jsonable",
    "perm_from_jsonable",
    "group_to_dict",
    "group_from_dict",
    "param_to_jsonable",
    "param_from_jsonable",
    "soft_group_to_dict",
    "soft_group_from_dict",
    "soft_hom_to_dict",
    "soft_hom_from_dict",
    "verdict_to_dict",
]


class FormatError(ValueError):
    """A document does not have the expected JSON shape."""


def perm_to_jsonable(g: SignedPermutation) -> list[int]:
    return [int(x) for x in g.window]


def perm_from_jsonable(data: Any) -> SignedPermutation:
    if not isinstance(data, (list, tuple)) or not all(isinstance(x, int) for x in data):
        raise FormatError(f"a signed permutation must be an array of integers, got {data!r}")
    return SignedPermutation(tuple(data))


def group_to_dict(group: FiniteGroup) -> dict:
    return {
        "degree": group.degree,
        "generators": [perm_to_jsonable(g) for g in group.generators],
        "order": len(group),
    }


def group_from_dict(data: Mapping) -> FiniteGroup:
    if not isinstance(data, Mapping) or "degree" not in data or "generators" not in data:
        raise FormatError("a group needs 'degree' and 'generators'")
    degree = data["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise FormatError(f"'degree' must be a positive integer, got {degree!r}")
    gens = [perm_from_jsonable(w) for w in data["generators"]]
    group = FiniteGroup.generated_by(degree, gens)
    if "order" in data and data["order"] != len(group):
        raise ValueError(
            f"declared order {data['order']} does not match computed order {len(group)}"
        )
    return group


def param_to_jsonable(param: Parameter) -> Any:
    if isinstance(param, str):
        return param
    if isinstance(param, SignedComposition):
        return [int(x) for x in param.parts]
    if isinstance(param, BiPartition):
        return {"plus": [int(x) for x in param.plus], "minus": [int(x) for x in param.minus]}
    if isinstance(param, tuple):
        return {"tuple": [param_to_jsonable(x) for x in param]}
    raise FormatError(f"parameter {param!r} has no JSON form")


def param_from_jsonable(data: Any) -> Parameter:
    if isinstance(data, str):
        return data
    if isinstance(data, list):
        if not all(isinstance(x, int) for x in data):
            raise FormatError(f"a composition parameter must hold integers, got {data!r}")
        return SignedComposition(tuple(data))
    if isinstance(data, Mapping):
        if "tuple" in data:
            return tuple(param_from_jsonable(x) for x in data["tuple"])
        if "plus" in data and "minus" in data:
            return BiPartition(tuple(data["plus"]), tuple(data["minus"]))
    raise FormatError(f"unrecognized parameter encoding {data!r}")


def soft_group_to_dict(sg: SoftGroup) -> dict:
    assign = []
    for a in sg.params:
        gens = generating_subset(sg.carrier.degree, sorted(sg.value(a)))
        assign.append(
            {
                "param": param_to_jsonable(a),
                "subgroup_generators": [perm_to_jsonable(g) for g in gens],
            }
        )
    return {
        "carrier": group_to_dict(sg.carrier),
        "params": [param_to_jsonable(a) for a in sg.params],
        "assign": assign,
    }


def soft_group_from_dict(data: Mapping) -> SoftGroup:
    if not isinstance(data, Mapping) or not {"carrier", "params", "assign"} <= set(data):
        raise FormatError("a soft group needs 'carrier', 'params' and 'assign'")
    carrier = group_from_dict(data["carrier"])
    params = [param_from_jsonable(p) for p in data["params"]]
    assign = {}
    for entry in data["assign"]:
        if not isinstance(entry, Mapping) or "param" not in entry or "subgroup_generators" not in entry:
            raise FormatError("each 'assign' entry needs 'param' and 'subgroup_generators'")
        a = param_from_jsonable(entry["param"])
        gens = [perm_from_jsonable(w) for w in entry["subgroup_generators"]]
        sub = FiniteGroup.generated_by(carrier.degree, gens)
        assign[a] = frozenset(sub.elements)
    return SoftGroup(carrier, params, assign)


def soft_hom_to_dict(h: SoftHom) -> dict:
    return {
        "source": soft_group_to_dict(h.source),
        "target": soft_group_to_dict(h.target),
        "f": {
            "table": [
                [perm_to_jsonable(g), perm_to_jsonable(img)] for g, img in h.f.as_pairs()
            ]
        },
        "p": [
            {"from": param_to_jsonable(a), "to": param_to_jsonable(h.param_image(a))}
            for a in h.source.params
        ],
    }


def _carrier_map_from_dict(data: Mapping, source: SoftGroup, target: SoftGroup) -> GroupHom:
    if not isinstance(data, Mapping):
        raise FormatError("'f' must be an object with 'table' or 'images'")
    if "table" in data:
        mapping = {}
        for entry in data["table"]:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise FormatError("each 'table' entry must be a [from, to] pair")
            mapping[perm_from_jsonable(entry[0])] = perm_from_jsonable(entry[1])
        return GroupHom.from_mapping(source.carrier, target.carrier, mapping)
    if "images" in data:
        images = {}
        for entry in data["images"]:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise FormatError("each 'images' entry must be a [generator, image] pair")
            images[perm_from_jsonable(entry[0])] = perm_from_jsonable(entry[1])
        return hom_from_generator_images(source.carrier, target.carrier, images)
    raise FormatError("'f' must contain 'table' or 'images'")


def soft_hom_from_dict(data: Mapping) -> SoftHom:
    if not isinstance(data, Mapping) or not {"source", "target", "f", "p"} <= set(data):
        raise FormatError("a soft morphism needs 'source', 'target', 'f' and 'p'")
    source = soft_group_from_dict(data["source"])
    target = soft_group_from_dict(data["target"])
    f = _carrier_map_from_dict(data["f"], source, target)
    p = {}
    for entry in data["p"]:
        if not isinstance(entry, Mapping) or "from" not in entry or "to" not in entry:
            raise FormatError("each 'p' entry needs 'from' and 'to'")
        p[param_from_jsonable(entry["from"])] = param_from_jsonable(entry["to"])
    return SoftHom(source, target, f, p)


def verdict_to_dict(v: MorphismVerdict) -> dict:
    out: dict = {"property": v.property_name, "holds": v.holds, "note": v.note}
    if v.counterexample is not None:
        left, right = v.counterexample
        out["witness"] = {
            "kind": "counterexample-pair",
            "left": soft_hom_to_dict(left),
            "right": soft_hom_to_dict(right),
        }
    elif v.left_inverse is not None:
        out["witness"] = {
            "kind": "left-inverse",
            "hom": soft_hom_to_dict(v.left_inverse),
        }
    else:
        out["witness"] = None
    return out
