"""Round trips and tamper detection for the JSON formats."""

import json

import pytest

from softgroups import (
    BiPartition,
    SignedComposition,
    SignedPermutation,
    SoftGroup,
    check_epic,
    check_monic,
    check_split_monic,
    closure,
    hyperoctahedral_group,
    identity_soft_hom,
    seeded_universe,
    sign_change,
    signed_composition_soft_group,
    sorting_soft_hom,
    verify_cancellation_witness,
)
from softgroups.serialize import (
    FormatError,
    group_from_dict,
    group_to_dict,
    param_from_jsonable,
    param_to_jsonable,
    perm_from_jsonable,
    perm_to_jsonable,
    soft_group_from_dict,
    soft_group_to_dict,
    soft_hom_from_dict,
    soft_hom_to_dict,
    verdict_to_dict,
)


class TestPermRoundTrip:
    def test_round_trip(self):
        w = SignedPermutation((-2, 3, 1))
        assert perm_from_jsonable(perm_to_jsonable(w)) == w

    def test_json_serializable(self):
        payload = perm_to_jsonable(SignedPermutation((1, -2)))
        assert json.loads(json.dumps(payload)) == payload

    def test_malformed_rejected(self):
        with pytest.raises(FormatError):
            perm_from_jsonable("nope")
        with pytest.raises(FormatError):
            perm_from_jsonable([1, "a"])


class TestParamRoundTrip:
    def test_all_kinds(self):
        cases = [
            "label",
            SignedComposition((1, -2, 1)),
            BiPartition((2, 1), (1,)),
            ("a", "b"),
            (SignedComposition((1,)), "x"),
        ]
        for p in cases:
            j = param_to_jsonable(p)
            assert json.loads(json.dumps(j)) == j
            assert param_from_jsonable(j) == p

    def test_distinct_encodings(self):
        # a composition and a plain label never collide
        a = param_to_jsonable(SignedComposition((1,)))
        b = param_to_jsonable("1")
        assert a != b


class TestGroupRoundTrip:
    def test_round_trip(self):
        for group in [
            hyperoctahedral_group(2),
            closure(2, [sign_change(2, 1), sign_change(2, 2)]),
        ]:
            assert group_from_dict(group_to_dict(group)) == group

    def test_declared_order_checked(self):
        d = group_to_dict(hyperoctahedral_group(2))
        d["order"] = 7
        with pytest.raises(ValueError):
            group_from_dict(d)

    def test_missing_keys_rejected(self):
        with pytest.raises(FormatError):
            group_from_dict({"degree": 2})


class TestSoftGroupRoundTrip:
    def test_round_trip(self):
        for sg in [
            signed_composition_soft_group(2),
            SoftGroup.trivial(hyperoctahedral_group(1), ["a", "b"]),
        ]:
            assert soft_group_from_dict(soft_group_to_dict(sg)) == sg

    def test_tampered_subgroup_rejected(self):
        sg = SoftGroup.trivial(hyperoctahedral_group(2), ["a"])
        d = soft_group_to_dict(sg)
        # claim a generator that is not in any subgroup assignment shape
        d["assign"][0]["subgroup_generators"] = [[2, 1], [-1, 2]]
        rebuilt = soft_group_from_dict(d)
        # closure regenerates a genuine subgroup, so the rebuilt object is a
        # different, but valid, soft group
        assert rebuilt != sg
        assert len(rebuilt.value("a")) == 8

    def test_unknown_param_in_assign_rejected(self):
        sg = SoftGroup.trivial(hyperoctahedral_group(1), ["a"])
        d = soft_group_to_dict(sg)
        d["assign"][0]["param"] = "zzz"
        with pytest.raises((FormatError, ValueError)):
            soft_group_from_dict(d)


class TestSoftHomRoundTrip:
    def test_round_trip_sorting_hom(self):
        for n in (1, 2):
            h = sorting_soft_hom(n)
            assert soft_hom_from_dict(soft_hom_to_dict(h)) == h

    def test_tampered_param_map_rejected(self):
        h = sorting_soft_hom(2)
        d = soft_hom_to_dict(h)
        # redirect one parameter to an incompatible target parameter
        d["p"][0]["to"] = d["p"][-1]["to"]
        from softgroups import SoftValidationError

        with pytest.raises(SoftValidationError):
            soft_hom_from_dict(d)

    def test_tampered_carrier_table_rejected(self):
        h = identity_soft_hom(SoftGroup.trivial(hyperoctahedral_group(1), ["a"]))
        d = soft_hom_to_dict(h)
        pairs = d["f"]["table"]
        pairs[0][1], pairs[1][1] = pairs[1][1], pairs[0][1]
        from softgroups import NotAHomomorphismError

        with pytest.raises(NotAHomomorphismError):
            soft_hom_from_dict(d)


class TestVerdictSerialization:
    def test_true_verdict(self):
        v = check_epic(sorting_soft_hom(2), ())
        d = verdict_to_dict(v)
        assert d["holds"] is True
        assert d["witness"] is None
        json.dumps(d)

    def test_counterexample_witness_reverifies_after_round_trip(self):
        h = sorting_soft_hom(2)
        v = check_monic(h, seeded_universe(seed=1, count=4))
        d = verdict_to_dict(v)
        assert d["witness"]["kind"] == "counterexample-pair"
        json.dumps(d)
        left = soft_hom_from_dict(d["witness"]["left"])
        right = soft_hom_from_dict(d["witness"]["right"])
        assert left != right
        assert verify_cancellation_witness(h, (left, right), "left")

    def test_left_inverse_witness_reverifies(self):
        sg = SoftGroup.trivial(hyperoctahedral_group(1), ["a"])
        h = identity_soft_hom(sg)
        v = check_split_monic(h)
        d = verdict_to_dict(v)
        assert d["witness"]["kind"] == "left-inverse"
        json.dumps(d)
        from softgroups import compose_soft_homs

        inv = soft_hom_from_dict(d["witness"]["hom"])
        assert compose_soft_homs(inv, h) == identity_soft_hom(sg)
