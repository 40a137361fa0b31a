"""Soft groups, soft homomorphisms, products and kernels."""

import pytest

from softgroups import (
    FiniteGroup,
    SignedComposition,
    SoftGroup,
    SoftHom,
    SoftValidationError,
    adjacent_transposition,
    bipartition_shape,
    bipartition_soft_group,
    bipartitions,
    closure,
    compose_soft_homs,
    hyperoctahedral_group,
    identity_hom,
    identity_soft_hom,
    inclusion_soft_hom,
    is_soft_subset,
    kernel_triviality_report,
    reflection_subgroup,
    sign_change,
    signed_composition_soft_group,
    signed_compositions,
    soft_kernel,
    soft_product,
    soft_product_n,
    sorting_soft_hom,
    trivial_hom,
)


def w1():
    return hyperoctahedral_group(1)


def w2():
    return hyperoctahedral_group(2)


def klein():
    return closure(2, [sign_change(2, 1), sign_change(2, 2)])


class TestSoftGroup:
    def test_basic_construction(self):
        g = w2()
        sub = closure(2, [sign_change(2, 1)])
        sg = SoftGroup(g, ["a", "b"], {"a": sub.elements, "b": [g.identity]})
        assert sg.carrier == g
        assert sg.params == ("a", "b")
        assert sg.value("a") == frozenset(sub.elements)
        assert sg.value("b") == frozenset({g.identity})

    def test_callable_assignment(self):
        g = klein()
        sg = SoftGroup(g, ["x", "y"], lambda a: [g.identity])
        assert sg.is_trivial()

    def test_rejects_non_subgroup_value(self):
        g = w2()
        v1 = sign_change(2, 1)
        r1 = adjacent_transposition(2, 1)
        # {e, v1, r1} is not closed under composition
        with pytest.raises(SoftValidationError) as exc:
            SoftGroup(g, ["a"], {"a": [g.identity, v1, r1]})
        assert exc.value.parameter == "a"
        assert "'a'" in str(exc.value)

    def test_rejects_foreign_elements(self):
        g = klein()
        with pytest.raises(SoftValidationError):
            SoftGroup(g, ["a"], {"a": [adjacent_transposition(2, 1),
                                       g.identity]})

    def test_rejects_empty_params(self):
        with pytest.raises(SoftValidationError):
            SoftGroup(w1(), [], {})

    def test_rejects_duplicate_params(self):
        g = w1()
        with pytest.raises(SoftValidationError):
            SoftGroup(g, ["a", "a"], {"a": [g.identity]})

    def test_rejects_missing_assignment(self):
        g = w1()
        with pytest.raises(SoftValidationError):
            SoftGroup(g, ["a", "b"], {"a": [g.identity]})

    def test_unknown_parameter_lookup(self):
        sg = SoftGroup.trivial(w1(), ["a"])
        with pytest.raises(SoftValidationError):
            sg.value("zzz")

    def test_trivial_and_completely_soft(self):
        g = w2()
        t = SoftGroup.trivial(g, ["a", "b"])
        c = SoftGroup.completely_soft(g, ["a", "b"])
        assert t.is_trivial() and not t.is_completely_soft()
        assert c.is_completely_soft() and not c.is_trivial()
        assert all(c.value(a) == frozenset(g.elements) for a in c.params)

    def test_restrict(self):
        g = klein()
        sg = SoftGroup(g, ["a", "b"], {"a": g.elements, "b": [g.identity]})
        r = sg.restrict(["b"])
        assert r.params == ("b",)
        assert r.value("b") == frozenset({g.identity})

    def test_equality_ignores_param_order(self):
        g = klein()
        assign = {"a": g.elements, "b": [g.identity]}
        x = SoftGroup(g, ["a", "b"], assign)
        y = SoftGroup(g, ["b", "a"], assign)
        assert x == y
        assert hash(x) == hash(y)

    def test_inequality_on_values(self):
        g = klein()
        x = SoftGroup(g, ["a"], {"a": g.elements})
        y = SoftGroup(g, ["a"], {"a": [g.identity]})
        assert x != y

    def test_soft_subset(self):
        g = klein()
        big = SoftGroup(g, ["a", "b"], {"a": g.elements, "b": [g.identity]})
        small = SoftGroup(g, ["b"], {"b": [g.identity]})
        assert is_soft_subset(small, big)
        assert not is_soft_subset(big, small)
        other = SoftGroup(g, ["b"], {"b": g.elements})
        assert not is_soft_subset(other, big)


class TestSortingScenario:
    def test_source_over_signed_compositions(self):
        sg = signed_composition_soft_group(2)
        assert sg.carrier == hyperoctahedral_group(2)
        assert sg.params == signed_compositions(2)
        # each parameter is assigned the reflection subgroup of the sorted
        # canonical representative of its shape
        for a in sg.params:
            mu = bipartition_shape(a)
            from softgroups import canonical_composition

            expected = reflection_subgroup(canonical_composition(mu))
            assert sg.value(a) == frozenset(expected.elements)

    def test_target_over_bipartitions(self):
        tg = bipartition_soft_group(2)
        assert tg.params == bipartitions(2)
        orders = [len(tg.value(mu)) for mu in tg.params]
        assert orders == [8, 4, 2, 2, 1]

    def test_sorting_hom_validates(self):
        for n in (1, 2):
            h = sorting_soft_hom(n)
            assert h.source == signed_composition_soft_group(n)
            assert h.target == bipartition_soft_group(n)
            assert h.f == identity_hom(hyperoctahedral_group(n))
            for a in h.source.params:
                assert h.param_image(a) == bipartition_shape(a)

    def test_diagram_violation_detected(self):
        # sending every parameter to the full-group side breaks the diagram
        src = signed_composition_soft_group(2)
        tgt = bipartition_soft_group(2)
        full = tgt.params[0]
        with pytest.raises(SoftValidationError) as exc:
            SoftHom(src, tgt, identity_hom(src.carrier),
                    {a: full for a in src.params})
        assert "diagram violation" in str(exc.value)


class TestSoftHom:
    def test_carrier_compatibility_enforced(self):
        a = SoftGroup.trivial(w1(), ["x"])
        b = SoftGroup.trivial(klein(), ["y"])
        with pytest.raises(SoftValidationError):
            SoftHom(a, b, identity_hom(w1()), {"x": "y"})

    def test_param_map_must_be_total(self):
        sg = SoftGroup.trivial(klein(), ["x", "y"])
        with pytest.raises(SoftValidationError):
            SoftHom(sg, sg, identity_hom(klein()), {"x": "x"})

    def test_param_map_must_land_in_target(self):
        sg = SoftGroup.trivial(klein(), ["x"])
        with pytest.raises(SoftValidationError):
            SoftHom(sg, sg, identity_hom(klein()), {"x": "zzz"})

    def test_identity_soft_hom(self):
        sg = signed_composition_soft_group(2)
        u = identity_soft_hom(sg)
        assert u.source == u.target == sg
        assert u.is_isomorphism()

    def test_inclusion(self):
        g = klein()
        big = SoftGroup(g, ["a", "b"], {"a": g.elements, "b": [g.identity]})
        small = big.restrict(["b"])
        inc = inclusion_soft_hom(small, big)
        assert inc.param_image("b") == "b"
        with pytest.raises(SoftValidationError):
            inclusion_soft_hom(big, small)

    def test_compose_identity_is_unit(self):
        h = sorting_soft_hom(2)
        left = compose_soft_homs(identity_soft_hom(h.target), h)
        right = compose_soft_homs(h, identity_soft_hom(h.source))
        assert left == h
        assert right == h

    def test_compose_associative(self):
        h = sorting_soft_hom(2)
        tgt = h.target
        t = FiniteGroup.trivial()
        final = SoftGroup.trivial(t, ["z"])
        to_final = SoftHom(tgt, final, trivial_hom(tgt.carrier, t),
                           {mu: "z" for mu in tgt.params})
        u = identity_soft_hom(h.source)
        assert compose_soft_homs(compose_soft_homs(to_final, h), u) == \
            compose_soft_homs(to_final, compose_soft_homs(h, u))

    def test_composition_requires_matching_ends(self):
        h = sorting_soft_hom(2)
        with pytest.raises(SoftValidationError):
            compose_soft_homs(h, h)

    def test_equality_componentwise(self):
        sg = SoftGroup.trivial(klein(), ["x", "y"])
        one = SoftHom(sg, sg, identity_hom(klein()), {"x": "x", "y": "y"})
        two = SoftHom(sg, sg, identity_hom(klein()), {"x": "y", "y": "x"})
        assert one != two
        assert one == identity_soft_hom(sg)


class TestSoftProduct:
    def test_binary_product_shape(self):
        a = signed_composition_soft_group(1)
        b = bipartition_soft_group(1)
        prod = soft_product(a, b)
        assert len(prod.carrier) == len(a.carrier) * len(b.carrier)
        assert len(prod.params) == len(a.params) * len(b.params)
        for x in a.params:
            for y in b.params:
                assert len(prod.value((x, y))) == \
                    len(a.value(x)) * len(b.value(y))

    def test_product_values_are_block_products(self):
        g = w1()
        full = SoftGroup.completely_soft(g, ["f"])
        triv = SoftGroup.trivial(g, ["t"])
        prod = soft_product(full, triv)
        value = prod.value(("f", "t"))
        assert {e.window for e in value} == {(1, 2), (-1, 2)}

    def test_nary_product_matches_iterated_binary_orders(self):
        a = SoftGroup.completely_soft(w1(), ["a1", "a2"])
        b = SoftGroup.trivial(klein(), ["b"])
        c = SoftGroup.completely_soft(w1(), ["c"])
        flat = soft_product_n((a, b, c))
        assert len(flat.params) == 2
        assert len(flat.carrier) == 2 * 4 * 2
        nested = soft_product(soft_product(a, b), c)
        assert flat.carrier == nested.carrier
        assert len(flat.value(("a1", "b", "c"))) == \
            len(nested.value((("a1", "b"), "c")))


class TestSoftKernel:
    def test_sorting_scenario_kernel(self):
        for n in (1, 2, 3):
            ks = soft_kernel(sorting_soft_hom(n))
            assert ks is not None
            assert len(ks.params) == 1
            assert ks.params[0] == SignedComposition((-1,) * n)
            assert ks.carrier == FiniteGroup.trivial(n)
            assert ks.value(ks.params[0]) == frozenset({ks.carrier.identity})

    def test_kernel_of_identity_collects_trivially_assigned_params(self):
        g = klein()
        sg = SoftGroup(g, ["a", "b", "c"],
                       {"a": g.elements, "b": [g.identity], "c": [g.identity]})
        ks = soft_kernel(identity_soft_hom(sg))
        assert ks is not None
        assert ks.params == ("b", "c")
        assert len(ks.carrier) == 1

    def test_kernel_undefined_when_no_param_matches(self):
        g = klein()
        sg = SoftGroup.completely_soft(g, ["a"])
        assert soft_kernel(identity_soft_hom(sg)) is None

    def test_kernel_with_noninjective_carrier_map(self):
        g = klein()
        sub = closure(2, [sign_change(2, 1)])
        t = FiniteGroup.trivial()
        src = SoftGroup(g, ["a", "b"], {"a": g.elements, "b": sub.elements})
        tgt = SoftGroup.completely_soft(t, ["z"])
        h = SoftHom(src, tgt, trivial_hom(g, t), {"a": "z", "b": "z"})
        ks = soft_kernel(h)
        assert ks is not None
        assert ks.params == ("a",)
        assert ks.carrier == g

    def test_triviality_report_agrees_for_sorting_scenario(self):
        for n in (1, 2):
            rep = kernel_triviality_report(sorting_soft_hom(n))
            assert rep.injective
            assert rep.kernel_trivial
            assert rep.agree

    def test_triviality_report_noninjective_case(self):
        g = klein()
        t = FiniteGroup.trivial()
        src = SoftGroup(g, ["a"], {"a": g.elements})
        tgt = SoftGroup.completely_soft(t, ["z"])
        h = SoftHom(src, tgt, trivial_hom(g, t), {"a": "z"})
        rep = kernel_triviality_report(h)
        assert not rep.injective
        assert not rep.kernel_trivial
        assert rep.agree

    def test_triviality_report_raises_when_kernel_undefined(self):
        g = klein()
        sg = SoftGroup.completely_soft(g, ["a"])
        with pytest.raises(SoftValidationError):
            kernel_triviality_report(identity_soft_hom(sg))
