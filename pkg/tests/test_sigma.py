import math

import pytest

import oracles
from zdg import generators as gen
from zdg.errors import AxiomError, TheoremViolation
from zdg.semigroup import FiniteSemigroup
from zdg.sigma import (check_group_formulations, check_leastness, check_sigma_adjacency,
                       gamma_with_zero, group_congruences, predict_diameter_sigma,
                       predict_girth_sigma, quotient_table, set_partitions, sigma,
                       verify_structure_theorem)

ZERO_FREE = gen.group_family() + list(gen.all_clifford_chains())


def class_names(S, sp):
    return {frozenset(S.elements[a] for a in c) for c in sp.classes}


@pytest.fixture
def C1():
    return gen.clifford_chain([1, 2], [0])


@pytest.fixture
def Z2xchain():
    return gen.clifford_chain([2, 2], [1])


def test_sigma_z2_is_identity():
    sp = sigma(gen.cyclic_group(2))
    assert sp.is_identity and sp.num_classes == 2


def test_sigma_c1(C1):
    # e is the identity at the top level, f and g form Z2 below it
    assert C1.elements == ("0:0", "1:0", "1:1")
    assert class_names(C1, sigma(C1)) == {frozenset({"0:0", "1:0"}), frozenset({"1:1"})}


def test_sigma_z2_times_chain(Z2xchain):
    assert class_names(Z2xchain, sigma(Z2xchain)) == {frozenset({"0:0", "1:0"}),
                                                      frozenset({"0:1", "1:1"})}


def test_sigma_refuses_zero():
    with pytest.raises(AxiomError, match="universal relation"):
        sigma(gen.b2())
    sp = sigma(gen.b2(), allow_zero=True)
    assert sp.num_classes == 1


def test_sigma_refuses_non_inverse():
    S = FiniteSemigroup.from_table(["x", "y"], [[0, 0], [1, 1]])
    with pytest.raises(AxiomError):
        sigma(S)


def test_quotient_rejects_non_congruence():
    S = gen.cyclic_group(3)
    with pytest.raises(TheoremViolation):
        quotient_table(S, [0, 0, 1])


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_group_congruences_of_z4():
    # subgroups of Z4: trivial, {0,2}, Z4
    assert len(group_congruences(gen.cyclic_group(4))) == 3


def test_apart_iff_adjacent_pairs(C1):
    sp = sigma(gen.cyclic_group(2))
    assert check_sigma_adjacency(gen.cyclic_group(2), sp).passed
    S0, g = gamma_with_zero(C1)
    e, f = C1.index("0:0"), C1.index("1:0")
    assert sigma(C1).related(e, f)
    assert not g.adjacent(list(g.vertices).index(e), list(g.vertices).index(f))


def test_structure_z2_times_chain(Z2xchain):
    sp = sigma(Z2xchain)
    dec = verify_structure_theorem(Z2xchain, sp)
    assert len(dec.edges()) == 4
    _, g = gamma_with_zero(Z2xchain)
    assert g.n == 4 and g.girth == 4


def test_structure_c1(C1):
    dec = verify_structure_theorem(C1, sigma(C1))
    assert len(dec.edges()) == 2
    _, g = gamma_with_zero(C1)
    assert g.n == 3 and g.girth == math.inf


def test_structure_trivial_group():
    Z1 = gen.cyclic_group(1)
    sp = sigma(Z1)
    assert sp.num_classes == 1
    assert verify_structure_theorem(Z1, sp).blocks == {}
    _, g = gamma_with_zero(Z1)
    assert g.n == 0


@pytest.mark.parametrize("S, diam, girth", [
    (gen.cyclic_group(3), 1, 3),
    (gen.clifford_chain([2, 2], [1]), 2, 4),
    (gen.clifford_chain([1, 2], [0]), 2, math.inf),
])
def test_named_predictions(S, diam, girth):
    sp = sigma(S)
    assert predict_diameter_sigma(S, sp) == diam
    assert predict_girth_sigma(S, sp) == girth


def test_trivial_group_predictions():
    Z1 = gen.cyclic_group(1)
    sp = sigma(Z1)
    assert predict_diameter_sigma(Z1, sp) is None
    with pytest.raises(ValueError):
        predict_girth_sigma(Z1, sp)


@pytest.mark.parametrize("name, S", ZERO_FREE, ids=[n for n, _ in ZERO_FREE])
def test_zero_free_corpus(name, S):
    sp = sigma(S)
    assert class_names(S, sp) == oracles.sigma_classes(S)
    if S.order <= 6:
        assert check_leastness(S, sp).passed
    assert check_sigma_adjacency(S, sp).passed
    verify_structure_theorem(S, sp)
    _, g = gamma_with_zero(S)
    assert predict_diameter_sigma(S, sp, g) == oracles.nx_metrics(oracles.zd_to_nx(g))[0]
    if sp.num_classes >= 2:
        assert predict_girth_sigma(S, sp, g) == oracles.nx_metrics(oracles.zd_to_nx(g))[1]
    assert check_group_formulations(S, sp).passed
