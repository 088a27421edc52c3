import itertools

import pytest

from s3cover import group_ring as gr
from s3cover.group_ring import ELEMENTS, E, S, S2, ST, S2T, T, GroupRingElement


def test_presentation_relations():
    assert S * S * S == E
    assert T * T == E
    assert T * S == S2 * T


def test_group_mul_examples():
    assert T * S == S2T
    assert S * S2 == E
    # st*st = s(ts)t = s*s2t*t = e
    assert ST * ST == E


def test_cayley_table_is_a_group():
    # closure and uniqueness in rows/columns (Latin square)
    for g in ELEMENTS:
        row = {g * h for h in ELEMENTS}
        col = {h * g for h in ELEMENTS}
        assert row == set(ELEMENTS) and col == set(ELEMENTS)
    # associativity of the group law itself
    for g, h, k in itertools.product(ELEMENTS, repeat=3):
        assert (g * h) * k == g * (h * k)


def test_element_names_round_trip():
    for g in ELEMENTS:
        assert gr.GroupElement.from_name(g.name) == g
    with pytest.raises(ValueError):
        gr.GroupElement.from_name("sigma")


@pytest.fixture(scope="module")
def consts():
    return gr.constants()


def test_idempotent_orthogonality(consts):
    idems = [consts["e1"], consts["e2"], consts["e3"]]
    for i, xi in enumerate(idems):
        for j, xj in enumerate(idems):
            expect = xi if i == j else GroupRingElement.zero()
            assert gr.ring_mul(xi, xj) == expect


def test_idempotents_sum_to_identity(consts):
    assert consts["e1"] + consts["e2"] + consts["e3"] == GroupRingElement.of(E)


def test_rank4_block_idempotents(consts):
    e31, e32 = consts["e31"], consts["e32"]
    assert e31 + e32 == consts["e3"]
    assert e31 * e31 == e31
    assert e32 * e32 == e32
    assert (e31 * e32).is_zero()
    assert (e32 * e31).is_zero()


def test_tau_interchanges_block_idempotents(consts):
    tau = GroupRingElement.of(T)
    assert tau * consts["e31"] == consts["e32"] * tau


def test_centrality(consts):
    for name in ("e1", "e2", "e3"):
        assert gr.is_central(consts[name])
    for name in ("e31", "e32"):
        assert not gr.is_central(consts[name])
    assert gr.is_central(GroupRingElement.of(E))


def test_sigma_action_identities_on_e31(consts):
    # sigma*e31 = (-tau)*e31 and sigma^2*e31 = (-e+tau)*e31
    e31 = consts["e31"]
    sigma = GroupRingElement.of(S)
    tau = GroupRingElement.of(T)
    ident = GroupRingElement.of(E)
    assert sigma * e31 == (-tau) * e31
    assert (sigma * sigma) * e31 == (-ident + tau) * e31


def test_block_basis_linear_independence(consts):
    from s3cover import linalg

    vectors = tuple(consts[n].coeffs for n in ("u11", "u12", "u21", "u22"))
    assert linalg.rank(vectors) == 4


def test_block_basis_isotypic(consts):
    for name in ("u11", "u12", "u21", "u22"):
        u = consts[name]
        assert (consts["e1"] * u).is_zero()
        assert (consts["e2"] * u).is_zero()
        assert consts["e3"] * u == u


def test_sign_element(consts):
    sgn = consts["sgn"]
    assert sgn == 6 * consts["e2"]
    assert sgn * sgn == 6 * sgn


def test_ring_mul_bilinear(consts):
    x, y, z = consts["e31"], consts["u12"], consts["e2"]
    assert gr.ring_mul(x + y, z) == gr.ring_mul(x, z) + gr.ring_mul(y, z)
    assert gr.ring_mul(z, x + y) == gr.ring_mul(z, x) + gr.ring_mul(z, y)
