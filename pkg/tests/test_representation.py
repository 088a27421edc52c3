import itertools

from fractions import Fraction

import pytest

from s3cover import group_ring as gr
from s3cover import linalg, representation
from s3cover.elements import AlgebraElement
from s3cover.group_ring import ELEMENTS


def el(one=0, t=0, v1=0, v2=0, w1=0, w2=0):
    return AlgebraElement.from_coords((one, t, v1, v2, w1, w2))


def test_generator_relations():
    act = representation.standard_action()
    assert linalg.mat_pow(act.sigma, 3) == linalg.identity(6)
    assert linalg.mat_pow(act.tau, 2) == linalg.identity(6)
    assert linalg.mat_mul(act.tau, act.sigma) == linalg.mat_mul(
        linalg.mat_pow(act.sigma, 2), act.tau
    )


@pytest.mark.parametrize(
    "g,x,expected",
    [
        (gr.S, el(v1=1), el(w1=-1)),
        (gr.S2, el(v2=1), el(v2=-1, w2=1)),
        (gr.ST, el(v1=1), el(v1=1, w1=-1)),
        (gr.S2T, el(v1=1), el(v1=-1)),
        (gr.T, el(t=1), el(t=-1)),
        (gr.T, el(v1=1), el(w1=1)),
        (gr.E, el(1, 2, 3, 4, 5, 6), el(1, 2, 3, 4, 5, 6)),
    ],
)
def test_action_on_basis(g, x, expected):
    assert representation.apply(g, x) == expected


def test_apply_is_a_left_action():
    for g, h in itertools.product(ELEMENTS, repeat=2):
        for k in range(6):
            x = AlgebraElement.basis(k)
            assert representation.apply(g, representation.apply(h, x)) == (
                representation.apply(gr.group_mul(g, h), x)
            )


@pytest.fixture(scope="module")
def consts():
    return gr.constants()


@pytest.mark.parametrize(
    "name,rank", [("e1", 1), ("e2", 1), ("e3", 4), ("e31", 2), ("e32", 2)]
)
def test_projector_ranks(consts, name, rank):
    p = representation.projector(consts[name])
    assert representation.is_idempotent(p)
    assert linalg.rank(p) == rank


def test_projectors_sum_to_identity(consts):
    total = linalg.zero(6)
    for name in ("e1", "e2", "e3"):
        total = linalg.mat_add(total, representation.projector(consts[name]))
    assert total == linalg.identity(6)


def test_block_projectors_sum(consts):
    p31 = representation.projector(consts["e31"])
    p32 = representation.projector(consts["e32"])
    assert linalg.mat_add(p31, p32) == representation.projector(consts["e3"])


def test_projector_images(consts):
    # e1 fixes the unit line, e2 the t line, e3 the full v/w block
    p1 = representation.projector(consts["e1"])
    assert representation.image_basis(p1) == [el(one=1).coords]
    p2 = representation.projector(consts["e2"])
    assert representation.image_basis(p2) == [el(t=1).coords]
    p3 = representation.projector(consts["e3"])
    for k in (2, 3, 4, 5):
        x = AlgebraElement.basis(k)
        assert AlgebraElement(linalg.mat_vec(p3, x.coords)) == x


def test_e31_image_and_tau_interchange(consts):
    p31 = representation.projector(consts["e31"])
    p32 = representation.projector(consts["e32"])
    # e31 image is spanned by v1, v2
    for k in (2, 3):
        x = AlgebraElement.basis(k)
        assert AlgebraElement(linalg.mat_vec(p31, x.coords)) == x
    image31 = representation.image_basis(p31)
    assert len(image31) == 2
    # tau carries the image of e31 into the image of e32
    for vec in image31:
        y = representation.apply(gr.T, AlgebraElement(vec))
        assert AlgebraElement(linalg.mat_vec(p32, y.coords)) == y


def test_projector_of_identity_element():
    ident = gr.GroupRingElement.of(gr.E)
    assert representation.projector(ident) == linalg.identity(6)


def test_rank_exactness_on_awkward_fractions():
    # rank must be exact even with near-cancelling fractional rows
    m = linalg.from_rows(
        [
            [Fraction(1, 3), Fraction(1, 7)],
            [Fraction(2, 3), Fraction(2, 7)],
        ]
    )
    assert linalg.rank(m) == 1
