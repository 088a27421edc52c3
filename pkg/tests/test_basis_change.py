import json
import random

from fractions import Fraction

import pytest

from s3cover import linalg, representation
from s3cover.algebra import CoverParams, build_cover, check_constraints, multiply
from s3cover.basis_change import BasisChange, induced_module_map, transform
from s3cover.elements import AlgebraElement
from s3cover.search import sample

KNOWN_SOLUTION_1 = CoverParams.of(1, 1, 1, 1, -1, 3, 1, -6)


def random_change(rng, max_entry=3):
    while True:
        u = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        rows = [[rng.randint(-max_entry, max_entry) for _ in range(2)] for _ in range(2)]
        try:
            return BasisChange.of(u, rows)
        except ValueError:
            continue


class TestValidation:
    def test_zero_unit_rejected(self):
        with pytest.raises(ValueError):
            BasisChange.of(0, ((1, 0), (0, 1)))

    def test_singular_matrix_rejected(self):
        with pytest.raises(ValueError):
            BasisChange.of(1, ((1, 2), (2, 4)))

    def test_wrong_shape_rejected(self):
        with pytest.raises(ValueError):
            BasisChange.of(1, ((1, 0, 0), (0, 1, 0)))


class TestTransform:
    def test_identity(self):
        p = sample(seed=3)
        assert transform(p, BasisChange.identity()) == p

    def test_swap(self):
        # exchanging the two basis vectors mirrors the parameters
        p = CoverParams.of(1, 2, 3, 4, 5, 6, 7, 8)
        q = transform(p, BasisChange.of(1, ((0, 1), (1, 0))))
        assert q == CoverParams.of(-1, 3, 2, 7, 6, 5, 4, -8)

    def test_h_scaling_law(self):
        rng = random.Random(17)
        for k in range(30):
            p = sample(seed=300 + k)
            bc = random_change(rng)
            assert transform(p, bc).h == (bc.det / bc.u) * p.h

    def test_unit_rescaling_only(self):
        p = CoverParams.of(1, 2, 3, 4, 5, 6, 7, 8)
        q = transform(p, BasisChange.of(2, ((1, 0), (0, 1))))
        # a, b, c pick up the unit; d..g are u-independent; h divides by it
        assert q == CoverParams.of(2, 4, 6, 4, 5, 6, 7, 4)

    def test_constraint_invariance(self):
        rng = random.Random(23)
        for k in range(30):
            p = sample(seed=400 + k)
            bc = random_change(rng)
            assert check_constraints(transform(p, bc)).satisfied
        # off-locus points stay off-locus
        bad = CoverParams.of(1, 1, 1, 1, -1, 3, 1, -5)
        for _ in range(10):
            bc = random_change(rng)
            assert not check_constraints(transform(bad, bc)).satisfied

    def test_invertibility(self):
        # undoing a change with its inverse restores the parameters
        p = sample(seed=8)
        bc = BasisChange.of(Fraction(3, 2), ((1, 2), (1, -1)))
        (l1, m1), (l2, m2) = bc.c
        det = bc.det
        inverse = BasisChange.of(
            1 / bc.u, ((m2 / det, -m1 / det), (-l2 / det, l1 / det))
        )
        assert transform(transform(p, bc), inverse) == p


class TestModuleMap:
    def test_identity(self):
        assert induced_module_map(BasisChange.identity()) == linalg.identity(6)

    def test_unit_scaling(self):
        m = induced_module_map(BasisChange.of(2, ((1, 0), (0, 1))))
        expect = [[0] * 6 for _ in range(6)]
        for k, s in enumerate((1, 2, 1, 1, 1, 1)):
            expect[k][k] = s
        assert m == linalg.from_rows(expect)

    def test_commutes_with_group_action(self):
        # C acts the same way on the v and w blocks, so the induced map
        # commutes with both generators
        act = representation.standard_action()
        rng = random.Random(29)
        for _ in range(20):
            m = induced_module_map(random_change(rng))
            assert linalg.mat_mul(m, act.sigma) == linalg.mat_mul(act.sigma, m)
            assert linalg.mat_mul(m, act.tau) == linalg.mat_mul(act.tau, m)


class TestCovariance:
    def test_table_conjugation(self):
        # products of mapped basis vectors in the old table equal the
        # mapped entries of the transformed table, for all 36 pairs
        rng = random.Random(31)
        cases = [KNOWN_SOLUTION_1] + [sample(seed=500 + k) for k in range(20)]
        cases.append(CoverParams.of(1, 2, 3, 4, 5, 6, 7, 8))
        for p in cases:
            bc = random_change(rng)
            q = transform(p, bc)
            m = induced_module_map(bc)
            old = build_cover(p)
            new = build_cover(q)
            for i in range(6):
                for j in range(6):
                    xi = AlgebraElement(
                        linalg.mat_vec(m, AlgebraElement.basis(i).coords)
                    )
                    xj = AlgebraElement(
                        linalg.mat_vec(m, AlgebraElement.basis(j).coords)
                    )
                    lhs = multiply(xi, xj, old)
                    rhs = AlgebraElement(linalg.mat_vec(m, new.entry(i, j).coords))
                    assert lhs == rhs


class TestComposition:
    def test_group_law(self):
        rng = random.Random(37)
        for k in range(15):
            p = sample(seed=600 + k)
            b1 = random_change(rng)
            b2 = random_change(rng)
            assert transform(transform(p, b1), b2) == transform(p, b1.compose(b2))

    def test_module_map_respects_composition(self):
        rng = random.Random(41)
        for _ in range(15):
            b1 = random_change(rng)
            b2 = random_change(rng)
            m12 = induced_module_map(b1.compose(b2))
            # columns hold new vectors, so the later change multiplies on
            # the right of the earlier one
            assert m12 == linalg.mat_mul(
                induced_module_map(b1), induced_module_map(b2)
            )

    def test_identity_neutral(self):
        bc = BasisChange.of(3, ((1, 2), (0, 1)))
        ident = BasisChange.identity()
        assert bc.compose(ident) == bc
        assert ident.compose(bc) == bc


class TestJson:
    def test_round_trip(self):
        bc = BasisChange.of(Fraction(-2, 3), ((1, 2), (0, Fraction(1, 2))))
        assert BasisChange.from_json(json.loads(json.dumps(bc.to_json()))) == bc

    def test_missing_keys_rejected(self):
        with pytest.raises(ValueError):
            BasisChange.from_json({"u": 1})

    def test_bad_matrix_rejected(self):
        with pytest.raises(ValueError):
            BasisChange.from_json({"u": 1, "C": [[1, 0]]})
