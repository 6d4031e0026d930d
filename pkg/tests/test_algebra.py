import random
from fractions import Fraction

import pytest

from lsizeta.algebra import (
    LsiExpr,
    LsiMonomial,
    canonicalize,
    conjugate,
    imag_part,
    multiply,
    rational_coeffs,
    real_part,
    reduce_at,
    shuffle,
)
from lsizeta.gaussian import GR_I, GR_ONE, GaussianRational


def mono(ks, ls, pi=0):
    return LsiMonomial(pi, tuple(ks), tuple(ls))


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


PURE = lambda m: LsiMonomial(m)


class TestGaussianRational:
    def test_field_ops(self):
        a = gr("1/2", "-1/3")
        b = gr("2", "5")
        assert a + b == gr("5/2", "14/3")
        assert a * b == gr(Fraction(1, 2) * 2 + Fraction(1, 3) * 5,
                           Fraction(5, 2) - Fraction(2, 3))
        assert (a * b) / b == a
        assert a.conjugate().conjugate() == a
        assert complex(gr(1, 2)) == 1 + 2j

    def test_mul_fast_paths(self):
        assert gr(3) * gr(0, 2) == gr(0, 6)
        assert gr(0, 2) * gr(0, 3) == gr(-6)
        assert GR_I * GR_I == gr(-1)


class TestMonomial:
    def test_invariants(self):
        m = mono((3, 2), (1, 0), pi=2)
        assert m.weight == 7 and m.depth == 2
        assert m.parity == (1 + 1) % 2 == 0
        assert m.is_canonical

    def test_rejects_negative_log_count(self):
        with pytest.raises(ValueError):
            mono((2,), (2,))
        with pytest.raises(ValueError):
            mono((2, 2), (0,))

    def test_pure(self):
        assert PURE(3).is_pure and PURE(3).parity == 0 and PURE(3).weight == 3

    def test_ordering_puts_pi_columns_last(self):
        ms = [PURE(5), mono((5,), (1,)), mono((2, 3), (0, 0)), mono((4,), (0,), pi=1)]
        ms.sort(key=lambda m: m.sort_key())
        assert ms == [mono((2, 3), (0, 0)), mono((5,), (1,)),
                      mono((4,), (0,), pi=1), PURE(5)]


class TestShuffle:
    def test_paper_worked_example(self):
        got = shuffle(mono((1, 3), (0, 1)), mono((2,), (1,)))
        expected = LsiExpr({
            mono((2, 1, 3), (1, 0, 1)): GR_ONE,
            mono((1, 2, 3), (0, 1, 1)): GR_ONE,
            mono((1, 3, 2), (0, 1, 1)): GR_ONE,
        })
        assert got == expected

    def test_empty_word(self):
        got = shuffle(mono((2,), (0,)), PURE(3))
        assert got == LsiExpr({mono((2,), (0,), pi=3): GR_ONE})

    def test_square_collects(self):
        got = shuffle(mono((2,), (0,)), mono((2,), (0,)))
        assert got == LsiExpr({mono((2, 2), (0, 0)): gr(2)})

    def test_term_count_binomial(self):
        rng = random.Random(7)
        from math import comb
        for _ in range(50):
            n, np_ = rng.randint(0, 3), rng.randint(0, 3)
            a = mono([rng.randint(1, 3) for _ in range(n)], [0] * n)
            b = mono([rng.randint(1, 3) for _ in range(np_)], [0] * np_)
            total = sum(int(c.re) for _, c in shuffle(a, b).terms())
            assert total == comb(n + np_, n)

    def test_pi_powers_add(self):
        got = shuffle(mono((2,), (0,), pi=1), mono((3,), (1,), pi=2))
        assert all(m.pi_pow == 3 for m, _ in got.terms())


class TestReduceAt:
    def test_depth_one_sigma_power(self):
        got = reduce_at(mono((2,), (1,)), 1)
        assert got == LsiExpr({PURE(2): gr("-1/18")})

    def test_front_merge(self):
        got = reduce_at(mono((1, 3), (0, 1)), 1)
        assert got == LsiExpr({mono((4,), (2,)): gr(-1)})

    def test_tail_case_with_sigma(self):
        # depth-3 reduction at the front, then the paper's displayed result
        first = reduce_at(mono((1, 3, 2), (0, 1, 1)), 1)
        assert first == LsiExpr({mono((4, 2), (2, 1)): gr(-1)})
        got = canonicalize(first)
        assert got == LsiExpr({mono((6,), (4,)): gr("-1/2"),
                               mono((4,), (2,), pi=2): gr("1/18")})

    def test_middle_position(self):
        got = reduce_at(mono((2, 1, 3), (1, 0, 1)), 2)
        assert got == LsiExpr({mono((3, 3), (2, 1)): GR_ONE,
                               mono((2, 4), (1, 2)): gr(-1)})

    def test_not_applicable(self):
        with pytest.raises(ValueError, match="not applicable"):
            reduce_at(mono((3,), (0,)), 1)
        with pytest.raises(ValueError, match="not applicable"):
            reduce_at(mono((2,), (1,)), 2)

    def test_weight_preserved(self):
        m = mono((2, 1, 3), (1, 0, 1), pi=2)
        for mm, _ in reduce_at(m, 1).terms():
            assert mm.weight == m.weight


class TestCanonicalize:
    def test_paper_triple(self):
        got = canonicalize(LsiExpr.of_monomial(mono((2, 1, 3), (1, 0, 1))))
        assert got == LsiExpr({mono((6,), (4,)): gr("1/6")})
        got = canonicalize(LsiExpr.of_monomial(mono((1, 2, 3), (0, 1, 1))))
        assert got == LsiExpr({mono((6,), (4,)): gr("1/3")})

    def test_fixpoint_on_canonical(self):
        e = LsiExpr({mono((3, 2), (0, 0)): gr("5/7")})
        assert canonicalize(e) == e

    def test_shuffle_then_canonicalize_example(self):
        prod = shuffle(mono((1, 3), (0, 1)), mono((2,), (1,)))
        got = canonicalize(prod)
        assert got == LsiExpr({mono((4,), (2,), pi=2): gr("1/18")})

    def _random_monomial(self, rng, max_weight=8):
        while True:
            depth = rng.randint(1, 3)
            ks = [rng.randint(1, 4) for _ in range(depth)]
            if sum(ks) > max_weight:
                continue
            ls = [rng.randint(0, k - 1) for k in ks]
            return mono(ks, ls, pi=rng.randint(0, 1))

    def test_confluence_leftmost_vs_rightmost(self):
        rng = random.Random(20240331)
        checked = 0
        while checked < 120:
            m = self._random_monomial(rng)
            if m.is_canonical:
                continue
            e = LsiExpr.of_monomial(m, gr("3/5", "-2/7"))
            assert canonicalize(e, "leftmost") == canonicalize(e, "rightmost")
            checked += 1

    def test_result_is_canonical_and_weight_homogeneous(self):
        rng = random.Random(99)
        for _ in range(60):
            m = self._random_monomial(rng)
            out = canonicalize(LsiExpr.of_monomial(m))
            for mm, _ in out.terms():
                assert mm.is_canonical or mm.is_pure
                assert mm.weight == m.weight


class TestMultiply:
    def test_unit(self):
        e = canonicalize(shuffle(mono((2, 3), (0, 1)), mono((2,), (0,))))
        assert multiply(e, LsiExpr.unit()) == e
        assert multiply(LsiExpr.unit(), e) == e

    def test_example_pair(self):
        a = LsiExpr.of_monomial(mono((1, 3), (0, 1)))
        b = LsiExpr.of_monomial(mono((2,), (1,)))
        assert multiply(a, b) == LsiExpr({mono((4,), (2,), pi=2): gr("1/18")})

    def _random_expr(self, rng):
        terms = {}
        for _ in range(rng.randint(1, 2)):
            depth = rng.randint(0, 2)
            ks = [rng.randint(1, 3) for _ in range(depth)]
            if sum(ks) > 5:
                continue
            ls = [rng.randint(0, k - 1) for k in ks]
            terms[mono(ks, ls)] = gr(rng.randint(-3, 3), rng.randint(-2, 2))
        return LsiExpr(terms)

    def test_commutative_associative(self):
        rng = random.Random(4242)
        for _ in range(25):
            a, b, c = (self._random_expr(rng) for _ in range(3))
            assert multiply(a, b) == multiply(b, a)
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    def test_weight_homogeneity(self):
        a = canonicalize(shuffle(mono((2,), (0,)), mono((3,), (1,))))
        b = LsiExpr({mono((2,), (0,), pi=1): gr(2), mono((3,), (0,)): gr(0, 1)})
        prod = multiply(a, b)
        assert a.weight() == 5 and b.weight() == 3
        assert prod.is_weight_homogeneous() and prod.weight() == 8

    def test_conjugate_distributes(self):
        rng = random.Random(11)
        for _ in range(20):
            a, b = self._random_expr(rng), self._random_expr(rng)
            assert conjugate(multiply(a, b)) == multiply(conjugate(a), conjugate(b))


class TestRealImag:
    def test_split_and_reassemble(self):
        e = LsiExpr({mono((3,), (0,)): gr("1/2", "-1/3"),
                     PURE(3): gr(0, "7/216")})
        re, im = real_part(e), imag_part(e)
        assert re + im.scaled(GR_I) == e

    def test_conjugate_involution(self):
        e = LsiExpr({mono((3,), (1,)): gr(2, 3)})
        assert conjugate(conjugate(e)) == e

    def test_rational_coeffs_rejects_complex(self):
        e = LsiExpr({PURE(2): gr(1, 1)})
        with pytest.raises(ValueError):
            rational_coeffs(e)


class TestExprContainer:
    def test_zero_coefficients_dropped(self):
        e = LsiExpr({PURE(2): gr(0)})
        assert not e and len(e) == 0

    def test_add_cancels(self):
        a = LsiExpr({PURE(2): gr(1)})
        b = LsiExpr({PURE(2): gr(-1)})
        assert (a + b) == LsiExpr.zero()

    def test_terms_sorted_deterministically(self):
        e = LsiExpr({PURE(5): gr(1), mono((5,), (1,)): gr(1),
                     mono((2, 3), (0, 0)): gr(1)})
        names = [m for m, _ in e.terms()]
        assert names == [mono((2, 3), (0, 0)), mono((5,), (1,)), PURE(5)]

    def test_weight_helpers(self):
        e = LsiExpr({PURE(4): gr(1), mono((4,), (0,)): gr(1)})
        assert e.is_weight_homogeneous() and e.weight() == 4
        bad = LsiExpr({PURE(4): gr(1), PURE(3): gr(1)})
        assert not bad.is_weight_homogeneous()
