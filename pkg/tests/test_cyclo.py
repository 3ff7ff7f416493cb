import random
from fractions import Fraction

from vkt.cyclo import (
    CyclotomicInt,
    cyclotomic_polynomial,
    eval_character_at_point,
    eval_weight_at_point,
    eval_weight_combination_at_point,
    poly_divmod_exact,
    poly_mul,
    solve_field_system,
)
from vkt.rootdata import root_datum_from_spec


def test_cyclotomic_small_orders():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_product_is_xm_minus_1():
    for m in (1, 2, 6, 10, 12, 30):
        prod = (1,)
        for d in range(1, m + 1):
            if m % d == 0:
                prod = poly_mul(prod, cyclotomic_polynomial(d))
        assert prod == tuple([-1] + [0] * (m - 1) + [1])


def test_degree_is_euler_phi():
    def phi(m):
        return sum(1 for k in range(1, m + 1) if _gcd(k, m) == 1)

    for m in range(1, 40):
        assert len(cyclotomic_polynomial(m)) - 1 == phi(m)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_root_power_identities():
    z = CyclotomicInt.root_power(5, 1)
    acc = CyclotomicInt.integer(1)
    total = CyclotomicInt.zero()
    for _ in range(5):
        total = total + acc
        acc = acc * z
    assert total.is_zero()  # 1 + z + z^2 + z^3 + z^4 = 0
    assert acc == 1  # z^5 = 1


def test_minus_one_and_order_mixing():
    assert CyclotomicInt.root_power(2, 1) == CyclotomicInt.integer(-1)
    assert CyclotomicInt.root_power(6, 2) == CyclotomicInt.root_power(3, 1)
    s = CyclotomicInt.root_power(6, 1) + CyclotomicInt.root_power(6, 5)
    assert s == 1  # 2*cos(pi/3)


def test_ring_matches_complex_shadow():
    rng = random.Random(11)
    for _ in range(40):
        m1 = rng.choice([2, 3, 4, 6, 8, 12])
        m2 = rng.choice([2, 3, 4, 6, 8, 12])
        a = CyclotomicInt(m1, [rng.randint(-3, 3) for _ in range(m1)])
        b = CyclotomicInt(m2, [rng.randint(-3, 3) for _ in range(m2)])
        for exact, approx in (
            (a + b, a.to_complex() + b.to_complex()),
            (a * b, a.to_complex() * b.to_complex()),
            (a - b, a.to_complex() - b.to_complex()),
        ):
            assert abs(exact.to_complex() - approx) < 1e-9


def test_is_zero_exact():
    # zeta_8^2 - i = 0 exactly
    a = CyclotomicInt.root_power(8, 2) - CyclotomicInt.root_power(4, 1)
    assert a.is_zero()
    b = CyclotomicInt.root_power(8, 1) - CyclotomicInt.root_power(4, 1)
    assert not b.is_zero()


def test_eval_weight_trivial_and_u1():
    u1 = root_datum_from_spec("U(1)")
    assert eval_weight_at_point(u1, (0,), (Fraction(1, 3),)) == 1
    assert eval_weight_at_point(u1, (1,), (Fraction(1, 4),)) == CyclotomicInt.root_power(4, 1)


def test_eval_weight_su2():
    su2 = root_datum_from_spec("SU(2)")
    # <2 omega, (1/6) alpha_vee> = 1/3
    v = eval_weight_at_point(su2, (2,), (Fraction(1, 6),))
    assert v == CyclotomicInt.root_power(6, 2)
    assert v == CyclotomicInt.root_power(3, 1)


def test_eval_character_su2():
    su2 = root_datum_from_spec("SU(2)")
    x = (Fraction(1, 4),)
    assert eval_character_at_point(su2, (0,), x) == 1
    assert eval_character_at_point(su2, (1,), x).is_zero()  # i + (-i)
    # rho_4 vanishes at the twist-5 points j/10, j = 1..4
    for j in range(1, 5):
        val = eval_character_at_point(su2, (4,), (Fraction(j, 10),))
        assert val.is_zero()
    assert not eval_character_at_point(su2, (1,), (Fraction(1, 10),)).is_zero()


def test_eval_character_weyl_invariant_in_x():
    rd = root_datum_from_spec("SU(3)")
    from vkt.rootdata import weyl_group_elements
    x = (Fraction(1, 5), Fraction(2, 7))
    base = eval_character_at_point(rd, (1, 1), x)
    for w in weyl_group_elements(rd):
        wx = w.apply_coweight(x)
        assert eval_character_at_point(rd, (1, 1), wx) == base


def test_eval_character_numerical_shadow():
    rd = root_datum_from_spec("Spin(5)")
    x = (Fraction(1, 7), Fraction(2, 5))
    exact = eval_character_at_point(rd, (1, 1), x).to_complex()
    from vkt.rootdata import weight_multiplicities
    import cmath
    approx = sum(m * cmath.exp(2j * cmath.pi * (nu[0] * (1 / 7) + nu[1] * (2 / 5)))
                 for nu, m in weight_multiplicities(rd, (1, 1)).items())
    assert abs(exact - approx) < 1e-9


def test_weight_combination():
    su2 = root_datum_from_spec("SU(2)")
    x = (Fraction(1, 10),)
    combo = {(4,): 1, (0,): -1}
    val = eval_weight_combination_at_point(su2, combo, x)
    direct = eval_character_at_point(su2, (4,), x) - eval_character_at_point(su2, (0,), x)
    assert val == direct


def test_poly_divmod_exact():
    # (x^2+1)(x+2) + 3 = x^3 + 2x^2 + x + 5
    p = (5, 1, 2, 1)
    q, r = poly_divmod_exact(p, (1, 0, 1))
    assert q == (2, 1)
    assert r == (3,)


def test_solve_field_system():
    # over Q(zeta_4): [[1, i], [i, 1]] x = [1 + 2i, 2 + i] has solution (1, 2)
    i = CyclotomicInt.root_power(4, 1)
    one = CyclotomicInt.integer(1)
    two = CyclotomicInt.integer(2)
    m = [[one, i], [i, one]]
    rhs = [one + two * i, two + i]
    sol = solve_field_system(m, rhs, 4)
    assert sol[0].as_rational() == 1
    assert sol[1].as_rational() == 2
