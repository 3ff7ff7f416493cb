"""The fusion ring: orbit basis, truncated tensor product, Verlinde
classes, ideal membership, the cyclic-generator matrix, the averaged
distribution pairing, and the torus pushforward.

Two independent routes to the structure constants live here: the
reflection route (tensor decomposition followed by shifted orbit
reduction) and the character route (exact evaluation at the Verlinde
classes, solved back through the character matrix over a cyclotomic
field).  Tests require them to agree; neither is ever silently replaced
by the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .affineweyl import box_reduce, orbit_normal_form, enumerate_basis_orbits
from .cyclo import (
    CyclotomicInt,
    eval_character_at_point,
    eval_weight_combination_at_point,
)
from .errors import NotATorus, NotPrimitive
from .rootdata import (
    RootDatum,
    dot,
    tensor_decompose,
    vec_add,
    vec_sub,
    weight_multiplicities,
    weyl_group_elements,
)
from .twist import Twisting, f_epsilon_points
from .zlattice import IntMatrix, coset_representatives


class KClass:
    """A finitely supported integer combination of canonical orbit
    representatives."""

    __slots__ = ("support",)

    def __init__(self, support=None):
        cleaned = {}
        for k, v in (support or {}).items():
            if v:
                cleaned[tuple(k)] = int(v)
        object.__setattr__(self, "support", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("KClass is immutable")

    @classmethod
    def zero(cls):
        return cls({})

    def is_zero(self):
        return not self.support

    def __add__(self, other):
        out = dict(self.support)
        for k, v in other.support.items():
            out[k] = out.get(k, 0) + v
        return KClass(out)

    def __neg__(self):
        return KClass({k: -v for k, v in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return KClass({k: c * v for k, v in self.support.items()})

    def __eq__(self, other):
        return isinstance(other, KClass) and self.support == other.support

    __hash__ = None

    def items(self):
        return sorted(self.support.items())

    def __repr__(self):
        return f"KClass({dict(self.items())!r})"


@dataclass(frozen=True)
class VerlindeClass:
    """A free Weyl orbit of regular points solving b(x) = lambda_eps."""

    point: tuple          # lexicographically least orbit member, coords in [0,1)
    orbit_size: int


def _weyl_fixes_point(w, x):
    return all(Fraction(c) % 1 == 0 for c in vec_sub(w.apply_coweight(x), x))


def verlinde_classes(rd: RootDatum, tau: Twisting):
    """One representative per free Weyl orbit of regular points of F_eps."""
    group = weyl_group_elements(rd)
    classes = {}
    for x in f_epsilon_points(rd, tau):
        if any(_weyl_fixes_point(w, x) for w in group if not w.is_identity()):
            continue
        orbit = {tuple(Fraction(c) % 1 for c in w.apply_coweight(x)) for w in group}
        classes[min(orbit)] = len(orbit)
    return [VerlindeClass(p, classes[p]) for p in sorted(classes)]


class FusionRing:
    """Basis and products of the twisted K-group of a group acting on itself.

    Constructible for any non-degenerate twisting; the module structure
    (class_from_weight, mult_by_U_matrix) is always available, while the
    ring structure (fusion_product, structure constants) needs a primitive
    twisting and raises NotPrimitive otherwise.
    """

    def __init__(self, rd: RootDatum, tau: Twisting):
        self.rd = rd
        self.tau = tau
        self.basis = tuple(enumerate_basis_orbits(rd, tau))
        self.index = {rep: i for i, rep in enumerate(self.basis)}
        self.rho_tilde = rd.rho_tilde
        self.transversal = tuple(self._transversal_weight(rep) for rep in self.basis)
        self.signs = []
        for lam in self.transversal:
            red = orbit_normal_form(rd, tau, vec_add(lam, self.rho_tilde))
            assert not red.is_zero
            self.signs.append(red.sign)
        self.signs = tuple(self.signs)
        unit = orbit_normal_form(rd, tau, self.rho_tilde)
        if self.basis:
            assert not unit.is_zero, "the shift class must survive in a nonzero ring"
            self.unit_index = self.index[unit.representative]
        else:
            # the whole group can vanish (e.g. the smallest nonzero twists)
            assert unit.is_zero
            self.unit_index = None
        self._product_cache = {}
        self._classes = None

    # -- basis bookkeeping -------------------------------------------------

    def _transversal_weight(self, rep, radius=3):
        """The dominant weight lam with lam + rho_tilde in the orbit of rep,
        chosen as the orbit element nearest the box origin (L1 in b-inverse
        coordinates, ties broken lexicographically)."""
        rd, tau = self.rd, self.tau
        best = None
        for w in weyl_group_elements(rd):
            base = w.apply(rep)
            for pi in _box_points(rd.rank, radius):
                nu = vec_add(base, tau.apply_b(pi))
                lam = vec_sub(nu, self.rho_tilde)
                if not rd.is_dominant(lam):
                    continue
                size = sum(abs(c) for c in tau.b_inverse_apply(nu))
                key = (size, nu)
                if best is None or key < best[0]:
                    best = (key, lam)
        if best is None:
            raise ValueError(f"no dominant transversal weight found for orbit {rep}")
        return best[1]

    def verlinde_points(self):
        if self._classes is None:
            self._classes = verlinde_classes(self.rd, self.tau)
        return self._classes

    def basis_coefficients(self, kc: KClass):
        """Coordinates of a KClass in the distinguished basis (the images of
        the transversal irreducibles)."""
        out = [0] * len(self.basis)
        for rep, c in kc.support.items():
            i = self.index[rep]
            out[i] = c * self.signs[i]
        return out

    def class_from_index(self, i):
        return KClass({self.basis[i]: self.signs[i]})

    # -- products ------------------------------------------------------------

    def fusion_product(self, a, b) -> KClass:
        return fusion_product(self, a, b)

    def structure_constants(self):
        """The full tensor N[a][b][c] on the distinguished basis (cached,
        idempotent fill)."""
        n = len(self.basis)
        out = []
        for a in range(n):
            row = []
            for b in range(n):
                row.append(tuple(self.basis_coefficients(self.fusion_product(a, b))))
            out.append(row)
        return out


def _box_points(rank, radius):
    pts = [()]
    for _ in range(rank):
        pts = [p + (v,) for p in pts for v in range(-radius, radius + 1)]
    return pts


def class_from_weight(ring: FusionRing, lam) -> KClass:
    """Image of the irreducible with highest weight lam under multiplication
    by the cyclic generator: the shifted orbit reduction of lam + rho_tilde."""
    lam = ring.rd.check_weight(lam)
    if not ring.rd.is_dominant(lam):
        raise ValueError("class_from_weight needs a dominant weight")
    red = orbit_normal_form(ring.rd, ring.tau, vec_add(lam, ring.rho_tilde))
    if red.is_zero:
        return KClass.zero()
    return KClass({red.representative: red.sign})


def class_from_combination(ring: FusionRing, combo) -> KClass:
    out = KClass.zero()
    for lam, c in sorted(combo.items()):
        out = out + class_from_weight(ring, lam).scale(c)
    return out


def fusion_product(ring: FusionRing, a, b) -> KClass:
    """Product of two basis elements: tensor-decompose the transversal
    weights, then push each summand back through the shifted reduction."""
    if not ring.tau.is_primitive():
        raise NotPrimitive("the twisting is not primitive in the implemented "
                           "normal form; only the module structure is defined")
    key = (min(a, b), max(a, b))
    cached = ring._product_cache.get(key)
    if cached is not None:
        return cached
    lam, mu = ring.transversal[a], ring.transversal[b]
    out = KClass.zero()
    for nu, mult in tensor_decompose(ring.rd, lam, mu).items():
        out = out + class_from_weight(ring, nu).scale(mult)
    ring._product_cache[key] = out
    return out


def module_action(ring: FusionRing, combo, kc: KClass) -> KClass:
    """The representation-ring action on a KClass, by convolution with the
    full weight system of the virtual character {dominant weight: coeff}."""
    out = KClass.zero()
    for lam, c in sorted(combo.items()):
        if not c:
            continue
        for nu, m in sorted(weight_multiplicities(ring.rd, lam).items()):
            for rep, k in kc.items():
                red = orbit_normal_form(ring.rd, ring.tau, vec_add(rep, nu))
                if not red.is_zero:
                    out = out + KClass({red.representative: red.sign}).scale(c * m * k)
    return out


def verlinde_ideal_member(ring: FusionRing, combo) -> bool:
    """Exact test: does the virtual character vanish at every Verlinde class?"""
    for vc in ring.verlinde_points():
        if not eval_weight_combination_at_point(ring.rd, combo, vc.point).is_zero():
            return False
    return True


def ideal_generator_candidates(ring: FusionRing, bound):
    """Dominant weights of height up to `bound` lying in the vanishing ideal."""
    return [lam for lam in dominant_weights_up_to(ring.rd, bound)
            if verlinde_ideal_member(ring, {lam: 1})]


def dominant_weights_up_to(rd: RootDatum, bound):
    """All dominant weights whose coordinates sum (in absolute value) to at
    most `bound`; deterministic order."""
    out = [()]
    for _ in range(rd.rank):
        out = [p + (v,) for p in out for v in range(-bound, bound + 1)]
    return sorted(w for w in out
                  if sum(abs(c) for c in w) <= bound and rd.is_dominant(w))


def mult_by_U_matrix(ring: FusionRing) -> IntMatrix:
    """The matrix of the shifted reduction on the transversal, in the orbit
    basis; a signed permutation (determinant +-1) exactly when
    multiplication by the generator is an isomorphism."""
    n = len(ring.basis)
    cols = []
    for lam in ring.transversal:
        kc = class_from_weight(ring, lam)
        col = [0] * n
        for rep, c in kc.support.items():
            col[ring.index[rep]] = c
        cols.append(col)
    return IntMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])


# -- the averaged distribution pairing ---------------------------------------

def _canonical_coset_values(rd, tau, f):
    """Push an arbitrary weight-keyed function to box-canonical coset
    representatives via translation equivariance."""
    values = {}
    for lam, v in sorted(f.items()):
        lam = rd.check_weight(lam)
        rep, pi = box_reduce(tau, lam)
        sign = tau.translation_sign(pi)
        if rep in values and values[rep] != sign * v:
            raise ValueError(f"inconsistent equivariant values on the coset of {rep}")
        values[rep] = sign * v
    return values


def _coset_is_regular(rd, tau, lam):
    for w in weyl_group_elements(rd):
        if w.is_identity():
            continue
        diff = vec_sub(w.apply(lam), lam)
        if all(x.denominator == 1 for x in tau.b_inverse_apply(diff)):
            return False
    return True


def delta_eval(rd: RootDatum, tau: Twisting, f, g, regular_only=False) -> Fraction:
    """The averaged pairing (1/|F|) sum f(lam) zeta^{<g - lam, x>} over coset
    representatives lam and the points x of F_eps.

    `f` maps weights to integers on (any) coset representatives and is
    extended by translation equivariance; for equivariant data the result
    equals the evaluation f(g).  With regular_only=True both sums restrict
    to the Weyl-regular part, which changes nothing when f is fully
    equivariant."""
    g = rd.check_weight(g)
    values = _canonical_coset_values(rd, tau, f)
    reps = [box_reduce(tau, lam)[0] for lam in coset_representatives(tau.b)]
    points = f_epsilon_points(rd, tau)
    if regular_only:
        group = weyl_group_elements(rd)
        reps = [lam for lam in reps if _coset_is_regular(rd, tau, lam)]
        points = [x for x in points
                  if not any(_weyl_fixes_point(w, x) for w in group if not w.is_identity())]
    # common cyclotomic order for all pairings
    m = 1
    scaled = []
    for x in points:
        q = lcm(*[c.denominator for c in x]) if x else 1
        scaled.append((q, tuple(int(c * q) for c in x)))
        m = lcm(m, q)
    counts = [0] * m
    lifted = [(m // q, y) for q, y in scaled]
    for lam in reps:
        v = values.get(lam, 0)
        if not v:
            continue
        diff = vec_sub(g, lam)
        for k, y in lifted:
            counts[(dot(diff, y) * k) % m] += v
    total = CyclotomicInt(m, counts)
    if not total.is_integer():
        raise ValueError("averaged pairing did not reduce to an integer")
    return Fraction(total.integer_value(), tau.order_F())


def equivariant_function(rd: RootDatum, tau: Twisting, kc: KClass):
    """The equivariant extension of a KClass, as a callable on weights."""
    def value(lam):
        red = orbit_normal_form(rd, tau, lam)
        if red.is_zero:
            return 0
        return red.sign * kc.support.get(red.representative, 0)
    return value


# -- tori ---------------------------------------------------------------------

def torus_pushforward(rd: RootDatum, tau: Twisting, lam) -> KClass:
    """Image of a character under the wrong-way map for a torus: the signed
    coset class through lam."""
    if not rd.is_torus():
        raise NotATorus("pushforward in this form is defined for torus data only")
    lam = rd.check_weight(lam)
    red = orbit_normal_form(rd, tau, lam)
    return KClass({red.representative: red.sign})


# -- the character-table route to the structure constants ---------------------

def character_matrix(ring: FusionRing):
    """chi_a(x_j) for the transversal weights at the Verlinde classes."""
    pts = [vc.point for vc in ring.verlinde_points()]
    if len(pts) != len(ring.basis):
        raise ValueError("class count does not match basis size")
    rows = [[eval_character_at_point(ring.rd, lam, x) for x in pts]
            for lam in ring.transversal]
    return rows, pts


def structure_constants_via_characters(ring: FusionRing):
    """Solve for the structure constants from exact character values at the
    Verlinde classes; independent of the reflection route.

    The character matrix is inverted once over the cyclotomic field; each
    product then costs only integer polynomial arithmetic."""
    from .cyclo import cyclotomic_polynomial, invert_field_matrix, poly_divmod_exact, poly_mul

    rows, pts = character_matrix(ring)
    n = len(ring.basis)
    order = 1
    for row in rows:
        for v in row:
            order = lcm(order, v.order)
    phi = cyclotomic_polynomial(order)
    matrix = [[rows[c][j] for c in range(n)] for j in range(n)]  # row j: over c
    inverse = invert_field_matrix(matrix, order)
    # integer-scaled inverse: row c as (integer polys, common denominator)
    scaled = []
    for c in range(n):
        den = 1
        for v in inverse[c]:
            for coeff in v.coeffs:
                den = lcm(den, coeff.denominator)
        polys = [tuple(int(coeff * den) for coeff in v.coeffs) for v in inverse[c]]
        scaled.append((den, polys))
    values = [[v.lift(order).coeffs for v in row] for row in rows]
    out = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            rhs = [poly_divmod_exact(poly_mul(values[a][j], values[b][j]), phi)[1]
                   for j in range(n)]
            coeffs = []
            for c in range(n):
                den, polys = scaled[c]
                acc = ()
                for j in range(n):
                    term = poly_mul(polys[j], rhs[j])
                    m = max(len(acc), len(term))
                    acc = tuple((acc[i] if i < len(acc) else 0)
                                + (term[i] if i < len(term) else 0) for i in range(m))
                acc = poly_divmod_exact(acc, phi)[1]
                if len(acc) > 1 or (acc and acc[0] % den):
                    raise ValueError("character route produced a non-integer")
                coeffs.append(acc[0] // den if acc else 0)
            out[a][b] = out[b][a] = tuple(coeffs)
    return out
