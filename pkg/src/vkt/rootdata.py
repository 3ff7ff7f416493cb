"""Root data for connected compact Lie groups with torsion-free pi_1.

Conventions, fixed once for the whole package:

* The weight lattice and the coweight lattice both carry fixed bases of
  rank n, dual to each other, so the canonical pairing of a weight with a
  coweight is the dot product of coordinate tuples.
* Weights and coweights are plain integer tuples; rational vectors are
  tuples of fractions.Fraction.
* A Weyl element acts on weight coordinates by its `matrix` and on
  coweight coordinates by the inverse transpose (`comatrix`).
* Named groups are built as (simply connected) x (torus): the coweight
  basis of a simple factor consists of its simple coroots, the weight
  basis of its fundamental weights, and the torus block comes last.

Cartan matrices follow the convention a[i][j] = <alpha_j, alpha_i^vee>,
so on a simply connected factor the j-th simple root has coordinates
(a[0][j], ..., a[n-1][j]).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import GroupTooLarge, InvalidCartanData, NotTorsionFreePi1, SpecParseError
from .zlattice import (
    IntMatrix,
    cokernel_structure,
    inverse_rational,
    kernel_basis,
    matvec_fraction,
)


def dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vec_neg(x):
    return tuple(-a for a in x)


def vec_scale(c, x):
    return tuple(c * a for a in x)


def as_weight(rank, coords):
    """Validate and normalize an integer weight coordinate vector."""
    out = []
    for x in coords:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integral weight coordinate {x}")
            x = x.numerator
        out.append(int(x))
    if len(out) != rank:
        raise ValueError(f"weight length {len(out)} != rank {rank}")
    return tuple(out)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: its action on weight coordinates plus a word.

    `word` multiplies left-to-right (word (i, j) means s_i s_j) and is a
    shortest expression for enumerated elements; `determinant` is always
    (-1)**len(word).
    """

    matrix: IntMatrix
    comatrix: IntMatrix          # action on coweight coordinates
    word: tuple
    determinant: int

    def apply(self, weight):
        return self.matrix.apply(weight)

    def apply_coweight(self, coweight):
        return self.comatrix.apply(coweight)

    def is_identity(self):
        return not self.word


@dataclass(frozen=True)
class SimpleFactor:
    """One simple factor: which simple roots belong to it, plus derived data.

    On a split (simply connected x torus) datum, `indices` are also the
    coordinate positions of the factor's block.
    """

    name: str
    indices: tuple
    cartan: IntMatrix
    kappa: IntMatrix             # basic W-invariant pairing on the block
    dual_coxeter: int


@dataclass(frozen=True)
class DominantResult:
    """Outcome of moving a weight into the dominant chamber."""

    weight: tuple
    element: WeylElement
    sign: int
    on_wall: bool


class RootDatum:
    """Immutable root datum; construct via `root_datum_from_spec` or the
    `from_cartan` / `from_root_data` classmethods."""

    def __init__(self, rank, simple_roots, simple_coroots, factor_blocks,
                 torus_indices, kappa_torus, split_form, spec_text=""):
        self.rank = rank
        self.simple_roots = tuple(tuple(r) for r in simple_roots)
        self.simple_coroots = tuple(tuple(c) for c in simple_coroots)
        self.torus_indices = tuple(torus_indices)
        self.kappa_torus = kappa_torus
        self.split_form = split_form
        self.spec_text = spec_text
        self._validate()
        self._derive(factor_blocks)
        self._weyl_cache = None
        self._weyl_lookup = None
        self._weight_system_cache = {}

    # -- construction ---------------------------------------------------

    @classmethod
    def from_cartan(cls, cartan_rows, torus_rank=0, torus_form=None, spec_text=""):
        """Simply connected group for a finite-type Cartan matrix, times a torus.

        Coordinates: fundamental weights of the semisimple part first, then
        the torus block.
        """
        m = len(cartan_rows)
        _validate_cartan(cartan_rows)
        if torus_rank < 0:
            raise InvalidCartanData("torus_rank must be >= 0")
        n = m + torus_rank
        roots = []
        coroots = []
        for j in range(m):
            roots.append(tuple(cartan_rows[i][j] for i in range(m)) + (0,) * torus_rank)
            coroots.append(tuple(int(i == j) for i in range(m)) + (0,) * torus_rank)
        if torus_form is None:
            kt = IntMatrix.identity(torus_rank)
        else:
            kt = IntMatrix.from_rows(torus_form) if torus_rank else IntMatrix.zeros(0, 0)
            if kt.rows != torus_rank or not kt.is_symmetric():
                raise InvalidCartanData("torus_form must be a symmetric matrix of the torus rank")
        return cls(n, roots, coroots, _components(cartan_rows),
                   tuple(range(m, n)), kt, split_form=True, spec_text=spec_text)

    @classmethod
    def from_root_data(cls, rank, simple_roots, simple_coroots, spec_text=""):
        """Explicit lattices: simple roots in weight coordinates, simple
        coroots in coweight coordinates.  Validated, including torsion-free
        pi_1.  Level-form twists need the split shape; data built this way
        accepts only explicit twisting matrices."""
        m = len(simple_roots)
        if len(simple_coroots) != m:
            raise InvalidCartanData("need as many coroots as roots")
        cartan = [[dot(simple_roots[j], simple_coroots[i]) for j in range(m)]
                  for i in range(m)]
        _validate_cartan(cartan)
        return cls(rank, simple_roots, simple_coroots, _components(cartan),
                   (), IntMatrix.zeros(0, 0), split_form=False, spec_text=spec_text)

    # -- validation and derived structure --------------------------------

    def _validate(self):
        n = self.rank
        for r in self.simple_roots + self.simple_coroots:
            if len(r) != n:
                raise InvalidCartanData("root/coroot length does not match the rank")
        # pi_1 torsion: (coweight lattice / coroot lattice) must be free
        if self.simple_coroots:
            cols = IntMatrix.from_rows(
                [[c[i] for c in self.simple_coroots] for i in range(n)])
            torsion = cokernel_structure(cols).invariant_factors
            if torsion:
                raise NotTorsionFreePi1(
                    f"coweight lattice / coroot lattice has torsion {list(torsion)}")

    def _derive(self, factor_blocks):
        m = len(self.simple_roots)
        cartan = [[dot(self.simple_roots[j], self.simple_coroots[i]) for j in range(m)]
                  for i in range(m)]
        self.cartan = IntMatrix.from_rows(cartan) if m else IntMatrix.zeros(0, 0)
        self._cartan_inv = inverse_rational(self.cartan) if m else []

        # simple reflection matrices on weights and coweights
        gens = []
        for i in range(m):
            a, av = self.simple_roots[i], self.simple_coroots[i]
            mat = IntMatrix(self.rank, self.rank,
                            [int(r == c) - a[r] * av[c]
                             for r in range(self.rank) for c in range(self.rank)])
            comat = IntMatrix(self.rank, self.rank,
                              [int(r == c) - av[r] * a[c]
                               for r in range(self.rank) for c in range(self.rank)])
            gens.append(WeylElement(mat, comat, (i,), -1))
        self.generators = tuple(gens)
        self.identity_element = WeylElement(
            IntMatrix.identity(self.rank), IntMatrix.identity(self.rank), (), 1)

        # full root system as (root, coroot) pairs, closed under reflections
        pairs = {(self.simple_roots[i], self.simple_coroots[i]) for i in range(m)}
        frontier = list(pairs)
        while frontier:
            nxt = []
            for root, coroot in frontier:
                for g in gens:
                    p = (g.apply(root), g.apply_coweight(coroot))
                    if p not in pairs:
                        pairs.add(p)
                        nxt.append(p)
            frontier = nxt
        self.root_pairs = tuple(sorted(pairs))
        positive = []
        for r, c in self.root_pairs:
            coords = self._root_coords(r)
            if all(x >= 0 for x in coords):
                positive.append(((r, c), coords))
        if 2 * len(positive) != len(self.root_pairs):
            raise InvalidCartanData("root system is not symmetric under negation")
        self.positive_root_pairs = tuple(p for p, _ in positive)

        self.rho2 = tuple(sum(r[i] for r, _ in self.positive_root_pairs)
                          for i in range(self.rank))
        self.rho = tuple(Fraction(x, 2) for x in self.rho2)

        # dual Coxeter numbers per factor, from the factor's highest root
        factors = []
        for comp in factor_blocks:
            comp = tuple(comp)
            sub = [[cartan[i][j] for j in comp] for i in comp]
            best = None
            for (r, cv), coords in positive:
                if any(coords[j] != 0 and j not in comp for j in range(m)):
                    continue
                h = sum(coords)
                if best is None or h > best[0]:
                    best = (h, cv)
            pairing = dot(self.rho, best[1])
            assert pairing.denominator == 1
            factors.append(SimpleFactor(
                name=_classify(sub), indices=comp,
                cartan=IntMatrix.from_rows(sub), kappa=_basic_pairing(sub),
                dual_coxeter=1 + pairing.numerator))
        self.factors = tuple(factors)

        self.rho_tilde, self.rho_tilde_note = self._pick_rho_tilde()

        # W-invariant rational inner product on weight coordinates:
        # coroot-orbit sum on the root span plus a plain dot product on the
        # W-fixed complement (any such choice works for the weight recursion).
        # Stored as one integer Gram matrix over a common denominator.
        inv_basis = self.invariant_lattice_basis()
        cols = [list(r) for r in self.simple_roots] + [list(v) for v in inv_basis]
        if len(cols) != self.rank:
            raise InvalidCartanData("roots and invariants do not span the weight lattice")
        if self.rank:
            S = IntMatrix.from_rows(cols).transpose()
            basis_inv = inverse_rational(S)  # coords in [roots | invariants]
            gram = [[Fraction(0)] * self.rank for _ in range(self.rank)]
            for _, cv in self.positive_root_pairs:
                for i in range(self.rank):
                    if cv[i]:
                        for j in range(self.rank):
                            gram[i][j] += cv[i] * cv[j]
            for k in range(m, self.rank):
                for i in range(self.rank):
                    if basis_inv[k][i]:
                        for j in range(self.rank):
                            gram[i][j] += basis_inv[k][i] * basis_inv[k][j]
            den = 1
            for row in gram:
                for v in row:
                    den = lcm(den, v.denominator)
            self._gram_den = den
            self._gram_int = [[int(v * den) for v in row] for row in gram]
        else:
            self._gram_den = 1
            self._gram_int = []
        self._num_simple = m

    def _root_coords(self, root):
        """Coordinates of a root in the simple-root basis (rational tuple)."""
        p = [dot(root, cv) for cv in self.simple_coroots]
        return matvec_fraction(self._cartan_inv, p)

    def _pick_rho_tilde(self):
        if all(x % 2 == 0 for x in self.rho2):
            return tuple(x // 2 for x in self.rho2), "rho"
        # lift: rho + (invariant-lattice vector)/2 that is integral, with the
        # lexicographically least correction pattern
        inv = self.invariant_lattice_basis()
        k = len(inv)
        for mask in range(2 ** k):
            y = [(mask >> i) & 1 for i in range(k)]
            cand2 = list(self.rho2)
            for i, yi in enumerate(y):
                if yi:
                    cand2 = [a + b for a, b in zip(cand2, inv[i])]
            if all(x % 2 == 0 for x in cand2):
                return tuple(x // 2 for x in cand2), f"rho+invariant_correction{tuple(y)}"
        raise InvalidCartanData("no integral representative congruent to rho "
                                "modulo the invariant lattice")

    def invariant_lattice_basis(self):
        """Z-basis of the W-invariant sublattice of the weight lattice."""
        if not self.simple_roots:
            return [tuple(int(i == j) for j in range(self.rank))
                    for i in range(self.rank)]
        rows = []
        for g in self.generators:
            for i in range(self.rank):
                rows.append([g.matrix.at(i, j) - int(i == j) for j in range(self.rank)])
        return kernel_basis(IntMatrix.from_rows(rows))

    # -- basic queries ----------------------------------------------------

    def inner_scaled(self, x, y):
        """The invariant form times the global denominator: an integer for
        integer coordinate vectors."""
        g = self._gram_int
        acc = 0
        for i, xi in enumerate(x):
            if xi:
                gi = g[i]
                acc += xi * sum(gi[j] * yj for j, yj in enumerate(y))
        return acc

    def inner(self, x, y):
        """A W-invariant positive-definite rational form on weight coordinates."""
        acc = self.inner_scaled(x, y)
        if isinstance(acc, Fraction):
            return acc / self._gram_den
        return Fraction(acc, self._gram_den)

    def is_dominant(self, weight):
        return all(dot(weight, cv) >= 0 for cv in self.simple_coroots)

    def is_torus(self):
        return not self.factors

    def positive_roots(self):
        return tuple(r for r, _ in self.positive_root_pairs)

    def positive_coroots(self):
        return tuple(c for _, c in self.positive_root_pairs)

    def check_weight(self, weight):
        return as_weight(self.rank, weight)

    def describe(self):
        return {
            "group": self.spec_text,
            "rank": self.rank,
            "factors": [{"name": f.name, "rank": len(f.indices),
                         "dual_coxeter": f.dual_coxeter} for f in self.factors],
            "torus_rank": self.rank - len(self.simple_roots)
            if not self.split_form else len(self.torus_indices),
            "num_roots": len(self.root_pairs),
            "rho_tilde": list(self.rho_tilde),
            "rho_tilde_choice": self.rho_tilde_note,
        }


# -- named group specs ----------------------------------------------------

_FACTOR_RE = re.compile(r"^(SU|Spin|Sp|U)\((\d+)\)(?:\^(\d+))?$")


def _named_factor(name):
    m = _FACTOR_RE.match(name)
    if not m:
        raise SpecParseError(f"cannot parse group factor {name!r}")
    kind, arg, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
    if kind == "U":
        if arg != 1:
            raise SpecParseError("only U(1) torus factors are supported by name")
        return [("torus", 1)] * power
    if kind == "SU":
        if arg < 2:
            raise SpecParseError("SU(n) needs n >= 2")
        return [("cartan", _cartan_A(arg - 1))] * power
    if kind == "Spin":
        if arg == 5:
            return [("cartan", _cartan_B(2))] * power
        if arg == 7:
            return [("cartan", _cartan_B(3))] * power
        raise SpecParseError("Spin(n) is supported by name only for n in {5, 7}")
    if kind == "Sp":
        if arg < 1:
            raise SpecParseError("Sp(n) needs n >= 1")
        return [("cartan", _cartan_C(arg))] * power
    raise SpecParseError(f"unknown group factor {name!r}")


def _cartan_A(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
             for j in range(n)] for i in range(n)]


def _cartan_B(n):
    a = _cartan_A(n)
    a[n - 1][n - 2] = -2
    return a


def _cartan_C(n):
    if n == 1:
        return [[2]]
    a = _cartan_A(n)
    a[n - 2][n - 1] = -2
    return a


def root_datum_from_spec(spec, torus_form=None):
    """Build a RootDatum from a group description.

    `spec` is either a name like "SU(2) x U(1)^2" or a dict with keys
    `cartan` (list of rows) and optional `torus_rank` / `torus_form`.
    """
    if isinstance(spec, dict):
        known = {"cartan", "torus_rank", "torus_form", "group"}
        extra = set(spec) - known
        if extra:
            raise SpecParseError(f"unknown group spec keys {sorted(extra)}")
        if "group" in spec:
            return root_datum_from_spec(spec["group"], spec.get("torus_form", torus_form))
        if "cartan" not in spec:
            raise SpecParseError("group spec needs either 'group' or 'cartan'")
        return RootDatum.from_cartan(
            spec["cartan"], spec.get("torus_rank", 0), spec.get("torus_form", torus_form),
            spec_text=f"cartan={spec['cartan']}")
    text = spec.strip()
    parts = [p.strip() for p in re.split(r"[x×]", text)] if text else []
    if not parts:
        raise SpecParseError("empty group spec")
    blocks = []
    for part in parts:
        if not part:
            raise SpecParseError(f"empty factor in group spec {text!r}")
        blocks.extend(_named_factor(part))
    cartan_blocks = [b for kind, b in blocks if kind == "cartan"]
    torus_rank = sum(1 for kind, _ in blocks if kind == "torus")
    m = sum(len(b) for b in cartan_blocks)
    cartan = [[0] * m for _ in range(m)]
    off = 0
    for b in cartan_blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                cartan[off + i][off + j] = v
        off += len(b)
    return RootDatum.from_cartan(cartan, torus_rank, torus_form, spec_text=text)


# -- Cartan matrix validation ----------------------------------------------

def _validate_cartan(a):
    n = len(a)
    for i, row in enumerate(a):
        if len(row) != n:
            raise InvalidCartanData("Cartan matrix must be square")
        for j, v in enumerate(row):
            if v != int(v):
                raise InvalidCartanData("Cartan entries must be integers")
            if i == j and v != 2:
                raise InvalidCartanData("Cartan diagonal must be 2")
            if i != j and v > 0:
                raise InvalidCartanData("off-diagonal Cartan entries must be <= 0")
    for i in range(n):
        for j in range(n):
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise InvalidCartanData("Cartan zero pattern must be symmetric")
    d = _symmetrizer(a)
    # positive definiteness of the symmetrization == finite type
    minor = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = minor[k][k]
        if piv <= 0:
            raise InvalidCartanData("Cartan matrix is not of finite type")
        for i in range(k + 1, n):
            c = minor[i][k] / piv
            minor[i] = [x - c * y for x, y in zip(minor[i], minor[k])]


def _symmetrizer(a):
    """Rational d_i > 0 with d_i a_ij = d_j a_ji, long roots normalized to 1."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and a[i][j] != 0:
                    dj = d[i] * Fraction(a[i][j], a[j][i])
                    if d[j] is None:
                        d[j] = dj
                        stack.append(j)
                    elif d[j] != dj:
                        raise InvalidCartanData("Cartan matrix is not symmetrizable")
    for comp in _components(a):
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] /= top
    return d


def _components(a):
    n = len(a)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and a[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _basic_pairing(a):
    """kappa on a simple block: kappa_ij = a_ij / d_j (an integer matrix)."""
    d = _symmetrizer(a)
    n = len(a)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = Fraction(a[i][j]) / d[j]
            if v.denominator != 1:
                raise InvalidCartanData("basic pairing is not integral")
            row.append(v.numerator)
        rows.append(row)
    k = IntMatrix.from_rows(rows)
    if not k.is_symmetric():
        raise InvalidCartanData("basic pairing failed to symmetrize")
    return k


def _classify(a):
    """Human-readable label for a connected finite-type Cartan block."""
    n = len(a)
    if n == 1:
        return "A1"
    pairs = [(abs(a[i][j]), abs(a[j][i])) for i in range(n) for j in range(i + 1, n)
             if a[i][j] != 0]
    degrees = [sum(1 for j in range(n) if j != i and a[i][j] != 0) for i in range(n)]
    if all(p == (1, 1) for p in pairs):
        if max(degrees) <= 2:
            return f"A{n}"
        branch = degrees.index(3)
        leaf_neighbors = sum(1 for j in range(n)
                             if a[branch][j] != 0 and j != branch and degrees[j] == 1)
        return f"D{n}" if leaf_neighbors >= 2 else f"E{n}"
    if any(p in ((1, 2), (2, 1)) for p in pairs):
        if n == 2:
            return "B2"
        for i in range(n):
            for j in range(n):
                if i != j and a[i][j] == -2:
                    # a[i][j] = -2 makes row i the short root's row: a leaf
                    # for B, while C has the long root at the leaf
                    if degrees[i] == 1:
                        return f"B{n}"
                    if degrees[j] == 1:
                        return f"C{n}"
                    return f"F{n}"
    if any(p in ((1, 3), (3, 1)) for p in pairs):
        return "G2"
    return f"simple{n}"


# -- Weyl group ------------------------------------------------------------

def weyl_group_elements(rd: RootDatum, max_order=10 ** 6):
    """All elements of W, enumerated breadth-first from the generators.

    Words are shortest expressions; the result is cached on the datum and
    deterministic (sorted by word length, then word)."""
    if rd._weyl_cache is not None:
        return rd._weyl_cache
    ident = rd.identity_element
    seen = {ident.matrix.entries: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i, g in enumerate(rd.generators):
                mat = g.matrix * w.matrix
                key = mat.entries
                if key not in seen:
                    elem = WeylElement(mat, g.comatrix * w.comatrix,
                                       (i,) + w.word, -w.determinant)
                    seen[key] = elem
                    nxt.append(elem)
                    if len(seen) > max_order:
                        raise GroupTooLarge(f"Weyl group exceeds {max_order} elements")
        frontier = nxt
    elems = sorted(seen.values(), key=lambda e: (len(e.word), e.word))
    rd._weyl_cache = elems
    rd._weyl_lookup = {e.matrix.entries: e for e in elems}
    return elems


def canonical_weyl(rd: RootDatum, matrix: IntMatrix) -> WeylElement:
    """The enumerated WeylElement with the given weight-coordinate matrix."""
    weyl_group_elements(rd)
    try:
        return rd._weyl_lookup[matrix.entries]
    except KeyError:
        raise ValueError("matrix is not an element of the Weyl group") from None


def weyl_compose(rd: RootDatum, w1: WeylElement, w2: WeylElement) -> WeylElement:
    """w1 * w2 as a canonical enumerated element."""
    return canonical_weyl(rd, w1.matrix * w2.matrix)


def dominant_representative(rd: RootDatum, weight) -> DominantResult:
    """Move a weight into the dominant chamber, tracking the Weyl witness.

    The result's `element` w satisfies w(weight) = result.weight; `on_wall`
    is set when the weight is fixed by some reflection (equivalently, its
    dominant representative pairs to zero with some simple coroot)."""
    lam = rd.check_weight(weight)
    word = []
    while True:
        for i, cv in enumerate(rd.simple_coroots):
            if dot(lam, cv) < 0:
                lam = rd.generators[i].apply(lam)
                word.append(i)
                break
        else:
            break
    mat = IntMatrix.identity(rd.rank)
    comat = IntMatrix.identity(rd.rank)
    for i in reversed(word):
        mat = mat * rd.generators[i].matrix
        comat = comat * rd.generators[i].comatrix
    elem = WeylElement(mat, comat, tuple(reversed(word)), (-1) ** len(word))
    on_wall = any(dot(lam, cv) == 0 for cv in rd.simple_coroots)
    return DominantResult(tuple(lam), elem, elem.determinant, on_wall)


# -- representations --------------------------------------------------------

def weyl_dimension(rd: RootDatum, lam):
    """Dimension of the irreducible with dominant highest weight lam."""
    lam = rd.check_weight(lam)
    num = Fraction(1)
    for _, cv in rd.positive_root_pairs:
        h = dot(rd.rho, cv)
        num *= Fraction(dot(lam, cv) + h, h)
    assert num.denominator == 1
    return num.numerator


def weight_multiplicities(rd: RootDatum, lam):
    """The full weight system of the irreducible V_lam, as {weight: mult}.

    Multiplicities of dominant weights come from the Freudenthal recursion;
    the rest of the system is filled in by Weyl symmetry.  Cached per datum
    (the cache fill is idempotent, so concurrent first calls are safe)."""
    lam = rd.check_weight(lam)
    if not rd.is_dominant(lam):
        raise ValueError("highest weight must be dominant")
    cached = rd._weight_system_cache.get(lam)
    if cached is not None:
        return dict(cached)
    if not rd.factors:
        rd._weight_system_cache[lam] = {lam: 1}
        return {lam: 1}

    # work with the doubled, rho-shifted vectors 2*mu + 2*rho so the whole
    # recursion stays in integer arithmetic
    def shifted(mu):
        return tuple(2 * a + b for a, b in zip(mu, rd.rho2))

    top = rd.inner_scaled(shifted(lam), shifted(lam))

    # lattice points lam - (sums of simple roots) inside the norm bound;
    # every weight of V_lam is reachable this way through weights only
    candidates = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in rd.simple_roots:
                nu = vec_sub(mu, a)
                if nu in candidates:
                    continue
                nu2 = shifted(nu)
                if rd.inner_scaled(nu2, nu2) <= top:
                    candidates.add(nu)
                    nxt.append(nu)
        frontier = nxt

    dominants = [mu for mu in candidates if rd.is_dominant(mu)]
    dominants.sort(key=lambda mu: rd.inner_scaled(shifted(mu), shifted(mu)),
                   reverse=True)
    mult = {}
    for mu in dominants:
        if mu == lam:
            mult[mu] = 1
            continue
        mu2 = shifted(mu)
        denom = top - rd.inner_scaled(mu2, mu2)
        acc = 0
        for alpha, _ in rd.positive_root_pairs:
            k = 1
            while True:
                xi = vec_add(mu, vec_scale(k, alpha))
                xi2 = shifted(xi)
                if rd.inner_scaled(xi2, xi2) > top:
                    break
                m = mult.get(dominant_representative(rd, xi).weight, 0)
                if m:
                    acc += m * rd.inner_scaled(xi, alpha)
                k += 1
        # the scale factors cancel to (2 * 4) / denominator-in-doubled-norms
        val, rem = divmod(8 * acc, denom)
        assert rem == 0
        if val:
            mult[mu] = val
    # expand by the Weyl group
    system = {}
    for mu, m in mult.items():
        for w in weyl_group_elements(rd):
            system[w.apply(mu)] = m
    rd._weight_system_cache[lam] = system
    return dict(system)


def tensor_decompose(rd: RootDatum, lam, mu):
    """Decompose V_lam (x) V_mu into irreducibles: {dominant weight: mult}.

    Runs over the weight system of the smaller factor, reflecting
    rho-shifted weights into the dominant chamber with signs and dropping
    those on walls.  All arithmetic is integral (weights are doubled
    internally so the rho shift stays in the lattice)."""
    lam = rd.check_weight(lam)
    mu = rd.check_weight(mu)
    if not (rd.is_dominant(lam) and rd.is_dominant(mu)):
        raise ValueError("tensor factors must be dominant")
    if rd.factors and weyl_dimension(rd, mu) > weyl_dimension(rd, lam):
        lam, mu = mu, lam
    out = {}
    for nu, m in weight_multiplicities(rd, mu).items():
        eta = vec_add(vec_scale(2, vec_add(lam, nu)), rd.rho2)
        res = dominant_representative(rd, eta)
        if res.on_wall:
            continue
        target = tuple((x - y) // 2 for x, y in zip(res.weight, rd.rho2))
        out[target] = out.get(target, 0) + res.sign * m
    return {k: v for k, v in sorted(out.items()) if v}
