"""Twisting data: the equivariant injection b, the grading, and the
finite group it cuts out of the torus.

A twisting is stored in the normal form (b, eps): b is a W-equivariant
injective map from the coweight lattice to the weight lattice (a square
integer matrix in our dual coordinate bases), and eps is a W-invariant
mod-2 vector grading the translation action.  The half-shift point
lambda_eps = eps/2 and the finite groups F = coker(b) and F_eps (the
torus points solving b(x) = lambda_eps mod the weight lattice) are
derived.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import Degenerate, NotEquivariant
from .rootdata import RootDatum, dot
from .zlattice import (
    IntMatrix,
    cokernel_structure,
    inverse_rational,
    matvec_fraction,
    smith_normal_form,
)


def torus_point(rank, coords):
    """Normalize rational coordinates to the half-open unit box [0,1)^rank."""
    out = tuple(Fraction(c) % 1 for c in coords)
    if len(out) != rank:
        raise ValueError(f"point length {len(out)} != rank {rank}")
    return out


class Twisting:
    """Validated twisting data for a root datum."""

    def __init__(self, rd: RootDatum, b: IntMatrix, eps=None, level_data=None):
        self.rd = rd
        self.b = b
        self.eps = tuple(int(e) % 2 for e in (eps or (0,) * rd.rank))
        self.level_data = level_data  # (levels per factor, torus block) when known
        self._validate()
        self.det_b = b.determinant()
        self.f_group = cokernel_structure(b)
        self._b_inv = inverse_rational(b)
        self.lambda_eps = tuple(Fraction(e, 2) for e in self.eps)

    def _validate(self):
        rd, b = self.rd, self.b
        if b.rows != rd.rank or b.cols != rd.rank:
            raise Degenerate(f"b must be {rd.rank} x {rd.rank}")
        if len(self.eps) != rd.rank:
            raise NotEquivariant("grading vector length must equal the rank")
        if b.determinant() == 0:
            raise Degenerate("b is not injective (det b = 0)")
        if not b.is_symmetric():
            raise NotEquivariant("b must be symmetric as a bilinear form on coweights")
        for g in rd.generators:
            if g.matrix * b != b * g.comatrix:
                raise NotEquivariant("b does not commute with the Weyl action")
            image = g.matrix.apply(self.eps)
            if any((x - y) % 2 for x, y in zip(image, self.eps)):
                raise NotEquivariant("grading vector is not W-invariant mod 2")

    # -- derived structure ------------------------------------------------

    def order_F(self):
        return abs(self.det_b)

    def eps_of_translation(self, pi):
        """The grading of the translation pi, in {0, 1}."""
        return dot(self.eps, pi) % 2

    def translation_sign(self, pi):
        return -1 if self.eps_of_translation(pi) else 1

    def apply_b(self, pi):
        return self.b.apply(pi)

    def b_inverse_apply(self, vec):
        return matvec_fraction(self._b_inv, vec)

    def degree_parity(self):
        """Degree mod 2 of the (only) nonzero twisted K-group."""
        return self.rd.rank % 2

    def is_primitive(self):
        """Conservative normal-form test: trivial grading, level-form b on
        the simple blocks, and an even symmetric torus block."""
        if any(self.eps):
            return False
        return self._detect_levels() is not None

    def _detect_levels(self):
        """Recognize b as (sum of level_i * kappa_i) + even torus block."""
        rd = self.rd
        if not rd.split_form:
            return None
        levels = []
        covered = set()
        for f in rd.factors:
            idx = f.indices
            covered.update(idx)
            k00 = f.kappa.at(0, 0)
            v = self.b.at(idx[0], idx[0])
            if v % k00:
                return None
            lvl = v // k00
            for ai, i in enumerate(idx):
                for aj, j in enumerate(idx):
                    if self.b.at(i, j) != lvl * f.kappa.at(ai, aj):
                        return None
            levels.append(lvl)
        torus = rd.torus_indices
        for i in range(rd.rank):
            for j in range(rd.rank):
                if i in covered and j in covered:
                    continue
                inside = i in torus and j in torus
                if not inside and self.b.at(i, j) != 0:
                    return None
        for i in torus:
            if self.b.at(i, i) % 2:
                return None
        block = IntMatrix.from_rows([[self.b.at(i, j) for j in torus] for i in torus]) \
            if torus else IntMatrix.zeros(0, 0)
        return tuple(levels), block

    def describe(self):
        return {
            "b": self.b.to_rows(),
            "epsilon": list(self.eps),
            "order_F": self.order_F(),
            "F": str(self.f_group),
            "lambda_eps": [str(x) for x in self.lambda_eps],
            "degree_parity": self.degree_parity(),
            "primitive": self.is_primitive(),
            "levels": list(self.level_data[0]) if self.level_data else None,
        }


def shift_by_dual_coxeter(rd: RootDatum, loop_levels):
    """Total twist levels from loop-group levels: add each factor's dual
    Coxeter number.  Torus blocks are unaffected and not represented here."""
    loop_levels = tuple(int(x) for x in loop_levels)
    if len(loop_levels) != len(rd.factors):
        raise ValueError(f"expected {len(rd.factors)} levels, got {len(loop_levels)}")
    return tuple(lvl + f.dual_coxeter for lvl, f in zip(loop_levels, rd.factors))


def twisting_from_level(rd: RootDatum, levels, torus_block=None, eps=None) -> Twisting:
    """Assemble b = (sum of level_i * kappa_i) + torus block.

    `levels` has one integer per simple factor; `torus_block` is a
    symmetric integer matrix on the torus coordinates (required when the
    torus rank is positive)."""
    if not rd.split_form:
        raise NotEquivariant("level-form twists need a split (simply connected x torus) datum; "
                             "pass an explicit b instead")
    levels = tuple(int(x) for x in levels)
    if len(levels) != len(rd.factors):
        raise Degenerate(f"expected {len(rd.factors)} levels, got {len(levels)}")
    tr = len(rd.torus_indices)
    if torus_block is None:
        if tr:
            raise Degenerate("torus factors need an explicit torus twist block")
        tb = IntMatrix.zeros(0, 0)
    else:
        tb = torus_block if isinstance(torus_block, IntMatrix) \
            else IntMatrix.from_rows(torus_block)
        if tb.rows != tr or tb.cols != tr:
            raise Degenerate(f"torus block must be {tr} x {tr}")
        if not tb.is_symmetric():
            raise NotEquivariant("torus block must be symmetric")
    rows = [[0] * rd.rank for _ in range(rd.rank)]
    for lvl, f in zip(levels, rd.factors):
        for ai, i in enumerate(f.indices):
            for aj, j in enumerate(f.indices):
                rows[i][j] = lvl * f.kappa.at(ai, aj)
    for ai, i in enumerate(rd.torus_indices):
        for aj, j in enumerate(rd.torus_indices):
            rows[i][j] = tb.at(ai, aj)
    b = IntMatrix.from_rows(rows) if rd.rank else IntMatrix.zeros(0, 0)
    return Twisting(rd, b, eps, level_data=(levels, tb))


def f_epsilon_points(rd: RootDatum, tau: Twisting):
    """All torus points x with b(x) = lambda_eps modulo the weight lattice.

    Exactly |det b| points, reduced to [0,1)^rank, in sorted order."""
    n = rd.rank
    if n == 0:
        return [()]
    x0 = tau.b_inverse_apply(tau.lambda_eps)
    snf = smith_normal_form(tau.b)
    d = snf.invariant_diagonal()
    pts = set()
    idx = [0] * n
    while True:
        shift = snf.V.apply([Fraction(r, di) for r, di in zip(idx, d)])
        pts.add(torus_point(n, [a + b for a, b in zip(x0, shift)]))
        j = n - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < d[j]:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            break
    assert len(pts) == tau.order_F()
    return sorted(pts)
