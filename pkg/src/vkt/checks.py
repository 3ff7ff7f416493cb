"""Cross-module consistency suites.

Each check returns a dict with `name`, `passed`, and a `detail` payload
(counterexamples when failing).  The CLI's verify command runs all of
them for one group/twist; the acceptance tests run them over a grid.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .affineweyl import (
    AffineElement,
    act,
    generated_subgroup,
    geometric_stabilizer_brute,
    orbit_normal_form,
    sign_character,
    stabilizer_generators,
    zero_criterion_discrepancies,
)
from .fusion import (
    FusionRing,
    class_from_weight,
    delta_eval,
    equivariant_function,
    ideal_generator_candidates,
    module_action,
    mult_by_U_matrix,
    structure_constants_via_characters,
)
from .rootdata import weyl_group_elements
from .twist import f_epsilon_points
from .zlattice import coset_representatives


def check_double_count(ring: FusionRing):
    basis = len(ring.basis)
    classes = len(ring.verlinde_points())
    return {"name": "double_count", "passed": basis == classes,
            "detail": {"basis_orbits": basis, "verlinde_classes": classes}}


def check_f_epsilon(ring: FusionRing):
    rd, tau = ring.rd, ring.tau
    pts = f_epsilon_points(rd, tau)
    ok = len(pts) == tau.order_F()
    bad = []
    for x in pts:
        img = tau.b.apply(x)
        if any((a - l) % 1 != 0 for a, l in zip(img, tau.lambda_eps)):
            ok = False
            bad.append([str(c) for c in x])
    return {"name": "f_epsilon_solutions", "passed": ok,
            "detail": {"count": len(pts), "expected": tau.order_F(), "bad": bad}}


def check_cyclic_generator(ring: FusionRing):
    if not ring.basis:
        return {"name": "cyclic_generator", "passed": True, "detail": {"rank": 0}}
    det = mult_by_U_matrix(ring).determinant()
    return {"name": "cyclic_generator", "passed": det in (1, -1),
            "detail": {"determinant": det}}


def check_annihilation(ring: FusionRing, bound=None, action_sample=3):
    if bound is None:
        largest = max((abs(v) for row in ring.tau.b.to_rows() for v in row), default=4)
        # weight systems grow quickly with the rank; keep the search window small
        per_rank = {1: 10, 2: 8}.get(ring.rd.rank, 4)
        bound = min(per_rank, max(4, largest))
    failures = []
    gens = ideal_generator_candidates(ring, bound)
    for lam in gens:
        if not class_from_weight(ring, lam).is_zero():
            failures.append({"weight": list(lam), "reason": "nonzero reduction"})
    # the full convolution action is costlier; spot-check it on the first few
    for lam in gens[:action_sample]:
        for i in range(len(ring.basis)):
            if not module_action(ring, {lam: 1}, ring.class_from_index(i)).is_zero():
                failures.append({"weight": list(lam), "reason": f"acts nonzero on {i}"})
                break
    # the converse: weights reducing to zero must vanish at the classes
    from .fusion import dominant_weights_up_to, verlinde_ideal_member
    for lam in dominant_weights_up_to(ring.rd, min(bound, 6)):
        in_ideal = verlinde_ideal_member(ring, {lam: 1})
        reduces_to_zero = class_from_weight(ring, lam).is_zero()
        if in_ideal != reduces_to_zero:
            failures.append({"weight": list(lam), "reason": "ideal/reduction mismatch"})
    return {"name": "ideal_annihilation", "passed": not failures,
            "detail": {"bound": bound, "ideal_weights": len(gens), "failures": failures}}


def check_oracle_equivalence(ring: FusionRing):
    if not ring.tau.is_primitive():
        return {"name": "oracle_equivalence", "passed": True,
                "detail": {"skipped": "twisting not primitive; no ring structure"}}
    if not ring.basis:
        return {"name": "oracle_equivalence", "passed": True, "detail": {"rank": 0}}
    reflect = ring.structure_constants()
    chars = structure_constants_via_characters(ring)
    mismatches = []
    negatives = []
    n = len(ring.basis)
    for a in range(n):
        for b in range(n):
            if reflect[a][b] != chars[a][b]:
                mismatches.append({"a": a, "b": b,
                                   "reflection": list(reflect[a][b]),
                                   "characters": list(chars[a][b])})
            if any(v < 0 for v in reflect[a][b]):
                negatives.append({"a": a, "b": b, "coeffs": list(reflect[a][b])})
    return {"name": "oracle_equivalence", "passed": not mismatches and not negatives,
            "detail": {"mismatches": mismatches, "negative_coefficients": negatives}}


def check_algebra_axioms(ring: FusionRing):
    if not ring.tau.is_primitive():
        return {"name": "algebra_axioms", "passed": True,
                "detail": {"skipped": "twisting not primitive; no ring structure"}}
    if not ring.basis:
        return {"name": "algebra_axioms", "passed": True, "detail": {"rank": 0}}
    nc = ring.structure_constants()
    n = len(ring.basis)
    problems = []
    for b in range(n):
        unit_row = nc[ring.unit_index][b]
        if list(unit_row) != [1 if c == b else 0 for c in range(n)]:
            problems.append({"kind": "unit", "b": b, "row": list(unit_row)})
    for a in range(n):
        for b in range(a, n):
            if nc[a][b] != nc[b][a]:
                problems.append({"kind": "commutativity", "a": a, "b": b})
    for a in range(n):
        for b in range(n):
            for c in range(n):
                left = [0] * n
                right = [0] * n
                for d in range(n):
                    if nc[a][b][d]:
                        for e in range(n):
                            left[e] += nc[a][b][d] * nc[d][c][e]
                    if nc[b][c][d]:
                        for e in range(n):
                            right[e] += nc[b][c][d] * nc[a][d][e]
                if left != right:
                    problems.append({"kind": "associativity", "triple": [a, b, c]})
    return {"name": "algebra_axioms", "passed": not problems,
            "detail": {"problems": problems[:10], "triples": n ** 3}}


def check_delta_identity(ring: FusionRing, trials=100, seed=7):
    rd, tau = ring.rd, ring.tau
    rng = random.Random(seed)
    reps = [tuple(r) for r in coset_representatives(tau.b)]
    failures = []
    for t in range(trials):
        f = {rep: rng.randint(-3, 3) for rep in reps}
        g = tuple(rng.randint(-12, 12) for _ in range(rd.rank))
        from .affineweyl import box_reduce
        rep_g, pi = box_reduce(tau, g)
        expected = tau.translation_sign(pi) * _coset_value(tau, f, rep_g)
        got = delta_eval(rd, tau, f, g)
        if got != expected:
            failures.append({"trial": t, "got": str(got), "expected": expected})
    # equivariant data: full sum equals the Weyl-regular restriction
    for i in range(min(len(ring.basis), 4)):
        kc = ring.class_from_index(i)
        fn = equivariant_function(rd, tau, kc)
        f = {rep: fn(rep) for rep in reps}
        for t in range(8):
            g = tuple(rng.randint(-10, 10) for _ in range(rd.rank))
            full = delta_eval(rd, tau, f, g)
            reg = delta_eval(rd, tau, f, g, regular_only=True)
            if not (full == reg == fn(g)):
                failures.append({"basis": i, "g": list(g), "full": str(full),
                                 "regular": str(reg), "value": fn(g)})
    return {"name": "delta_identity", "passed": not failures,
            "detail": {"trials": trials, "failures": failures[:5]}}


def _coset_value(tau, f, rep):
    from .affineweyl import box_reduce
    for lam, v in f.items():
        r, pi = box_reduce(tau, lam)
        if r == rep:
            return tau.translation_sign(pi) * v
    return 0


def check_orbit_constancy(ring: FusionRing, trials=40, seed=3):
    rd, tau = ring.rd, ring.tau
    rng = random.Random(seed)
    ws = weyl_group_elements(rd)
    failures = []
    for t in range(trials):
        lam = tuple(rng.randint(-8, 8) for _ in range(rd.rank))
        g = AffineElement(tuple(rng.randint(-2, 2) for _ in range(rd.rank)),
                          rng.choice(ws))
        base = orbit_normal_form(rd, tau, lam)
        moved = orbit_normal_form(rd, tau, act(rd, tau, g, lam))
        if base.is_zero != moved.is_zero:
            failures.append({"trial": t, "lam": list(lam)})
        elif not base.is_zero:
            if moved.representative != base.representative or \
                    moved.sign != base.sign * sign_character(tau, g):
                failures.append({"trial": t, "lam": list(lam)})
    return {"name": "orbit_constancy", "passed": not failures,
            "detail": {"trials": trials, "failures": failures[:5]}}


def check_stabilizers(ring: FusionRing, trials=25, seed=11):
    rd, tau = ring.rd, ring.tau
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        x = tuple(Fraction(rng.randint(0, 24), rng.randint(1, 12))
                  for _ in range(rd.rank))
        gens = stabilizer_generators(rd, tau, x)
        group = generated_subgroup(rd, gens)
        brute = geometric_stabilizer_brute(rd, x)
        key = lambda e: (e.translation, e.weyl.matrix.entries)
        if sorted(map(key, group)) != sorted(map(key, brute)):
            failures.append({"trial": t, "x": [str(c) for c in x],
                             "generated": len(group), "brute": len(brute)})
    return {"name": "stabilizer_reflections", "passed": not failures,
            "detail": {"trials": trials, "failures": failures[:5]}}


def check_grading_flags(ring: FusionRing):
    """Informational only: with a nonzero grading, orbits where the survival
    criterion differs from literal freeness are reported, not failed."""
    disc = zero_criterion_discrepancies(ring.rd, ring.tau)
    return {"name": "grading_flags", "passed": True,
            "detail": {"epsilon": list(ring.tau.eps), "discrepancies": disc}}


def run_all_checks(ring: FusionRing, delta_trials=None):
    if delta_trials is None:
        # keep the quadratic-in-|F| pairing check within a fixed work budget
        budget = 5_000_000
        delta_trials = max(10, min(60, budget // max(1, ring.tau.order_F() ** 2)))
    checks = [
        check_double_count(ring),
        check_f_epsilon(ring),
        check_cyclic_generator(ring),
        check_annihilation(ring),
        check_oracle_equivalence(ring),
        check_algebra_axioms(ring),
        check_delta_identity(ring, trials=delta_trials),
        check_orbit_constancy(ring),
        check_stabilizers(ring),
        check_grading_flags(ring),
    ]
    return checks
