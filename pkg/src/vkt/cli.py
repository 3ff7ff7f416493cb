"""Command-line front end.

Spec files are plain key-value text: `key = value` per line, where a
value is a quoted string, an integer, a list `[...]`, or an inline table
`{ key = value, ... }`.  Blank lines and `#` comments are ignored.
Reports are JSON (default) or flat TSV; every numeric field is exact.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .checks import run_all_checks
from .errors import SpecParseError, VktError
from .fusion import FusionRing, fusion_product, verlinde_classes
from .mvlaurent import mv_s3, mv_su2, mv_u1
from .rootdata import root_datum_from_spec, weyl_group_elements
from .twist import shift_by_dual_coxeter, twisting_from_level


# -- spec text ----------------------------------------------------------------

class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message):
        raise SpecParseError(message, self.line, self.col)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self):
        c = self.text[self.pos]
        self.pos += 1
        if c == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return c

    def skip_space(self, newlines=False):
        while self.pos < len(self.text):
            c = self.peek()
            if c == "#":
                while self.pos < len(self.text) and self.peek() != "\n":
                    self.advance()
            elif c in " \t" or (newlines and c in "\r\n"):
                self.advance()
            else:
                break

    def expect(self, c):
        if self.peek() != c:
            self.error(f"expected {c!r}, found {self.peek()!r}")
        self.advance()

    def ident(self):
        start = self.pos
        while self.peek().isalnum() or self.peek() == "_":
            self.advance()
        if start == self.pos:
            self.error("expected a key")
        return self.text[start:self.pos]

    def value(self):
        self.skip_space()
        c = self.peek()
        if c == '"':
            return self._string()
        if c == "[":
            return self._list()
        if c == "{":
            return self._table()
        if c == "-" or c.isdigit():
            return self._int()
        self.error(f"cannot parse value starting with {c!r}")

    def _string(self):
        self.expect('"')
        out = []
        while True:
            if self.pos >= len(self.text):
                self.error("unterminated string")
            c = self.advance()
            if c == '"':
                return "".join(out)
            if c == "\n":
                self.error("newline inside string")
            out.append(c)

    def _int(self):
        start = self.pos
        if self.peek() == "-":
            self.advance()
        if not self.peek().isdigit():
            self.error("expected digits")
        while self.peek().isdigit():
            self.advance()
        return int(self.text[start:self.pos])

    def _list(self):
        self.expect("[")
        out = []
        self.skip_space(newlines=True)
        if self.peek() == "]":
            self.advance()
            return out
        while True:
            self.skip_space(newlines=True)
            out.append(self.value())
            self.skip_space(newlines=True)
            if self.peek() == ",":
                self.advance()
                continue
            self.expect("]")
            return out

    def _table(self):
        self.expect("{")
        out = {}
        self.skip_space(newlines=True)
        if self.peek() == "}":
            self.advance()
            return out
        while True:
            self.skip_space(newlines=True)
            key = self.ident()
            self.skip_space()
            self.expect("=")
            out[key] = self.value()
            self.skip_space(newlines=True)
            if self.peek() == ",":
                self.advance()
                continue
            self.expect("}")
            return out


def parse_spec_text(text):
    """Parse `key = value` lines into a dict; errors carry line/column."""
    sc = _Scanner(text)
    out = {}
    while True:
        sc.skip_space(newlines=True)
        if sc.pos >= len(sc.text):
            return out
        key = sc.ident()
        sc.skip_space()
        sc.expect("=")
        out[key] = sc.value()
        sc.skip_space()
        if sc.pos < len(sc.text) and sc.peek() not in "\r\n":
            sc.error("trailing content after value")


def emit_value(v):
    if isinstance(v, str):
        return f'"{v}"'
    if isinstance(v, bool):
        raise SpecParseError("booleans are not part of the spec format")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, list):
        return "[" + ", ".join(emit_value(x) for x in v) + "]"
    if isinstance(v, dict):
        inner = ", ".join(f"{k} = {emit_value(x)}" for k, x in v.items())
        return "{ " + inner + " }"
    raise SpecParseError(f"cannot emit value of type {type(v).__name__}")


@dataclass
class JobSpec:
    """One computation request: group, twist, command, output format."""

    group: object = None          # str name or dict with cartan data
    twist: dict = field(default_factory=dict)
    command: str = ""
    format: str = "json"

    def emit(self):
        lines = []
        if isinstance(self.group, str):
            lines.append(f"group = {emit_value(self.group)}")
        elif isinstance(self.group, dict):
            for k in ("cartan", "torus_rank", "torus_form"):
                if k in self.group:
                    lines.append(f"{k} = {emit_value(self.group[k])}")
        if self.twist:
            lines.append(f"twist = {emit_value(self.twist)}")
        if self.command:
            lines.append(f"command = {emit_value(self.command)}")
        lines.append(f"format = {emit_value(self.format)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text):
        data = parse_spec_text(text)
        group_keys = {k: data[k] for k in ("cartan", "torus_rank", "torus_form")
                      if k in data}
        group = data.get("group", group_keys or None)
        return cls(group=group,
                   twist=data.get("twist", {}),
                   command=data.get("command", ""),
                   format=data.get("format", "json"))


# -- building the objects -----------------------------------------------------

def build_root_datum(job: JobSpec):
    if job.group is None:
        raise SpecParseError("no group given (use --group or a spec file)")
    return root_datum_from_spec(job.group)


def build_twisting(rd, twist_spec):
    levels = tuple(twist_spec.get("levels", ()))
    eps = twist_spec.get("epsilon")
    torus = twist_spec.get("torus")
    shift = twist_spec.get("shift", "none")
    if shift not in ("none", "dual_coxeter"):
        raise SpecParseError(f"unknown shift {shift!r}")
    torus_rank = len(rd.torus_indices)
    if rd.is_torus() and torus is None and len(levels) == 1:
        # scalar convenience on a bare torus: scale the datum's torus pairing
        torus = [[levels[0] * rd.kappa_torus.at(i, j) for j in range(torus_rank)]
                 for i in range(torus_rank)]
        levels = ()
    if shift == "dual_coxeter":
        levels = shift_by_dual_coxeter(rd, levels)
    return twisting_from_level(rd, levels, torus_block=torus, eps=eps)


def report_header(job: JobSpec, rd=None, tau=None):
    head = {
        "version": __version__,
        "spec": {"group": job.group, "twist": job.twist},
    }
    if rd is not None:
        head["rho_tilde"] = list(rd.rho_tilde)
        head["rho_tilde_choice"] = rd.rho_tilde_note
        head["origin"] = "lambda0"
    if tau is not None:
        head["degree_parity"] = tau.degree_parity()
        head["epsilon"] = list(tau.eps)
    return head


# -- commands -----------------------------------------------------------------

def cmd_info(job: JobSpec):
    rd = build_root_datum(job)
    tau = build_twisting(rd, job.twist) if job.twist else None
    out = report_header(job, rd, tau)
    out["info"] = rd.describe()
    out["info"]["weyl_order"] = len(weyl_group_elements(rd))
    if tau is not None:
        out["twist"] = tau.describe()
    return out, 0


def cmd_basis(job: JobSpec):
    rd = build_root_datum(job)
    tau = build_twisting(rd, job.twist)
    ring = FusionRing(rd, tau)
    out = report_header(job, rd, tau)
    out["basis"] = {
        "count": len(ring.basis),
        "orbit_representatives": [list(r) for r in ring.basis],
        "transversal_weights": [list(t) for t in ring.transversal],
        "signs": list(ring.signs),
        "unit_index": ring.unit_index,
    }
    from .affineweyl import zero_criterion_discrepancies
    if any(tau.eps):
        out["basis"]["grading_flags"] = zero_criterion_discrepancies(rd, tau)
    return out, 0


def cmd_classes(job: JobSpec):
    rd = build_root_datum(job)
    tau = build_twisting(rd, job.twist)
    classes = verlinde_classes(rd, tau)
    out = report_header(job, rd, tau)
    out["classes"] = {
        "count": len(classes),
        "points": [[str(c) for c in vc.point] for vc in classes],
        "orbit_size": classes[0].orbit_size if classes else None,
    }
    return out, 0


def cmd_fuse(job: JobSpec, a, b):
    rd = build_root_datum(job)
    tau = build_twisting(rd, job.twist)
    ring = FusionRing(rd, tau)
    n = len(ring.basis)
    if not (0 <= a < n and 0 <= b < n):
        raise SpecParseError(f"basis indices must lie in [0, {n})")
    prod = fusion_product(ring, a, b)
    coeffs = ring.basis_coefficients(prod)
    out = report_header(job, rd, tau)
    out["fuse"] = {
        "a": a, "b": b,
        "a_weight": list(ring.transversal[a]),
        "b_weight": list(ring.transversal[b]),
        "coefficients": {str(c): coeffs[c] for c in range(n) if coeffs[c]},
        "support": {",".join(map(str, k)): v for k, v in prod.items()},
    }
    return out, 0


def cmd_table(job: JobSpec):
    rd = build_root_datum(job)
    tau = build_twisting(rd, job.twist)
    ring = FusionRing(rd, tau)
    nc = ring.structure_constants()
    out = report_header(job, rd, tau)
    out["table"] = {
        "basis": [list(t) for t in ring.transversal],
        "constants": [[list(row) for row in plane] for plane in nc],
    }
    return out, 0


def cmd_verify(job: JobSpec):
    rd = build_root_datum(job)
    tau = build_twisting(rd, job.twist)
    ring = FusionRing(rd, tau)
    checks = run_all_checks(ring)
    out = report_header(job, rd, tau)
    out["verify"] = {
        "all_passed": all(c["passed"] for c in checks),
        "checks": checks,
    }
    return out, 0 if out["verify"]["all_passed"] else 1


def cmd_example(job: JobSpec, which, n, eps=0):
    out = {"version": __version__, "example": which, "n": n}
    if which == "s3":
        k0, k1 = mv_s3(n)
        out["K0"] = str(k0)
        out["K1"] = str(k1)
    elif which == "u1":
        rep = mv_u1(n, eps)
        out["epsilon"] = eps
        out["K0_rank"] = rep.kernel_rank
        out["K1_rank"] = rep.rank
        out["relation"] = rep.relation
        out["quotient"] = rep.details["quotient"]
    elif which == "su2":
        rep = mv_su2(n)
        out["K0_rank"] = rep.kernel_rank
        out["K1_rank"] = rep.rank
        out["relation"] = rep.relation
        out["quotient"] = rep.details["quotient"]
        out["basis"] = list(rep.basis_labels)
    else:
        raise SpecParseError(f"unknown example {which!r} (use s3, u1 or su2)")
    return out, 0


# -- output -------------------------------------------------------------------

def render(out, fmt):
    if fmt == "json":
        return json.dumps(out, indent=2, sort_keys=True)
    if fmt == "tsv":
        lines = []

        def flatten(prefix, v):
            if isinstance(v, dict):
                for k in sorted(v):
                    flatten(f"{prefix}.{k}" if prefix else str(k), v[k])
            else:
                lines.append(f"{prefix}\t{json.dumps(v)}")

        flatten("", out)
        return "\n".join(lines)
    raise SpecParseError(f"unknown format {fmt!r}")


def _parse_int_list(text):
    if not text:
        return []
    return [int(x) for x in text.replace(",", " ").split()]


def build_job(args):
    if getattr(args, "spec", None):
        with open(args.spec, "r", encoding="utf-8") as fh:
            job = JobSpec.parse(fh.read())
    else:
        job = JobSpec()
    if getattr(args, "group", None):
        job.group = args.group
    if getattr(args, "twist", None) is not None:
        job.twist["levels"] = _parse_int_list(args.twist)
    if getattr(args, "epsilon", None) is not None:
        job.twist["epsilon"] = _parse_int_list(args.epsilon)
    if getattr(args, "torus", None) is not None:
        job.twist["torus"] = json.loads(args.torus)
    if getattr(args, "shift", None):
        job.twist["shift"] = args.shift
    if getattr(args, "format", None):
        job.format = args.format
    return job


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="vkt",
        description="Exact fusion-ring computations for compact Lie groups")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--group", help='group spec, e.g. "SU(2) x U(1)"')
        p.add_argument("--spec", help="path to a spec file")
        p.add_argument("--twist", help="comma-separated levels per simple factor "
                                       "(a bare torus takes a single scale)")
        p.add_argument("--epsilon", help="comma-separated mod-2 grading vector")
        p.add_argument("--torus", help="torus twist block as a JSON matrix")
        p.add_argument("--shift", choices=["none", "dual_coxeter"],
                       help="interpret levels as loop-group levels")
        p.add_argument("--format", choices=["json", "tsv"], default=None)

    for name in ("info", "basis", "classes", "table", "verify"):
        common(sub.add_parser(name))
    fuse = sub.add_parser("fuse")
    common(fuse)
    fuse.add_argument("a", type=int)
    fuse.add_argument("b", type=int)
    example = sub.add_parser("example")
    example.add_argument("which", choices=["s3", "u1", "su2"])
    example.add_argument("n", type=int)
    example.add_argument("--epsilon", type=int, default=0)
    example.add_argument("--format", choices=["json", "tsv"], default=None)

    args = parser.parse_args(argv)
    try:
        if args.command == "example":
            job = JobSpec(format=args.format or "json")
            out, code = cmd_example(job, args.which, args.n, args.epsilon)
        else:
            job = build_job(args)
            job.command = args.command
            if args.command == "info":
                out, code = cmd_info(job)
            elif args.command == "basis":
                out, code = cmd_basis(job)
            elif args.command == "classes":
                out, code = cmd_classes(job)
            elif args.command == "fuse":
                out, code = cmd_fuse(job, args.a, args.b)
            elif args.command == "table":
                out, code = cmd_table(job)
            else:
                out, code = cmd_verify(job)
        print(render(out, job.format))
        return code
    except VktError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
