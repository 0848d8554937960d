"""Batch front end: single-file problem documents in, deterministic reports
out.

Problem format: `key=value` statements separated by newlines or semicolons,
with `#` comments.  Generator lists use brackets, e.g. `I=[x*y, x+y]`.
Recognized keys:

    p, vars, I, a, t, cmd            core pair data and the subcommand
    point, d, c, J, z                optional operation inputs
    e_min, e_max, degree_bound,      bounds
    e_cap, seed, corpus

Subcommands: fpure, fpure-old, sfr, testideal, fpt, compatible, closure,
hunt.  Exit codes: 0 yes/complete, 2 no, 3 unknown, 1 error.  Reports are
byte-stable for fixed input and bounds; timing goes to stderr so stdout
stays comparable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .compatible import (
    ClosureVerdict,
    frobenius_closure_membership,
    is_uniformly_compatible,
    quotient_F_pure_check,
)
from .criteria import (
    CheckReport,
    CorpusItem,
    PairSpec,
    Verdict,
    is_locally_sharply_F_pure,
    is_locally_strongly_F_regular,
    is_sharply_F_pure_old,
    local_check_at_maximal,
    maximal_from_point,
    search_discrepancy,
)
from .errors import FsingError, ParseError
from .groebner import Ideal, RingPresentation
from .ringcore import Ring, format_rational, is_prime, parse_rational
from .testideal import EXACT, test_element_heuristic, test_ideal_quotient, test_ideal_regular
from .thresholds import fpt_interval, is_sharp_at, nu_sequence

COMMANDS = ("fpure", "fpure-old", "sfr", "testideal", "fpt", "compatible", "closure", "hunt")

REDUCEDNESS_NOTE = "all guarantees assume R = S/I is reduced (not verified here)"
TEST_ELEMENT_NOTE = "test-ideal output is conditional on c being a big sharp test element"


@dataclass
class Problem:
    ring: Ring
    I: Ideal
    a: Ideal
    t: Fraction
    cmd: str
    point: tuple | None = None
    d_candidates: tuple = ()
    c: object = None
    J: Ideal | None = None
    z: object = None
    e_min: int | None = None
    e_max: int | None = None
    degree_bound: int | None = None
    e_cap: int | None = None
    seed: int | None = None
    corpus: str | None = None

    def presentation(self) -> RingPresentation:
        return RingPresentation(self.ring, self.I)

    def pair(self) -> PairSpec:
        return PairSpec(self.presentation(), self.a, self.t)


def _statements(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0]
        col = 1
        for chunk in stripped.split(";"):
            if chunk.strip():
                yield lineno, col + len(chunk) - len(chunk.lstrip()), chunk.strip()
            col += len(chunk) + 1


def _parse_list(value: str, lineno: int, col: int):
    value = value.strip()
    if not (value.startswith("[") and value.endswith("]")):
        raise ParseError("expected a bracketed list", lineno, col)
    inner = value[1:-1].strip()
    if not inner:
        return []
    return [part.strip() for part in inner.split(",")]


def parse_problem(text: str) -> Problem:
    raw: dict = {}
    positions: dict = {}
    for lineno, col, statement in _statements(text):
        if "=" not in statement:
            raise ParseError(f"expected key=value, got {statement!r}", lineno, col)
        key, value = statement.split("=", 1)
        key = key.strip()
        raw[key] = value.strip()
        positions[key] = (lineno, col)

    def where(key):
        return positions.get(key, (1, 1))

    for key in ("p", "vars", "cmd"):
        if key not in raw:
            raise ParseError(f"missing required key {key!r}", *where(key))

    try:
        p = int(raw["p"])
    except ValueError:
        raise ParseError(f"p must be an integer, got {raw['p']!r}", *where("p"))
    if not is_prime(p):
        raise ParseError(f"p = {p} is not prime", *where("p"))

    variables = tuple(v.strip() for v in raw["vars"].split(",") if v.strip())
    if not variables:
        raise ParseError("vars must name at least one variable", *where("vars"))
    ring = Ring(p, variables)

    def parse_ideal(key, default_zero=False):
        if key not in raw:
            if default_zero:
                return Ideal(ring, (ring.zero(),))
            return None
        items = _parse_list(raw[key], *where(key))
        if not items:
            return Ideal(ring, (ring.zero(),))
        try:
            return Ideal(ring, tuple(ring.parse(item) for item in items))
        except ParseError as exc:
            raise ParseError(f"in {key}: {exc}", *where(key))

    I = parse_ideal("I", default_zero=True)
    a = parse_ideal("a")
    if a is None:
        raise ParseError("missing required key 'a'", *where("a"))

    if "t" not in raw:
        raise ParseError("missing required key 't'", *where("t"))
    t = parse_rational(raw["t"])
    if t <= 0:
        raise ParseError(f"t must be positive, got {raw['t']}", *where("t"))

    cmd = raw["cmd"]
    if cmd not in COMMANDS:
        raise ParseError(f"unknown command {cmd!r}; pick one of {', '.join(COMMANDS)}", *where("cmd"))

    problem = Problem(ring=ring, I=I, a=a, t=t, cmd=cmd)

    if "point" in raw:
        try:
            problem.point = tuple(int(v) % p for v in raw["point"].split(","))
        except ValueError:
            raise ParseError(f"bad point {raw['point']!r}", *where("point"))
        if len(problem.point) != ring.nvars:
            raise ParseError("point arity does not match vars", *where("point"))
    if "d" in raw:
        problem.d_candidates = tuple(
            ring.parse(item) for item in _parse_list(raw["d"], *where("d"))
        )
    if "c" in raw:
        problem.c = ring.parse(raw["c"])
    if "J" in raw:
        problem.J = parse_ideal("J")
    if "z" in raw:
        problem.z = ring.parse(raw["z"])
    for key in ("e_min", "e_max", "degree_bound", "e_cap", "seed"):
        if key in raw:
            try:
                setattr(problem, key, int(raw[key]))
            except ValueError:
                raise ParseError(f"{key} must be an integer", *where(key))
    if "corpus" in raw:
        problem.corpus = raw["corpus"]
    return problem


def format_problem(problem: Problem) -> str:
    lines = [
        f"p={problem.ring.p}",
        f"vars={','.join(problem.ring.variables)}",
        f"I=[{', '.join(str(g) for g in problem.I.generators if not g.is_zero())}]",
        f"a=[{', '.join(str(g) for g in problem.a.generators)}]",
        f"t={format_rational(problem.t)}",
        f"cmd={problem.cmd}",
    ]
    if problem.point is not None:
        lines.append(f"point={','.join(str(v) for v in problem.point)}")
    if problem.d_candidates:
        lines.append(f"d=[{', '.join(str(g) for g in problem.d_candidates)}]")
    if problem.c is not None:
        lines.append(f"c={problem.c}")
    if problem.J is not None:
        lines.append(f"J=[{', '.join(str(g) for g in problem.J.generators)}]")
    if problem.z is not None:
        lines.append(f"z={problem.z}")
    for key in ("e_min", "e_max", "degree_bound", "e_cap", "seed"):
        value = getattr(problem, key)
        if value is not None:
            lines.append(f"{key}={value}")
    if problem.corpus is not None:
        lines.append(f"corpus={problem.corpus}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# running


def _witness_strings(report: CheckReport):
    return [f"(g={g}, a={a})" for g, a in report.witnesses]


def _verdict_exit(verdict) -> int:
    if verdict in (Verdict.YES, ClosureVerdict.IN_CLOSURE_BOUNDED):
        return 0
    if verdict in (Verdict.NO, ClosureVerdict.NOT_IN_CLOSURE):
        return 2
    return 3


def _report_from_check(problem, report: CheckReport, extra=None):
    body = {
        "command": problem.cmd,
        "problem": format_problem(problem).strip().replace("\n", "; "),
        "assumes": [REDUCEDNESS_NOTE],
        "bounds": dict(report.search_bounds),
        "verdict": str(report.verdict),
        "level_e": report.level_e,
        "witnesses": _witness_strings(report),
        "detail": [list(item) for item in report.detail],
    }
    if extra:
        body.update(extra)
    return body, _verdict_exit(report.verdict)


def run(problem: Problem) -> tuple[dict, int]:
    handler = {
        "fpure": _run_fpure,
        "fpure-old": _run_fpure_old,
        "sfr": _run_sfr,
        "testideal": _run_testideal,
        "fpt": _run_fpt,
        "compatible": _run_compatible,
        "closure": _run_closure,
        "hunt": _run_hunt,
    }[problem.cmd]
    return handler(problem)


def _run_fpure(problem):
    pair = problem.pair()
    e_max = problem.e_max or 3
    if problem.point is not None:
        m = maximal_from_point(problem.ring, problem.point)
        report = local_check_at_maximal(pair, m, e_max)
    else:
        report = is_locally_sharply_F_pure(pair, e_max)
    return _report_from_check(problem, report)


def _run_fpure_old(problem):
    pair = problem.pair()
    report = is_sharply_F_pure_old(pair, problem.e_max or 3, problem.degree_bound)
    return _report_from_check(problem, report)


def _run_sfr(problem):
    pair = problem.pair()
    e_max = problem.e_max or 3
    d_cands = problem.d_candidates or None
    report = is_locally_strongly_F_regular(pair, d_cands, e_max)
    extra = {}
    exit_code = _verdict_exit(report.verdict)
    if pair.presentation.is_regular_ambient():
        result = test_ideal_regular(pair.a, pair.t, e_cap=max(problem.e_cap or 4, e_max))
        authoritative = result.contains_one() and result.exactness == EXACT
        extra["test_ideal"] = [str(g) for g in result.tau.generators]
        extra["test_ideal_exactness"] = result.exactness
        extra["authoritative"] = (
            "yes" if authoritative else ("no" if result.exactness == EXACT else "unknown")
        )
        if result.exactness == EXACT:
            exit_code = 0 if result.contains_one() else 2
    body, _ = _report_from_check(problem, report, extra)
    return body, exit_code


def _run_testideal(problem):
    pair = problem.pair()
    e_cap = problem.e_cap or 2
    assumes = [REDUCEDNESS_NOTE, TEST_ELEMENT_NOTE]
    if pair.presentation.is_regular_ambient():
        result = test_ideal_regular(pair.a, pair.t, e_cap=max(e_cap, 4))
        c = problem.c
    else:
        c = problem.c or test_element_heuristic(pair.presentation)
        if problem.c is None:
            assumes.append(
                f"heuristic test element c = {c}; user must confirm it avoids every minimal prime"
            )
        result = test_ideal_quotient(pair, c, e_cap)
    body = {
        "command": problem.cmd,
        "problem": format_problem(problem).strip().replace("\n", "; "),
        "assumes": assumes,
        "bounds": {"e_cap": result.e_cap},
        "test_element": str(c) if c is not None else None,
        "tau": [str(g) for g in result.tau.generators],
        "tau_is_unit_ideal": result.contains_one(),
        "stabilized_at_e": result.stabilized_at_e,
        "exactness": result.exactness,
    }
    return body, 0 if result.exactness == EXACT else 3


def _run_fpt(problem):
    presentation = problem.presentation()
    point = problem.point or (0,) * problem.ring.nvars
    m = maximal_from_point(problem.ring, point)
    e_max = problem.e_max or 3
    seq = nu_sequence(presentation, problem.a, m, e_max)
    lower, upper = fpt_interval(presentation, problem.a, m, e_max)
    body = {
        "command": problem.cmd,
        "problem": format_problem(problem).strip().replace("\n", "; "),
        "assumes": [REDUCEDNESS_NOTE],
        "bounds": {"e_max": e_max, "point": list(point)},
        "nu": [[e, q, nu] for e, q, nu in seq.entries],
        "lower": format_rational(lower),
        "upper": format_rational(upper),
        "is_sharp_at_t": None,
    }
    pair = problem.pair()
    body["is_sharp_at_t"] = any(is_sharp_at(pair, m, e) for e in range(1, e_max + 1))
    return body, 0


def _run_compatible(problem):
    if problem.J is None:
        raise ParseError("compatible needs J=[...]")
    pair = problem.pair()
    report = is_uniformly_compatible(pair, problem.J, problem.e_max or 2)
    return _report_from_check(problem, report)


def _run_closure(problem):
    if problem.J is None or problem.z is None:
        raise ParseError("closure needs J=[...] and z=...")
    pair = problem.pair()
    report = frobenius_closure_membership(
        pair, problem.J, problem.z, problem.e_min or 1, problem.e_max or 3
    )
    body = {
        "command": problem.cmd,
        "problem": format_problem(problem).strip().replace("\n", "; "),
        "assumes": [REDUCEDNESS_NOTE],
        "bounds": {"e_min": problem.e_min or 1, "e_max": problem.e_max or 3},
        "verdict": str(report.verdict),
        "checked": [[e, ok] for e, ok in report.checked],
        "failed_at": report.failed_at,
        "certificate": report.certificate,
    }
    return body, _verdict_exit(report.verdict)


def _default_hunt_corpus(ring_seed: int):
    """A small deterministic corpus of non-principal pairs."""
    import random

    rng = random.Random(ring_seed)
    items = []
    for _ in range(8):
        p = rng.choice([2, 3])
        ring = Ring(p, ("x", "y"))
        x, y = ring.gens()
        ideal_choices = [
            Ideal(ring, (ring.zero(),)),
            Ideal(ring, (x * y,)),
        ]
        a_choices = [
            Ideal(ring, (x, y)),
            Ideal(ring, (x, y * y)),
            Ideal(ring, (x * x, x * y)),
            Ideal(ring, (x + y, x * x)),
        ]
        I = rng.choice(ideal_choices)
        a = rng.choice(a_choices)
        t = Fraction(rng.randint(1, 3), rng.randint(1, 4))
        try:
            pair = PairSpec(RingPresentation(ring, I), a, t)
        except FsingError:
            continue
        items.append(CorpusItem(pair, label=f"seeded:{p}:{a}:{t}"))
    return items


def _corpus_from_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    items = []
    for block in text.split("---"):
        if not block.strip():
            continue
        local_only = False
        label = ""
        kept_lines = []
        for line in block.splitlines():
            stripped = line.split("#", 1)[0].strip()
            if stripped.startswith("local="):
                local_only = stripped.split("=", 1)[1].strip() in ("1", "true", "yes")
            elif stripped.startswith("label="):
                label = stripped.split("=", 1)[1].strip()
            elif stripped:
                kept_lines.append(stripped)
        kept_lines.append("cmd=hunt")
        sub = parse_problem("\n".join(kept_lines))
        items.append(CorpusItem(sub.pair(), local_only=local_only, label=label))
    return items


def _run_hunt(problem):
    if problem.corpus is not None:
        corpus = _corpus_from_file(problem.corpus)
        seed = problem.seed
    else:
        seed = problem.seed if problem.seed is not None else 0
        corpus = _default_hunt_corpus(seed)
    findings = search_discrepancy(corpus, problem.e_max or 3, problem.degree_bound or 2)
    body = {
        "command": problem.cmd,
        "problem": format_problem(problem).strip().replace("\n", "; "),
        "assumes": [REDUCEDNESS_NOTE, "findings are discrepancy candidates, never proofs"],
        "bounds": {
            "e_max": problem.e_max or 3,
            "degree_bound": problem.degree_bound or 2,
            "seed": seed,
            "corpus_size": len(corpus),
        },
        "findings": [
            {
                "index": f.index,
                "label": f.item.label,
                "pair": str(f.item.pair),
                "new_level_e": f.new_report.level_e,
                "old_bounds": dict(f.old_report.search_bounds),
            }
            for f in findings
        ],
    }
    return body, 0


# ---------------------------------------------------------------------------
# rendering and entry point


def render_text(body: dict) -> str:
    lines = []

    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k in sorted(value):
                emit(k, value[k], indent + 1)
        elif isinstance(value, list):
            if not value:
                lines.append(f"{pad}{key}: []")
            else:
                lines.append(f"{pad}{key}:")
                for item in value:
                    if isinstance(item, dict):
                        lines.append(f"{pad}  -")
                        for k in sorted(item):
                            emit(k, item[k], indent + 2)
                    else:
                        lines.append(f"{pad}  - {item}")
        else:
            lines.append(f"{pad}{key}: {value}")

    preferred = [
        "command", "problem", "assumes", "bounds", "verdict", "level_e",
        "witnesses", "detail",
    ]
    seen = set()
    for key in preferred:
        if key in body:
            emit(key, body[key])
            seen.add(key)
    for key in sorted(body):
        if key not in seen:
            emit(key, body[key])
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fsing",
        description="characteristic-p singularity checks for pairs (R, a^t)",
    )
    parser.add_argument("problem", help="problem file, or - for stdin")
    parser.add_argument("--e-max", type=int, default=None)
    parser.add_argument("--degree-bound", type=int, default=None)
    parser.add_argument("--test-element", default=None, help="polynomial text for c")
    parser.add_argument("--point", default=None, help="comma-separated coordinates")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--seed", type=int, default=None, help="hunt corpus seed")
    args = parser.parse_args(argv)

    started = time.monotonic()
    try:
        if args.problem == "-":
            text = sys.stdin.read()
        else:
            with open(args.problem, "r", encoding="utf-8") as fh:
                text = fh.read()
        problem = parse_problem(text)
        if args.e_max is not None:
            problem.e_max = args.e_max
        if args.degree_bound is not None:
            problem.degree_bound = args.degree_bound
        if args.test_element is not None:
            problem.c = problem.ring.parse(args.test_element)
        if args.point is not None:
            problem.point = tuple(int(v) % problem.ring.p for v in args.point.split(","))
        if args.seed is not None:
            problem.seed = args.seed
        body, code = run(problem)
    except FsingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        print(render_text(body), end="")
    print(f"elapsed: {time.monotonic() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
