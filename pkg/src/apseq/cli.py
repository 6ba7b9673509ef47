"""Command-line front end.

    apseq analyze  SEQ_FILE  [--max-order K] [--expect-order K] ...
    apseq classify SEQ_FILE  --candidates 1/2,1,2 ...
    apseq verify   THEOREM [INSTANCE_FILE] ...

JSON is the canonical output (sorted keys, rationals as "p/q" strings);
``--format text`` renders the same document line by line.

Exit codes: 0 pass, 1 violated, 2 inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, fields, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import isometry, operators, powerclass, ringpert, seqalg
from .diffcalc import (
    APPROXIMATE,
    DEFAULT_TOLERANCE,
    EXACT,
    PolynomialForm,
    Sequence,
    certified_order,
)
from .errors import (
    ConsistencyError,
    HypothesisViolation,
    Inconclusive,
    InputError,
    InsufficientData,
    NotAnAP,
)
from .exactnum import GaussianRational, format_scalar, parse_rational, parse_scalar, verify_identity
from .linalg import ExactMatrix, Vector

EXIT_PASS, EXIT_VIOLATED, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3

THEOREMS = (
    "diagonal", "steps", "decimate", "gcd-refine", "ring-perturbation", "mq-isometry",
    "rho", "power", "product", "power-gcd", "m-isometry", "hs-perturbation",
    "n-inverse", "inverse-perturbation", "identities",
)


class ClaimViolated(Exception):
    """Carries a finished report whose claim failed (exit 1)."""

    def __init__(self, result: dict):
        super().__init__("claim violated")
        self.result = result


@dataclass(frozen=True)
class JobSpec:
    command: str
    inputs: tuple = ()
    horizon: int | None = None
    h_max: int | None = None
    tolerance: float = DEFAULT_TOLERANCE
    mode: str | None = None  # None: decided by the data
    min_windows: int = 2
    candidates: tuple = ()
    output_format: str = "json"
    expect_order: int | None = None
    pairs: int = 32
    seed: int = 0

    def __post_init__(self):
        if self.horizon is not None and self.horizon < 2:
            raise InputError("--horizon must be >= 2")
        if self.tolerance < 0:
            raise InputError("--tolerance must be >= 0")
        if self.mode == EXACT and self.tolerance not in (0, DEFAULT_TOLERANCE):
            raise InputError("--exact forces tolerance 0")
        if self.min_windows < 0:
            raise InputError("--min-windows must be >= 0")
        if self.output_format not in ("json", "text"):
            raise InputError("--format is json or text")

    @property
    def qualifiers(self) -> dict:
        return {
            "horizon": self.horizon,
            "max_order": self.h_max,
            "min_windows": self.min_windows,
            "mode": self.mode or "auto",
            "tolerance": 0 if self.mode == EXACT else self.tolerance,
        }


# --- JSON conversion --------------------------------------------------------


def to_jsonable(obj: Any) -> Any:
    """Plain JSON data; exact scalars become canonical strings."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else repr(obj)
    if isinstance(obj, (Fraction, GaussianRational)):
        return format_scalar(obj)
    if isinstance(obj, (Vector, ExactMatrix)):
        return obj.to_strings()
    if isinstance(obj, PolynomialForm):
        return [to_jsonable(c) for c in obj.coefficients]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def render_text(doc: Any, prefix: str = "") -> list[str]:
    if isinstance(doc, dict):
        lines = []
        for key in sorted(doc):
            lines += render_text(doc[key], f"{prefix}.{key}" if prefix else key)
        return lines
    if isinstance(doc, list) and any(isinstance(v, (dict, list)) for v in doc):
        lines = []
        for i, v in enumerate(doc):
            lines += render_text(v, f"{prefix}[{i}]")
        return lines
    return [f"{prefix}: {json.dumps(doc, ensure_ascii=False)}"]


# --- input parsing ----------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _exact_scalar(x):
    if isinstance(x, bool):
        raise InputError("booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise InputError(f"expected an exact number (int or 'p/q' string), got {x!r}")


def parse_matrix(obj) -> ExactMatrix:
    """{"dim": n, "entries": [[...]]} or a bare list of rows."""
    if isinstance(obj, dict):
        if "entries" not in obj:
            raise InputError("matrix object needs 'entries'")
        entries = obj["entries"]
        dim = obj.get("dim")
    else:
        entries, dim = obj, None
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise InputError("matrix entries must be a list of rows")
    m = ExactMatrix([[_exact_scalar(x) for x in row] for row in entries])
    if dim is not None and dim != m.dim:
        raise InputError(f"matrix dim {dim} does not match {m.dim} rows")
    return m


def _looks_float(tok: str) -> bool:
    t = tok.strip().lower()
    return any(c in t for c in ".e") or t in ("inf", "-inf", "nan")


def _scalar_token(tok, force_exact: bool):
    if isinstance(tok, float):
        if force_exact:
            raise InputError("float value in --exact mode")
        return tok
    if isinstance(tok, str) and _looks_float(tok) and "/" not in tok and "i" not in tok:
        if force_exact:
            raise InputError(f"decimal value {tok!r} in --exact mode")
        try:
            return float(tok)
        except ValueError:
            raise InputError(f"bad number {tok!r}") from None
    return _exact_scalar(tok)


def parse_sequence_text(text: str, job: JobSpec) -> Sequence:
    """JSON {"kind", "elements"} with a CSV fallback for scalar kinds."""
    force_exact = job.mode == EXACT
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, dict):
        kind = doc.get("kind", "rational")
        elements = doc.get("elements")
        if not isinstance(elements, list) or not elements:
            raise InputError("sequence file needs a nonempty 'elements' list")
        if kind in ("rational", "gaussian", "integer"):
            values = [_exact_scalar(x) for x in elements]
        elif kind == "float":
            if force_exact:
                raise InputError("float sequence in --exact mode")
            values = [float(x) for x in elements]
        elif kind == "vector":
            values = [Vector([_exact_scalar(x) for x in v]) for v in elements]
        elif kind == "matrix":
            values = [parse_matrix(m) for m in elements]
        else:
            raise InputError(f"unknown sequence kind {kind!r}")
    elif isinstance(doc, list):
        values = [_scalar_token(x, force_exact) for x in doc]
    else:
        tokens = [t.strip() for row in csv.reader(io.StringIO(text)) for t in row if t.strip()]
        if not tokens:
            raise InputError("empty sequence file")
        values = [_scalar_token(t, force_exact) for t in tokens]
    if job.horizon is not None:
        values = values[: job.horizon]
    if any(isinstance(v, float) for v in values):
        if not all(isinstance(v, float) for v in values):
            values = [float(v) for v in values]
        tol = job.tolerance if job.tolerance > 0 else DEFAULT_TOLERANCE
        return Sequence(tuple(values), APPROXIMATE, tol)
    return Sequence(tuple(values))


def load_sequence(path: str, job: JobSpec) -> Sequence:
    return parse_sequence_text(_read(path), job)


def load_json(path: str) -> dict:
    try:
        doc = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("instance file must hold a JSON object")
    return doc


def _need(inst: dict, key: str):
    if key not in inst:
        raise InputError(f"instance is missing {key!r}")
    return inst[key]


def _int(inst: dict, key: str, default=None) -> int:
    v = inst.get(key, default)
    if v is None:
        raise InputError(f"instance is missing {key!r}")
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{key!r} must be an integer")
    return v


def parse_map(obj, p=None):
    """A matrix spec or a metric-space spec {"points", "dist", "map"}."""
    if isinstance(obj, dict) and "dist" in obj:
        dist = [[_scalar_token(x, False) for x in row] for row in obj["dist"]]
        space = isometry.FiniteMetricSpace(dist)
        if "points" in obj and obj["points"] != space.points:
            raise InputError("'points' does not match the distance matrix")
        isometry.validate_metric(space)
        return isometry.FiniteMap(space, _need(obj, "map"))
    return isometry.LinearMap(parse_matrix(obj), isometry.NormSpec(2 if p is None else p))


def _pairs(inst: dict, T):
    raw = inst.get("pairs")
    if raw is None:
        return None
    if isinstance(T, isometry.FiniteMap):
        return [tuple(int(i) for i in pair) for pair in raw]
    return [(Vector([_exact_scalar(a) for a in x]), Vector([_exact_scalar(a) for a in y])) for x, y in raw]


def _point(T, raw):
    if isinstance(T, isometry.FiniteMap):
        return int(raw)
    return Vector([_exact_scalar(a) for a in raw])


# --- commands ---------------------------------------------------------------


def _order_dict(rep) -> dict:
    return {
        "certified_order": rep.certified_order,
        "strict": rep.strict,
        "windows_checked": rep.windows_checked,
        "newton_coeffs": rep.newton_coeffs,
        "leading": rep.leading,
        "monomial": rep.monomial,
        "horizon": rep.horizon,
        "kind": rep.kind,
        "mode": rep.mode,
        "tolerance": rep.tolerance,
    }


def cmd_analyze(job: JobSpec) -> dict:
    seq = load_sequence(job.inputs[0], job)
    try:
        rep = certified_order(seq, job.h_max, job.min_windows)
    except NotAnAP as exc:
        result = {"not_an_ap": True, "h_max": exc.h_max, "checked_up_to": exc.checked_up_to,
                  "horizon": exc.horizon}
        if job.expect_order is not None:
            raise ClaimViolated(result)
        return result
    result = _order_dict(rep)
    if rep.kind in ("rational", "float", "integer") and rep.monomial is not None:
        mono = powerclass.eventual_monotonicity(rep)
        result["monotonicity"] = {"kind": mono.kind, "n0": mono.n0}
    if job.expect_order is not None and rep.certified_order != job.expect_order:
        result["expected_order"] = job.expect_order
        raise ClaimViolated(result)
    return result


def cmd_classify(job: JobSpec, k_max: int = 3) -> dict:
    seq = load_sequence(job.inputs[0], job)
    if not job.candidates:
        raise InputError("classify needs --candidates")
    cls = powerclass.classify(seq, job.candidates, job.h_max, job.tolerance or DEFAULT_TOLERANCE,
                              job.min_windows)
    if cls.variant == powerclass.NEVER_AP and len(cls.inconclusive) == len(cls.candidates):
        raise Inconclusive("the horizon is too short for every candidate exponent")
    result = cls.to_dict()
    listing_h = job.h_max if job.h_max is not None else len(seq) - 1 - max(job.min_windows, 1)
    sets = powerclass.pi_sets(cls, max(listing_h, 0), k_max)
    result["pi_sets"] = sets
    return result


def _seq_from(inst: dict, key: str = "sequence") -> Sequence:
    raw = _need(inst, key)
    if isinstance(raw, dict):
        return parse_sequence_text(json.dumps(raw), JobSpec("verify"))
    return Sequence(tuple(_exact_scalar(x) for x in raw))


def _verdict(holds: bool, result: dict) -> dict:
    result["holds"] = bool(holds)
    if not holds:
        raise ClaimViolated(result)
    return result


def verify_diagonal(inst, job):
    grid = seqalg.DoubleSequence.exact(_need(inst, "grid"))
    rep = seqalg.diagonal(grid, inst.get("h_max"), job.min_windows)
    return _verdict(rep.holds, to_jsonable(rep))


def verify_steps(inst, job):
    seq = _seq_from(inst)
    steps = [int(_exact_scalar(s)) for s in _need(inst, "steps")]
    h = certified_order(seq, min_windows=job.min_windows).certified_order
    k = certified_order(Sequence(tuple(Fraction(s) for s in steps[1:])),
                        min_windows=job.min_windows).certified_order
    sub = seqalg.subsequence_by_steps(seq, steps)
    observed = certified_order(sub, min_windows=job.min_windows).certified_order
    return _verdict(observed == h * (k + 1),
                    {"h": h, "k": k, "predicted": h * (k + 1), "observed": observed})


def verify_decimate(inst, job):
    seq = _seq_from(inst)
    d = _int(inst, "d")
    h = certified_order(seq, min_windows=job.min_windows).certified_order
    observed = certified_order(seqalg.decimate(seq, d), min_windows=job.min_windows).certified_order
    return _verdict(observed == h, {"d": d, "order": h, "observed": observed})


def verify_gcd_refine(inst, job):
    if "sequence" in inst:
        out = seqalg.subsequence_orders(_seq_from(inst), _int(inst, "c"), _int(inst, "d"),
                                        job.min_windows)
        return _verdict(out["holds"], out)
    c, h, d, k = (_int(inst, key) for key in ("c", "h", "d", "k"))
    e, ell = seqalg.gcd_refine(c, h, d, k)
    return _verdict(True, {"e": e, "l": ell, "certificate": seqalg.char_poly(e, ell).coefficients})


def verify_ring(inst, job):
    y, x, a, b = (parse_matrix(_need(inst, key)) for key in ("y", "x", "a", "b"))
    horizon = job.horizon or inst.get("horizon", 12)
    rep = ringpert.verify_ring_perturbation(y, x, a, b, horizon, job.min_windows)
    return _verdict(rep.holds and bool(rep.prediction_correct), to_jsonable(rep))


def _iso_common(inst, job):
    T = parse_map(_need(inst, "map"), inst.get("p"))
    q = parse_rational(str(inst.get("q", 2)))
    horizon = job.horizon or inst.get("horizon", 12)
    return T, q, horizon, _pairs(inst, T)


def _iso_report(rep: isometry.IsometryReport) -> dict:
    out = to_jsonable(rep)
    out["orders"] = rep.orders
    return out


def verify_mq(inst, job):
    T, q, horizon, pairs = _iso_common(inst, job)
    rep = isometry.check_mq_isometry(T, _int(inst, "m"), q, horizon, pairs,
                                     min_windows=job.min_windows, seed=job.seed,
                                     random_pairs=job.pairs)
    return _verdict(rep.holds, _iso_report(rep))


def verify_rho(inst, job):
    T, q, _, _ = _iso_common(inst, job)
    m = _int(inst, "m")
    x, y = _point(T, _need(inst, "x")), _point(T, _need(inst, "y"))
    value = isometry.rho_q(T, m, q, x, y)
    moved = isometry.rho_q(T, m, q, T.apply(x), T.apply(y))
    if isinstance(value, Fraction) and isinstance(moved, Fraction):
        invariant = value == moved
    else:
        invariant = abs(float(value) - float(moved)) <= DEFAULT_TOLERANCE * max(1.0, abs(float(value)))
    return _verdict(invariant, {"rho_q": value, "rho_q_moved": moved, "invariant": invariant,
                                "rho": isometry.rho(T, m, q, x, y)})


def _theorem(rep: isometry.TheoremReport) -> dict:
    return _verdict(rep.holds, to_jsonable(rep))


def verify_power(inst, job):
    T, q, horizon, pairs = _iso_common(inst, job)
    return _theorem(isometry.verify_power_theorem(
        T, _int(inst, "k"), _int(inst, "m"), q, horizon, pairs, min_windows=job.min_windows,
        seed=job.seed))


def verify_product(inst, job):
    p = inst.get("p")
    S, T = parse_map(_need(inst, "S"), p), parse_map(_need(inst, "T"), p)
    q = parse_rational(str(inst.get("q", 2)))
    horizon = job.horizon or inst.get("horizon", 10)
    return _theorem(isometry.verify_product_theorem(
        S, T, _int(inst, "n"), _int(inst, "m"), q, horizon, _pairs(inst, T),
        min_windows=job.min_windows, seed=job.seed))


def verify_power_gcd(inst, job):
    T, q, horizon, pairs = _iso_common(inst, job)
    return _theorem(isometry.verify_power_gcd(
        T, _int(inst, "c"), _int(inst, "m"), _int(inst, "d"), _int(inst, "l"), q, horizon, pairs,
        min_windows=job.min_windows, seed=job.seed))


def verify_m_isometry(inst, job):
    T = parse_matrix(_need(inst, "T"))
    m = _int(inst, "m")
    verdict = operators.is_m_isometry(T, m, seed=job.seed)
    return _verdict(verdict != operators.NO, {"m": m, "verdict": verdict,
                                              "defect_zero": operators.defect(T, m).is_zero()})


def verify_hs(inst, job):
    T, Q = parse_matrix(_need(inst, "T")), parse_matrix(_need(inst, "Q"))
    rep = operators.verify_hs_perturbation(T, Q, inst.get("m"))
    out = to_jsonable(rep)
    return _verdict(rep.holds, out)


def verify_n_inverse(inst, job):
    S, T = parse_matrix(_need(inst, "S")), parse_matrix(_need(inst, "T"))
    n = _int(inst, "n")
    verdict = operators.left_n_inverse_check(S, T, n)
    return _verdict(verdict != operators.NO, {"n": n, "verdict": verdict})


def verify_inverse_pert(inst, job):
    S, T, P, Q = (parse_matrix(_need(inst, key)) for key in ("S", "T", "P", "Q"))
    rep = operators.verify_inverse_perturbation(S, T, P, Q, inst.get("n"))
    return _verdict(rep.holds, to_jsonable(rep))


def verify_identities(inst, job):
    n_max = _int(inst, "n_max", 30)
    i_max = _int(inst, "i_max", 40)
    failures = []
    count = 0
    for i in range(1, i_max + 1):
        for j in range(i):
            count += 1
            if not verify_identity("alternating_partial_sum", i=i, j=j):
                failures.append(["alternating_partial_sum", i, j])
    for n in range(n_max + 1):
        for h in range(n):
            for k in range(h + 1):
                count += 1
                if not verify_identity("skipped_sum", n=n, h=h, k=k):
                    failures.append(["skipped_sum", n, h, k])
        for h in range(n_max + 1):
            count += 1
            if not verify_identity("unity_sum", n=n, h=h):
                failures.append(["unity_sum", n, h])
    return _verdict(not failures, {"checked": count, "failures": failures[:20]})


VERIFIERS = {
    "diagonal": verify_diagonal,
    "steps": verify_steps,
    "decimate": verify_decimate,
    "gcd-refine": verify_gcd_refine,
    "ring-perturbation": verify_ring,
    "mq-isometry": verify_mq,
    "rho": verify_rho,
    "power": verify_power,
    "product": verify_product,
    "power-gcd": verify_power_gcd,
    "m-isometry": verify_m_isometry,
    "hs-perturbation": verify_hs,
    "n-inverse": verify_n_inverse,
    "inverse-perturbation": verify_inverse_pert,
    "identities": verify_identities,
}


def cmd_verify(job: JobSpec, theorem: str) -> dict:
    if theorem not in VERIFIERS:
        raise InputError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    inst = load_json(job.inputs[0]) if job.inputs else {}
    if not job.inputs and theorem != "identities":
        raise InputError(f"verify {theorem} needs an instance file")
    result = VERIFIERS[theorem](inst, job)
    result["theorem"] = theorem
    return result


# --- driver -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--horizon", type=int, help="use only the first N terms")
    common.add_argument("--max-order", type=int, dest="max_order", help="largest order tried")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="relative tolerance for floating-point data")
    common.add_argument("--exact", action="store_true", help="reject inexact input; tolerance 0")
    common.add_argument("--min-windows", type=int, default=2, dest="min_windows",
                        help="vanishing windows required to certify an order (default 2)")
    common.add_argument("--pairs", type=int, default=32, help="random pairs for normed-mode checks")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="apseq", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="certify the order of a sequence")
    p.add_argument("file")
    p.add_argument("--expect-order", type=int, dest="expect_order")
    p = sub.add_parser("classify", parents=[common], help="power classification")
    p.add_argument("file")
    p.add_argument("--candidates", required=True, help="comma-separated exponents, e.g. 1/2,1,2")
    p.add_argument("--k-max", type=int, default=3, dest="k_max")
    p = sub.add_parser("verify", parents=[common], help="check a theorem on an instance")
    p.add_argument("theorem", help=", ".join(THEOREMS))
    p.add_argument("file", nargs="?")
    return parser


def make_job(args) -> JobSpec:
    candidates = ()
    if getattr(args, "candidates", None):
        try:
            candidates = tuple(parse_rational(c.strip()) for c in args.candidates.split(",") if c.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad --candidates: {exc}") from None
        if any(c <= 0 for c in candidates):
            raise InputError("candidate exponents must be positive")
    inputs = (args.file,) if getattr(args, "file", None) else ()
    return JobSpec(
        command=args.command,
        inputs=inputs,
        horizon=args.horizon,
        h_max=args.max_order,
        tolerance=0.0 if args.exact else args.tolerance,
        mode=EXACT if args.exact else None,
        min_windows=args.min_windows,
        candidates=candidates,
        output_format=args.format,
        expect_order=getattr(args, "expect_order", None),
        pairs=args.pairs,
        seed=args.seed,
    )


def run(argv=None) -> tuple[int, dict, str]:
    """Parse, execute, and return (exit code, report document, output format)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_INPUT
        return (EXIT_PASS if code == 0 else EXIT_INPUT), {}, "json"
    doc: dict = {"command": args.command}
    try:
        job = make_job(args)
        doc["qualifiers"] = job.qualifiers
        if job.command == "analyze":
            result = cmd_analyze(job)
        elif job.command == "classify":
            result = cmd_classify(job, args.k_max)
        else:
            result = cmd_verify(job, args.theorem)
        doc.update(status="pass", result=to_jsonable(result))
        code = EXIT_PASS
    except ClaimViolated as exc:
        doc.update(status="violated", result=to_jsonable(exc.result))
        code = EXIT_VIOLATED
    except HypothesisViolation as exc:
        doc.update(status="violated", error=str(exc), failed=[str(f) for f in exc.failures])
        code = EXIT_VIOLATED
    except ConsistencyError as exc:
        doc.update(status="violated", error=str(exc))
        code = EXIT_VIOLATED
    except Inconclusive as exc:
        doc.update(status="inconclusive", error=str(exc))
        code = EXIT_INCONCLUSIVE
    except (InputError, InsufficientData, ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
        doc.update(status="input_error", error=str(exc))
        code = EXIT_INPUT
    return code, doc, args.format


def main(argv=None) -> int:
    code, doc, fmt = run(argv)
    if not doc:
        return code
    if fmt == "text":
        sys.stdout.write("\n".join(render_text(doc)) + "\n")
    else:
        sys.stdout.write(canonical_json(doc))
    if doc.get("error"):
        print(f"apseq: {doc['status']}: {doc['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
