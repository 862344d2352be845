"""Command-line front end.

    cycloprime test --p 3 --n 2
    cycloprime search --p 5 --n-min 1 --n-max 10 --report h.csv --format csv
    cycloprime verify --p 13 --n-min 2 --n-max 6
    cycloprime baseline pepin 5

Exit codes for test/baseline: 0 prime, 1 composite, 2 inapplicable, 3 error.
verify exits 0 when engine, oracle and (for p = 3, 5) both modes agree, else 1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .baselines import OracleConfig, lucas_lehmer, miller_rabin, pepin
from .engine import (
    CongruenceWitness,
    FactorWitness,
    Outcome,
    Verdict,
    baseline_correction_check,
    run_general,
    run_test,
)
from .errors import CycloprimeError
from .residue_ring import build_params

EXIT_CODES = {Outcome.PRIME: 0, Outcome.COMPOSITE: 1, Outcome.INAPPLICABLE: 2}
EXIT_ERROR = 3
DESK_SCALE_MAX_N = 16
_PRIMALITY_WORDS = {Outcome.PRIME: "yes", Outcome.COMPOSITE: "no", Outcome.INAPPLICABLE: "n/a"}


def _int_field(x: int):
    # keeps huge values out of decimal conversion (interpreter digit limit)
    x = int(x)
    return x if x.bit_length() <= 256 else hex(x)


def _signed(x: int, M: int) -> int:
    return x - M if x > M // 2 else x


def _witness_field(w, M: int):
    if w is None:
        return None
    if isinstance(w, FactorWitness):
        return {"kind": "factor", "factor": _int_field(w.factor), "source": w.source}
    if isinstance(w, CongruenceWitness):
        return {
            "kind": "congruence",
            "j": w.j,
            "observed": _int_field(_signed(w.observed, M)),
            "expected": _signed(w.expected, M),
        }
    return {"kind": "reason", "reason": str(w)}


@dataclass
class Report:
    p: int
    n: int
    digits: int
    mode: str
    verdict: str
    witness: Optional[dict]
    symbol: Optional[dict]
    elapsed_seconds: float
    iterations: int
    note: str = ""

    @classmethod
    def from_verdict(cls, v: Verdict) -> Report:
        P = v.params
        sym = None if v.symbol is None else {"sign": v.symbol.sign, "l": v.symbol.l}
        return cls(
            p=P.p,
            n=P.n,
            digits=P.digits,
            mode=v.mode.value,
            verdict=v.outcome.value,
            witness=_witness_field(v.witness, P.M),
            symbol=sym,
            elapsed_seconds=round(v.elapsed, 3),
            iterations=v.iterations,
            note=v.note,
        )

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "digits": self.digits,
            "mode": self.mode,
            "verdict": self.verdict,
            "witness": self.witness,
            "symbol": self.symbol,
            "elapsed_seconds": self.elapsed_seconds,
            "iterations": self.iterations,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls(**json.loads(text))

    def human(self) -> str:
        line = f"{2 * self.p}^(2^{self.n})+1 [{self.digits} digits]: {self.verdict}"
        line += f"  mode={self.mode} time={self.elapsed_seconds:.3f}s"
        if self.witness and self.witness["kind"] == "factor":
            line += f"  factor={self.witness['factor']} ({self.witness['source']})"
        elif self.witness and self.witness["kind"] == "congruence":
            line += f"  failed S^({self.witness['j']})"
        elif self.witness:
            line += f"  {self.witness['reason']}"
        return line


def table_rows(reports: Sequence[Report], Ms: Sequence[int]) -> list[list[str]]:
    """Rows in the style n, M (or '-'), primality, time."""
    rows = []
    for rep, M in zip(reports, Ms):
        shown = str(M) if rep.verdict == "prime" and M.bit_length() < 4000 else "-"
        rows.append([str(rep.n), shown, _PRIMALITY_WORDS[Outcome(rep.verdict)],
                     f"{rep.elapsed_seconds:.3f}"])
    return rows


def render_csv(reports: Sequence[Report], Ms: Sequence[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "M", "primality", "time_s"])
    w.writerows(table_rows(reports, Ms))
    return buf.getvalue()


def render_jsonl(reports: Sequence[Report]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# --- workers (module level so they pickle) ---------------------------------------------


def _run_one(args: tuple[int, int, str]) -> Report:
    p, n, mode = args
    return Report.from_verdict(run_test(build_params(p, n), mode))


def _verify_one(args: tuple[int, int, int]) -> dict:
    p, n, seed = args
    P = build_params(p, n)
    main = run_test(P, "auto")
    oracle = miller_rabin(P.M, OracleConfig(seed=seed))
    row = {
        "n": n,
        "engine": main.outcome.value,
        "oracle": "prime" if oracle else "composite",
        "agree": main.outcome is not Outcome.INAPPLICABLE and main.is_prime == oracle,
    }
    if p in (3, 5):
        general = run_general(P)
        modes_ok = baseline_correction_check(general, main) and general.outcome is main.outcome
        row["modes_agree"] = modes_ok
        row["agree"] = row["agree"] and modes_ok
    return row


def _map(fn, items, workers: int):
    if workers <= 1:
        return [fn(i) for i in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# --- commands --------------------------------------------------------------------------


def _guard(n_max: int, force: bool):
    if n_max > DESK_SCALE_MAX_N and not force:
        raise CycloprimeError(f"n={n_max} exceeds desk scale ({DESK_SCALE_MAX_N}); pass --force")


def cmd_test(args) -> int:
    _guard(args.n, args.force)
    P = build_params(args.p, args.n)
    verdict = run_test(P, args.mode)
    rep = Report.from_verdict(verdict)
    print(rep.human())
    if args.report:
        text = rep.to_json() + "\n" if args.format == "json" else render_csv([rep], [P.M])
        _write(args.report, text)
    return EXIT_CODES[verdict.outcome]


def cmd_search(args) -> int:
    if args.n_min > args.n_max:
        raise CycloprimeError("--n-min must not exceed --n-max")
    _guard(args.n_max, args.force)
    build_params(args.p, args.n_min)
    ns = list(range(args.n_min, args.n_max + 1))
    reports = _map(_run_one, [(args.p, n, args.mode) for n in ns], args.workers)
    Ms = [build_params(args.p, n).M for n in ns]
    for rep in reports:
        print(rep.human())
    if args.report:
        text = render_jsonl(reports) if args.format == "json" else render_csv(reports, Ms)
        _write(args.report, text)
    return 0


def cmd_verify(args) -> int:
    if args.n_min > args.n_max:
        raise CycloprimeError("--n-min must not exceed --n-max")
    _guard(args.n_max, args.force)
    build_params(args.p, args.n_min)
    items = [(args.p, n, args.seed) for n in range(args.n_min, args.n_max + 1)]
    rows = _map(_verify_one, items, args.workers)
    bad = 0
    for row in rows:
        status = "ok" if row["agree"] else "MISMATCH"
        extra = f" modes_agree={row['modes_agree']}" if "modes_agree" in row else ""
        print(f"p={args.p} n={row['n']}: engine={row['engine']} oracle={row['oracle']}{extra} {status}")
        bad += not row["agree"]
    print(f"{len(rows) - bad}/{len(rows)} agree")
    return 1 if bad else 0


def cmd_baseline(args) -> int:
    fn = {"lucas-lehmer": lucas_lehmer, "pepin": pepin}[args.kind]
    res = fn(args.index)
    print(f"{res.kind} {res.index}: {res.outcome.value} time={res.elapsed:.3f}s")
    if args.report:
        doc = {"kind": res.kind, "index": res.index, "verdict": res.outcome.value,
               "elapsed_seconds": round(res.elapsed, 3)}
        _write(args.report, json.dumps(doc) + "\n")
    return EXIT_CODES[res.outcome]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cycloprime", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("test", help="test one M = (2p)^(2^n)+1")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--mode", choices=("auto", "general", "recurrence"), default="auto")
    t.add_argument("--report", help="write the report here ('-' for stdout)")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--force", action="store_true")
    t.set_defaults(func=cmd_test)

    s = sub.add_parser("search", help="test a range of n, table style")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--mode", choices=("auto", "general", "recurrence"), default="auto")
    s.add_argument("--report")
    s.add_argument("--format", choices=("json", "csv"), default="csv")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="cross-check engine against oracle and both modes")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--n-min", type=int, default=1)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--seed", type=int, default=0, help="oracle randomness")
    v.add_argument("--force", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("baseline", help="Lucas-Lehmer or Pepin test")
    b.add_argument("kind", choices=("lucas-lehmer", "pepin"))
    b.add_argument("index", type=int)
    b.add_argument("--report")
    b.set_defaults(func=cmd_baseline)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CycloprimeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
