"""``supercong verify``: run the identity and congruence suites and report.

Exit status is 0 when every record passes, 1 when any fails and 2 for
usage or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .arith import primes_between
from .congruences import CONGRUENCES
from .engine import run_suite
from .identities import DEFAULT_MAX_N, IDENTITIES
from .report import build_records, dumps_csv, dumps_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MODES = ("identities", "congruences", "all")


@dataclass(frozen=True)
class RunConfig:
    mode: str = "all"
    min_prime: int = 5
    max_prime: int = 199
    max_n: int = DEFAULT_MAX_N
    checks: tuple[str, ...] | None = None  # None means all
    format: str = "json"
    out: str | None = None
    jobs: int = 1

    def selected(self, congruences=None, identities=None) -> list[str]:
        congruences = CONGRUENCES if congruences is None else congruences
        identities = IDENTITIES if identities is None else identities
        pool = []
        if self.mode in ("congruences", "all"):
            pool += list(congruences)
        if self.mode in ("identities", "all"):
            pool += list(identities)
        if self.checks is None:
            return pool
        return [c for c in self.checks if c in pool]


def _prime_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="evaluate the registered checks")
    v.add_argument("--mode", choices=MODES, default="all")
    v.add_argument("--primes", type=_prime_range, default=(5, 199), metavar="LO..HI")
    v.add_argument("--max-n", type=_nonnegative, default=DEFAULT_MAX_N, metavar="N",
                   help="bound for the exact identity suites (default %(default)s)")
    v.add_argument("--checks", default="all", metavar="ID,ID,...|all")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    v.add_argument("--jobs", type=_positive, default=1, metavar="N")
    return parser


def parse_args(argv=None, congruences=None, identities=None) -> RunConfig:
    """Validated RunConfig; exits with status 2 on usage errors."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    lo, hi = ns.primes
    if lo < 5:
        parser.error(f"--primes: lower bound must be >= 5, got {lo}")
    if lo > hi:
        parser.error(f"--primes: empty range {lo}..{hi}")
    known = set(CONGRUENCES if congruences is None else congruences)
    known |= set(IDENTITIES if identities is None else identities)
    checks = None
    if ns.checks != "all":
        checks = tuple(dict.fromkeys(c.strip() for c in ns.checks.split(",") if c.strip()))
        unknown = [c for c in checks if c not in known]
        if not checks or unknown:
            parser.error(f"--checks: unknown check id(s): {', '.join(unknown) or repr(ns.checks)}")
    return RunConfig(ns.mode, lo, hi, ns.max_n, checks, ns.format, ns.out, ns.jobs)


def execute(config: RunConfig, congruences=None, identities=None) -> int:
    ident = IDENTITIES if identities is None else identities
    cong = CONGRUENCES if congruences is None else congruences
    ids = config.selected(cong, ident)
    if config.checks is not None and len(ids) < len(config.checks):
        skipped = [c for c in config.checks if c not in ids]
        print(f"warning: mode {config.mode} skips {', '.join(skipped)}", file=sys.stderr)
    primes = primes_between(config.min_prime, config.max_prime)
    outcomes = run_suite(primes, ids, max_n=config.max_n, jobs=config.jobs,
                         congruences=congruences, identities=identities)
    if any(c in cong for c in ids) and not any(o.check in cong for o in outcomes):
        print(f"warning: no admissible primes in {config.min_prime}..{config.max_prime} "
              "for the selected congruences", file=sys.stderr)
    records = build_records(outcomes, ident)
    text = dumps_json(records) if config.format == "json" else dumps_csv(records)
    try:
        if config.out:
            with open(config.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    failed = [o for o in outcomes if not o.passed]
    for o in failed[:20]:
        detail = o.error or f"lhs {_alias(o.lhs)} != rhs {_alias(o.rhs)}"
        print(f"FAIL {o.check} {o.instance_str}: {detail}", file=sys.stderr)
    print(f"{len(records)} records, {len(outcomes)} instances, {len(failed)} failed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _alias(value) -> str:
    signed = getattr(value, "signed", None)
    return str(value) if signed is None else f"{value.value} (= {signed}) mod {value.modulus}"


def main(argv=None) -> int:
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return execute(config)


if __name__ == "__main__":
    sys.exit(main())
