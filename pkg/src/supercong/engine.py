"""Batch evaluation of registered checks, optionally across worker processes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .congruences import CONGRUENCES, CongruenceSpec, PrimeContext, run_congruence_all
from .identities import DEFAULT_MAX_N, IDENTITIES, IdentitySpec, run_identity
from .outcome import CheckOutcome
from .sequences import euler_numbers


def all_check_ids() -> list[str]:
    return sorted(CONGRUENCES) + sorted(IDENTITIES)


def _congruence_task(p: int, ids: list[str], registry=None, euler=None) -> list[CheckOutcome]:
    registry = registry or CONGRUENCES
    specs = [registry[sid] for sid in ids if registry[sid].prime_filter(p)]
    try:
        ctx = PrimeContext(p, euler)
    except Exception as exc:  # noqa: BLE001 - every instance at p fails
        error = f"{type(exc).__name__}: {exc}"
        return [CheckOutcome(s.id, inst, None, None, False, f"{p}^{s.exponent}", error)
                for s in specs for inst in s.instances(p)]
    out = []
    for spec in specs:
        out.extend(run_congruence_all(spec, p, ctx))
    return out


def _identity_task(sid: str, max_n: int, registry=None) -> list[CheckOutcome]:
    spec = (registry or IDENTITIES)[sid]
    out = []
    for instance in spec.instances(max_n):
        try:
            out.append(run_identity(spec, instance))
        except Exception as exc:  # noqa: BLE001 - reported as a failed instance
            out.append(CheckOutcome(sid, tuple(zip(spec.params, instance)), None, None, False,
                                    error=f"{type(exc).__name__}: {exc}"))
    return out


def run_suite(
    primes: Iterable[int],
    spec_ids: Iterable[str],
    *,
    max_n: int = DEFAULT_MAX_N,
    jobs: int = 1,
    congruences: dict[str, CongruenceSpec] | None = None,
    identities: dict[str, IdentitySpec] | None = None,
) -> list[CheckOutcome]:
    """Evaluate every selected spec on every admissible instance.

    Congruences are batched per prime so the residues of C(2k,k) and S(n)
    are shared across specs. Custom registries are evaluated in-process,
    since their callables need not be picklable. Results are sorted by
    (spec id, instance) whatever the worker count.
    """
    custom = congruences is not None or identities is not None
    cong = congruences if congruences is not None else CONGRUENCES
    ident = identities if identities is not None else IDENTITIES
    ids = list(dict.fromkeys(spec_ids))
    unknown = [s for s in ids if s not in cong and s not in ident]
    if unknown:
        raise KeyError(f"unknown check ids: {', '.join(unknown)}")
    cong_ids = [s for s in ids if s in cong]
    ident_ids = [s for s in ids if s in ident and s not in cong]
    primes = sorted(set(primes))
    if cong_ids:
        primes = [p for p in primes if any(cong[s].prime_filter(p) for s in cong_ids)]
    else:
        primes = []

    euler = euler_numbers(max(primes) - 3) if primes and max(primes) >= 3 else None
    results: list[CheckOutcome] = []
    if jobs <= 1 or custom:
        for p in primes:
            results.extend(_congruence_task(p, cong_ids, cong, euler))
        for sid in ident_ids:
            results.extend(_identity_task(sid, max_n, ident))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_congruence_task, p, cong_ids, None, euler) for p in reversed(primes)]
            futures += [pool.submit(_identity_task, sid, max_n) for sid in ident_ids]
            for fut in futures:
                results.extend(fut.result())
    results.sort(key=CheckOutcome.sort_key)
    return results
