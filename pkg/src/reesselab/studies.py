"""Seeded Monte-Carlo measurements of the scan's behavior.

Two studies: the false-positive rate of the plain approximation-bound scan
on triples with no lever relation, and the recovery rate on keys with a
planted relation (where the bound provably fires, so the plain rate must
be exactly 1; the jump filter's rate is whatever the run shows).

Per-trial seeds derive from the master seed up front, so results are a
pure function of (parameters, seed) regardless of scheduling.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .attack import FULL_FILTER, LEGENDRE_ONLY, scan_triple
from .keys import (
    InvalidParams,
    OmegaFamily,
    OmegaSet,
    PrivateKey,
    PublicKey,
    SystemParams,
    build_omega,
    coprime_sequence,
    transform,
)
from .numtheory import next_prime_above, primes_up_to


@dataclass(frozen=True)
class StudyResult:
    """Outcome of one study: exact hit rate plus a per-trial log.

    reference_bound is the analytic lower bound 1 - 3/(rho_bar + 2) on the
    probability that an unrelated triple still satisfies the approximation
    bound, rho_bar being the largest prime <= rho.
    """

    trials: int
    seed: int
    hit_rate: Fraction
    reference_bound: Fraction
    per_trial_log: tuple[dict, ...]


def _reference_bound(rho: int) -> Fraction:
    rho_bar = primes_up_to(rho)[-1]
    return 1 - Fraction(3, rho_bar + 2)


def _trial_seeds(seed: int, trials: int) -> list[int]:
    master = random.Random(seed)
    return [master.getrandbits(64) for _ in range(trials)]


def _build_key(
    rng: random.Random, n: int, rho: int, omega: OmegaSet, lever: tuple[int, ...]
) -> tuple[PrivateKey, PublicKey]:
    """Key with a caller-chosen lever assignment (studies plant their own)."""
    A = coprime_sequence(rng, n, rho)
    M = next_prime_above(math.prod(A))
    W = rng.randrange(2, M - 1)
    C = transform(A, W, lever, M)
    params = SystemParams(n=n, rho=rho, omega=omega)
    return PrivateKey(params, A, W, lever, M), PublicKey(n, M, rho, C)


def study_false_positive(
    n: int,
    rho: int,
    omega_family: OmegaFamily,
    trials: int,
    seed: int,
    omega_delta: int | None = 1,
) -> StudyResult:
    """Hit rate of the plain scan on uniformly random unrelated triples.

    Each trial generates a fresh key, draws an ordered triple (i, j, k)
    with i != k, j != k and f(i) + f(j) != f(k), and scans it with the
    approximation bound only (min_q = 2, ceiling from the key size).
    """
    if trials < 1:
        raise InvalidParams(f"need at least one trial, got {trials}")
    omega = build_omega(omega_family, n, omega_delta)
    log = []
    hits = 0
    for trial, trial_seed in enumerate(_trial_seeds(seed, trials)):
        rng = random.Random(trial_seed)
        lever = tuple(rng.sample(omega.elements, n))
        priv, pub = _build_key(rng, n, rho, omega, lever)
        while True:
            i, j, k = (rng.randrange(1, n + 1) for _ in range(3))
            if i != k and j != k and lever[i - 1] + lever[j - 1] != lever[k - 1]:
                break
        found = scan_triple(pub, i, j, k, LEGENDRE_ONLY, rho)
        hits += bool(found)
        log.append(
            {
                "trial": trial,
                "triple": (i, j, k),
                "modulus": priv.M,
                "candidates": [h.q_u for h in found],
                "hit": bool(found),
            }
        )
    return StudyResult(
        trials, seed, Fraction(hits, trials), _reference_bound(rho), tuple(log)
    )


def _relation_triples(omega: OmegaSet) -> list[tuple[int, int, int]]:
    """All (a, b, c) in the lever set with a + b == c (a == b allowed)."""
    present = set(omega.elements)
    out = []
    for a in omega.elements:
        for b in omega.elements:
            if a <= b and a + b in present:
                out.append((a, b, a + b))
    return out


def study_completeness(
    n: int,
    rho: int,
    omega_family: OmegaFamily,
    trials: int,
    seed: int,
    omega_delta: int | None = 1,
) -> tuple[StudyResult, StudyResult]:
    """Recovery rates on keys with a planted relation f(i) + f(j) = f(k).

    Returns (plain-bound result, jump-filter result). The oracle value is
    computed from the private key: L = (Z*A_k - A_i*A_j) / M, and the scan
    must list A_k / gcd(L, A_k) among its candidates. A planted relation
    with a == b forces i == j; the repeated index is placed on the
    smallest sequence value, which keeps the approximation bound provably
    satisfied, so the plain rate is 1 by construction.
    """
    if trials < 1:
        raise InvalidParams(f"need at least one trial, got {trials}")
    omega = build_omega(omega_family, n, omega_delta)
    relations = _relation_triples(omega)
    if not relations:
        raise InvalidParams(
            f"lever family {OmegaFamily(omega_family).value} admits no"
            " relation a + b = c; nothing to plant"
        )
    log = []
    plain_hits = 0
    jump_hits = 0
    for trial, trial_seed in enumerate(_trial_seeds(seed, trials)):
        rng = random.Random(trial_seed)
        a, b, c = relations[rng.randrange(len(relations))]
        A = coprime_sequence(rng, n, rho)
        indices = list(range(1, n + 1))
        if a == b:
            i = j = min(indices, key=lambda x: A[x - 1])
            k = rng.choice([x for x in indices if x != i])
            rest = [x for x in indices if x not in (i, k)]
            planted = {i: a, k: c}
        else:
            i, j, k = rng.sample(indices, 3)
            rest = [x for x in indices if x not in (i, j, k)]
            planted = {i: a, j: b, k: c}
        free = [v for v in omega.elements if v not in (a, b, c)]
        planted.update(zip(rest, rng.sample(free, len(rest))))
        lever = tuple(planted[x] for x in indices)
        M = next_prime_above(math.prod(A))
        W = rng.randrange(2, M - 1)
        C = transform(A, W, lever, M)
        pub = PublicKey(n, M, rho, C)
        a_i, a_j, a_k = A[i - 1], A[j - 1], A[k - 1]
        Z = a_i * a_j * pow(a_k, -1, M) % M
        L, remainder = divmod(Z * a_k - a_i * a_j, M)
        target = a_k // math.gcd(L, a_k)
        plain = any(
            h.q_u == target for h in scan_triple(pub, i, j, k, LEGENDRE_ONLY, rho)
        )
        jump = any(
            h.q_u == target for h in scan_triple(pub, i, j, k, FULL_FILTER, rho)
        )
        plain_hits += plain
        jump_hits += jump
        log.append(
            {
                "trial": trial,
                "triple": (i, j, k),
                "planted_levers": (a, b, c),
                "true_value": a_k,
                "quotient_L": L,
                "oracle_exact": remainder == 0,
                "reduced_target": target,
                "plain_hit": plain,
                "jump_hit": jump,
            }
        )
    bound = _reference_bound(rho)
    plain_result = StudyResult(
        trials, seed, Fraction(plain_hits, trials), bound, tuple(log)
    )
    jump_result = StudyResult(
        trials, seed, Fraction(jump_hits, trials), bound, tuple(log)
    )
    return plain_result, jump_result


def study_to_json(result: StudyResult) -> str:
    def encode(v):
        if isinstance(v, bool):
            return v
        if isinstance(v, int):
            return str(v)
        if isinstance(v, (list, tuple)):
            return [encode(x) for x in v]
        return v

    obj = {
        "trials": str(result.trials),
        "seed": str(result.seed),
        "hit_rate": {
            "num": str(result.hit_rate.numerator),
            "den": str(result.hit_rate.denominator),
        },
        "reference_bound": {
            "num": str(result.reference_bound.numerator),
            "den": str(result.reference_bound.denominator),
        },
        "per_trial_log": [
            {key: encode(v) for key, v in entry.items()}
            for entry in result.per_trial_log
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def study_to_table(result: StudyResult) -> str:
    rate = result.hit_rate
    lines = [
        f"trials = {result.trials}, seed = {result.seed}",
        f"hit rate = {rate} ({float(rate):.4f})",
        f"reference bound = {result.reference_bound}"
        f" ({float(result.reference_bound):.4f})",
    ]
    return "\n".join(lines) + "\n"
