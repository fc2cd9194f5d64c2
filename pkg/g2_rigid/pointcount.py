"""Point counts on fibers of the double cover Hyp(0, 0) over F_q.

At (T1, T2) = (0, 1) and X7 = t the fiber is

    Y^2 = f(x) = prod_(k=1..6) (x_(k+1) - x_k) * x1 x3 x5 x7 * (x1-1)(x2-1)(x4-1)(x6-1)

over the domain x_a in F_q minus {0, 1} (a = 1..6) with consecutive
coordinates distinct, x7 included. f never vanishes there, so every domain
point carries 1 + chi_2(f(x)) points with Y != 0. The two counting methods
(quadratic character sum over the domain, and pairs (x, y) with
y^2 = f(x) found by running y over F_q^*) must agree.

Prime fields only.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Literal

import numpy as np

from g2_rigid.config import DEFAULT_THREADS
from g2_rigid.errors import InternalConsistencyError, InvalidDataError
from g2_rigid.models import CharacterSumReport

logger = logging.getLogger(__name__)

Method = Literal["char-sum", "direct", "both"]
MAX_Q = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def validate_q(q: int) -> None:
    if q < 3 or q >= MAX_Q or not _is_prime(q):
        raise InvalidDataError(f"q must be an odd prime below 2^31, got {q}")


def validate_t(q: int, t: int) -> None:
    if not 2 <= t < q:
        raise InvalidDataError(f"fiber value t must lie in F_{q} minus {{0, 1}}, got {t}")


def legendre_table(q: int) -> np.ndarray:
    """chi_2(a) for a = 0..q-1 by Euler's criterion; chi_2(0) = 0."""
    validate_q(q)
    table = np.zeros(q, dtype=np.int64)
    half = (q - 1) // 2
    for a in range(1, q):
        table[a] = 1 if pow(a, half, q) == 1 else -1
    return table


def predicted_domain_size(q: int, t: int) -> int:
    """Chains x1..x6 in F_q minus {0, 1}, consecutive distinct, x6 != t.

    Transfer matrix on two states: the chain currently ends at t or not.
    """
    validate_q(q)
    validate_t(q, t)
    m = q - 2
    at_t, off_t = 1, m - 1
    for _ in range(5):
        at_t, off_t = off_t, at_t * (m - 1) + off_t * (m - 2)
    return off_t


def _count_chunk(q: int, t: int, x1_values: np.ndarray, chi: np.ndarray) -> tuple[int, int]:
    """(visited, character sum) for x1 in x1_values."""
    values = np.arange(2, q, dtype=np.int64)
    x4 = values[:, None, None]
    x5 = values[None, :, None]
    x6 = values[None, None, :]
    tail_mask = (x5 != x4) & (x6 != x5) & (x6 != t)
    tail = (x5 - x4) % q * ((x6 - x5) % q) % q
    tail = tail * ((t - x6) % q) % q * x5 % q * t % q
    tail = tail * ((x4 - 1) % q) % q * ((x6 - 1) % q) % q

    visited = s_value = 0
    for x1 in (int(v) for v in x1_values):
        for x2 in range(2, q):
            if x2 == x1:
                continue
            head = (x2 - x1) * x1 % q * (x1 - 1) % q * (x2 - 1) % q
            for x3 in range(2, q):
                if x3 == x2:
                    continue
                scalar = head * ((x3 - x2) % q) % q * x3 % q
                mask = tail_mask & (x4 != x3)
                f = (x4 - x3) % q * tail % q * scalar % q
                selected = f[mask]
                visited += int(selected.size)
                s_value += int(chi[selected].sum())
    return visited, s_value


def _value_histogram(q: int, t: int, x1_values: np.ndarray) -> tuple[int, np.ndarray]:
    """(domain points, histogram of f over them) for x1 in x1_values.

    Runs over all of F_q and tests every domain condition explicitly.
    """
    values = np.arange(q, dtype=np.int64)
    x4 = values[:, None, None]
    x5 = values[None, :, None]
    x6 = values[None, None, :]
    inner = (x4 > 1) & (x5 > 1) & (x6 > 1) & (x5 != x4) & (x6 != x5) & (x6 != t)
    # factors free of x1, x2, x3
    rest = (x5 - x4) % q * ((x6 - x5) % q) % q * ((t - x6) % q) % q
    rest = rest * x5 % q * t % q * ((x4 - 1) % q) % q * ((x6 - 1) % q) % q

    visited = 0
    hist = np.zeros(q, dtype=np.int64)
    for x1 in (int(v) for v in x1_values):
        if x1 in (0, 1):
            continue
        for x2 in range(q):
            if x2 in (0, 1) or x2 == x1:
                continue
            for x3 in range(q):
                if x3 in (0, 1) or x3 == x2:
                    continue
                mask = inner & (x4 != x3)
                outer = (x2 - x1) * (x3 - x2) * x1 * x3 * (x1 - 1) * (x2 - 1) % q
                f = (x4 - x3) % q * rest % q * outer % q
                selected = f[mask]
                visited += int(selected.size)
                hist += np.bincount(selected, minlength=q)
    return visited, hist


def _solutions(q: int, hist: np.ndarray) -> int:
    """Pairs (x, y), y in F_q^*, with y^2 = f(x), given the histogram of f."""
    return sum(int(hist[y * y % q]) for y in range(1, q))


def _check_visited(q: int, t: int, visited: int, predicted: int) -> None:
    if visited != predicted:
        raise InternalConsistencyError(f"q={q}, t={t}: visited {visited} tuples, expected {predicted}")


def count_fiber(q: int, t: int, method: Method = "both", threads: int | None = None) -> CharacterSumReport:
    """Count points on the fiber over X7 = t.

    The x1 range is split across worker threads; partial sums are reduced in
    chunk order, so the result does not depend on the thread count.
    """
    validate_q(q)
    validate_t(q, t)
    if method not in ("char-sum", "direct", "both"):
        raise InvalidDataError(f"unknown counting method {method!r}")
    threads = max(1, threads or DEFAULT_THREADS)
    started = time.perf_counter()

    chi = legendre_table(q)
    want_sum = method in ("char-sum", "both")
    want_direct = method in ("direct", "both")
    predicted = predicted_domain_size(q, t)

    s_value = direct = None
    with ThreadPoolExecutor(max_workers=threads) as executor:
        if want_sum:
            chunks = [c for c in np.array_split(np.arange(2, q, dtype=np.int64), threads) if c.size]
            partials = list(executor.map(lambda chunk: _count_chunk(q, t, chunk, chi), chunks))
            visited = sum(p[0] for p in partials)
            s_value = sum(p[1] for p in partials)
            _check_visited(q, t, visited, predicted)
        if want_direct:
            chunks = [c for c in np.array_split(np.arange(q, dtype=np.int64), threads) if c.size]
            partials = list(executor.map(lambda chunk: _value_histogram(q, t, chunk), chunks))
            visited = sum(p[0] for p in partials)
            hist = np.zeros(q, dtype=np.int64)
            for _, part in partials:
                hist += part
            direct = _solutions(q, hist)
            _check_visited(q, t, visited, predicted)

    domain_size = visited
    if s_value is None:
        hyp_count = direct
        s_value = direct - domain_size
    else:
        hyp_count = domain_size + s_value
    if direct is not None and direct != domain_size + s_value:
        raise InternalConsistencyError(
            f"q={q}, t={t}: direct count {direct} != {domain_size} + {s_value}"
        )

    wall_time = time.perf_counter() - started
    logger.info("q=%d t=%d: S=%d, |S|/q^3=%.4f (%.2fs)", q, t, s_value, abs(s_value) / q**3, wall_time)
    return CharacterSumReport(
        q=q,
        t=t,
        method=method,
        domain_size=domain_size,
        s_value=s_value,
        hyp_count=hyp_count,
        direct_count=direct,
        visited=visited,
        predicted_domain_size=predicted,
        wall_time=wall_time,
        threads=threads,
    )


def sweep(q_list: Iterable[int], threads: int | None = None, method: Method = "both") -> list[CharacterSumReport]:
    """count_fiber over every valid t for each q, ordered by q then t."""
    q_values = list(q_list)
    for q in q_values:
        validate_q(q)
    reports = []
    for q in q_values:
        for t in range(2, q):
            reports.append(count_fiber(q, t, method=method, threads=threads))
    logger.info("sweep over %s: %d fibers", q_values, len(reports))
    return reports
