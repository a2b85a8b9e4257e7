"""Partitions, bipartitions and horizontal strips (Pieri rule).

A partition is a plain tuple of positive integers in non-increasing order;
a bipartition is a pair of partitions.  Use :func:`partition` to normalize
arbitrary input (zero parts are dropped, parts re-sorted).
"""

import json


def partition(parts=()):
    """Normalize ``parts`` into a partition tuple."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def bipartition(first=(), second=()):
    return (partition(first), partition(second))


def size(t):
    return sum(t)


def bipartition_size(b):
    return sum(b[0]) + sum(b[1])


def partitions_of(n, max_part=None):
    """Yield the partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def bipartitions_of(n):
    for k in range(n, -1, -1):
        for a in partitions_of(k):
            for b in partitions_of(n - k):
                yield (a, b)


def _interleave(lo, hi, total):
    # rows r with lo[r] <= new[r] <= hi[r] and sum(new) == total
    out = []
    n = len(lo)
    # suffix slack bounds for pruning
    min_rest = [0] * (n + 1)
    max_rest = [0] * (n + 1)
    for r in range(n - 1, -1, -1):
        min_rest[r] = min_rest[r + 1] + lo[r]
        max_rest[r] = max_rest[r + 1] + hi[r]

    def rec(r, remaining, acc):
        if r == n:
            if remaining == 0:
                out.append(partition(acc))
            return
        start = max(lo[r], remaining - max_rest[r + 1])
        stop = min(hi[r], remaining - min_rest[r + 1])
        for v in range(start, stop + 1):
            acc.append(v)
            rec(r + 1, remaining - v, acc)
            acc.pop()

    if min_rest[0] <= total <= max_rest[0]:
        rec(0, total, [])
    return out


def add_strip(t, d):
    """All partitions obtained from ``t`` by adding a horizontal strip of ``d`` boxes.

    Uses the interleaving characterisation
    ``new[0] >= t[0] >= new[1] >= t[1] >= ... >= new[len(t)] >= 0``.
    """
    t = partition(t)
    if d < 0:
        return set()
    lo = list(t) + [0]
    hi = [t[0] + d if t else d] + list(t)
    return set(_interleave(lo, hi, size(t) + d))


def remove_strip(t, d):
    """All partitions obtained from ``t`` by removing a horizontal strip of ``d`` boxes."""
    t = partition(t)
    if d < 0 or d > size(t):
        return set()
    lo = list(t[1:]) + [0] if t else []
    hi = list(t)
    return set(_interleave(lo, hi, size(t) - d))


def bipartition_expansions(b, a):
    first, second = b
    out = set()
    for d in range(a + 1):
        for x in add_strip(first, d):
            for y in add_strip(second, a - d):
                out.add((x, y))
    return out


def bipartition_contractions(b, a):
    first, second = b
    out = set()
    for d in range(a + 1):
        for x in remove_strip(first, d):
            for y in remove_strip(second, a - d):
                out.add((x, y))
    return out


# text and JSON forms


def format_partition(t):
    return "(" + ",".join(str(p) for p in t) + ")"


def format_bipartition(b):
    return "(" + format_partition(b[0]) + "," + format_partition(b[1]) + ")"


def parse_partition(text):
    """Parse ``"(3,1)"``, ``"3,1"`` or ``"()"``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        parts = [int(x) for x in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
        raise ValueError(f"not a partition: {text!r}")
    return tuple(parts)


def parse_bipartition(text):
    """Parse ``"((3,1),(2))"``."""
    body = text.strip().replace(" ", "")
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"malformed bipartition {text!r}")
    body = body[1:-1]
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return (parse_partition(body[:i]), parse_partition(body[i + 1:]))
    raise ValueError(f"malformed bipartition {text!r}")


def bipartition_to_json(b):
    return [list(b[0]), list(b[1])]


def bipartition_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    return (partition(data[0]), partition(data[1]))
