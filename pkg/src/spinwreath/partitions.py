"""Partitions, colored partitions, and the cycle-reordering sign.

A partition is a tuple of weakly decreasing positive integers; the empty
partition is ().  A colored partition (partition-valued function) assigns
one partition to each color index 0..k-1 and is stored as a tuple of k
partitions.  All enumeration orders are deterministic: plain partitions
are listed in descending lexicographic order, colored partitions by
giving color 0 the largest weight first.
"""

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial

KINDS = ("all", "strict", "odd", "odd-strict")
PVF_KINDS = ("all", "odd", "strict", "strict-even", "strict-odd", "odd-strict")


def is_partition(mu):
    return all(isinstance(p, int) and p >= 1 for p in mu) and all(
        mu[i] >= mu[i + 1] for i in range(len(mu) - 1)
    )


def is_strict(mu):
    """All parts distinct."""
    return all(mu[i] > mu[i + 1] for i in range(len(mu) - 1))


def is_odd(mu):
    """All parts odd."""
    return all(p % 2 == 1 for p in mu)


def excess(mu):
    """Weight minus length; its parity classifies even/odd partitions."""
    return sum(mu) - len(mu)


@lru_cache(maxsize=None)
def _partitions_of(n, kind, max_part):
    out = []
    if n == 0:
        return ((),)
    for p in range(min(max_part, n), 0, -1):
        if kind in ("odd", "odd-strict") and p % 2 == 0:
            continue
        nxt = p - 1 if kind in ("strict", "odd-strict") else p
        for rest in _partitions_of(n - p, kind, nxt):
            out.append((p,) + rest)
    return tuple(out)


def partitions_of(n, kind="all"):
    """List the partitions of n of the given kind, largest-first lexicographic.

    kind is one of 'all', 'strict' (distinct parts), 'odd' (odd parts),
    'odd-strict' (both).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind not in KINDS:
        raise ValueError("unknown kind %r" % (kind,))
    return list(_partitions_of(n, kind, n if n else 1))


def z_order(mu):
    """Order of the centralizer in S_n of a permutation of cycle type mu."""
    if not is_partition(mu):
        raise ValueError("not a partition: %r" % (mu,))
    z = 1
    for part, m in Counter(mu).items():
        z *= part ** m * factorial(m)
    return z


# ---------------------------------------------------------------------------
# colored partitions


def pvf_weight(rho):
    return sum(sum(mu) for mu in rho)


def pvf_length(rho):
    return sum(len(mu) for mu in rho)


def pvf_excess(rho):
    return pvf_weight(rho) - pvf_length(rho)


def is_odd_pvf(rho):
    return all(is_odd(mu) for mu in rho)


def is_strict_pvf(rho):
    return all(is_strict(mu) for mu in rho)


def pvf_kind_ok(rho, kind):
    """Membership test matching the enumeration kinds of enumerate_pvf."""
    if kind == "all":
        return True
    if kind == "odd":
        return is_odd_pvf(rho)
    if kind == "strict":
        return is_strict_pvf(rho)
    if kind == "strict-even":
        return is_strict_pvf(rho) and pvf_excess(rho) % 2 == 0
    if kind == "strict-odd":
        return is_strict_pvf(rho) and pvf_excess(rho) % 2 == 1
    if kind == "odd-strict":
        return is_odd_pvf(rho) and is_strict_pvf(rho)
    raise ValueError("unknown kind %r" % (kind,))


def enumerate_pvf(n, colors, kind="all"):
    """List colored partitions of total weight n with the given number of colors.

    kind: 'all', 'odd' (all parts odd), 'strict' (distinct parts per color),
    'strict-even'/'strict-odd' (strict with even/odd excess), 'odd-strict'.
    Order: deterministic, color 0 taking the largest weight first.
    """
    if colors < 1:
        raise ValueError("need at least one color")
    if kind not in PVF_KINDS:
        raise ValueError("unknown kind %r" % (kind,))
    base = {"all": "all", "odd": "odd", "strict": "strict",
            "strict-even": "strict", "strict-odd": "strict",
            "odd-strict": "odd-strict"}[kind]

    def rec(c, remaining):
        if c == colors - 1:
            for mu in partitions_of(remaining, base):
                yield (mu,)
            return
        for w in range(remaining, -1, -1):
            for mu in partitions_of(w, base):
                for rest in rec(c + 1, remaining - w):
                    yield (mu,) + rest

    out = list(rec(0, n))
    if kind == "strict-even":
        out = [rho for rho in out if pvf_excess(rho) % 2 == 0]
    elif kind == "strict-odd":
        out = [rho for rho in out if pvf_excess(rho) % 2 == 1]
    return out


def centralizer_order(rho, zeta):
    """Centralizer order of an element of colored cycle type rho in the
    wreath product, given the per-color centralizer orders zeta."""
    if len(rho) > len(zeta):
        raise IndexError("color index out of range of zeta")
    z = 1
    for mu, zc in zip(rho, zeta):
        z *= z_order(mu) * zc ** len(mu)
    return z


def colored_parts(rho):
    """Canonical colored cycle list: (length, color) pairs sorted by
    length descending, then color ascending."""
    pairs = [(p, c) for c, mu in enumerate(rho) for p in mu]
    return tuple(sorted(pairs, key=lambda t: (-t[0], t[1])))


def pvf_from_colored_parts(pairs, colors):
    """Inverse of colored_parts (up to canonical ordering)."""
    blocks = [[] for _ in range(colors)]
    for p, c in pairs:
        blocks[c].append(p)
    return tuple(tuple(sorted(b, reverse=True)) for b in blocks)


def shape_of(rho):
    """Underlying uncolored partition (all parts, sorted descending)."""
    return tuple(sorted((p for mu in rho for p in mu), reverse=True))


def colorings(shape, colors):
    """All (colors)^len(shape) ways to give each part of a strict shape a
    color, as colored partitions.  Strictness keeps the results distinct."""
    if not is_strict(shape) or not is_partition(shape):
        raise ValueError("shape must be a strict partition")
    out = []
    for assignment in product(range(colors), repeat=len(shape)):
        out.append(pvf_from_colored_parts(zip(shape, assignment), colors))
    return out


# ---------------------------------------------------------------------------
# decompositions into blocks

# A block spec is one of:
#   ("weight", w)      any colored partition of weight w
#   ("shape", mu)      weight |mu| and underlying shape exactly mu (mu strict)
#   ("odd-strict", w)  weight w, all parts odd, distinct parts per color


def _spec_weight(spec):
    if spec[0] == "shape":
        return sum(spec[1])
    return spec[1]


def _compositions(m, k, caps):
    """Ways to write m = c_0 + ... + c_{k-1} with 0 <= c_i <= caps[i]."""
    if k == 1:
        if m <= caps[0]:
            yield (m,)
        return
    for c in range(min(m, caps[0]), -1, -1):
        for rest in _compositions(m - c, k - 1, caps[1:]):
            yield (c,) + rest


def block_decompositions(rho, specs):
    """All ways to split the colored parts of rho into len(specs) blocks so
    that block i satisfies specs[i].  Multiset-correct: identical colored
    parts are interchangeable and each split is produced exactly once.
    Returns a list of tuples of colored partitions, deterministic order.
    """
    colors = len(rho)
    targets = [_spec_weight(s) for s in specs]
    if sum(targets) != pvf_weight(rho):
        return []
    groups = sorted(Counter(colored_parts(rho)).items(),
                    key=lambda t: (-t[0][0], t[0][1]))
    k = len(specs)
    results = []

    def ok_so_far(spec, parts, part, count):
        if count == 0:
            return True
        kind = spec[0]
        if kind == "shape":
            avail = Counter(spec[1]) - Counter(q for q, _ in parts)
            return avail[part] >= count
        if kind == "odd-strict":
            # distinct parts per color: a (part, color) pair may appear once
            return part % 2 == 1 and count <= 1
        return True

    def rec(gi, blocks, loads):
        if gi == len(groups):
            if all(loads[b] == targets[b] for b in range(k)):
                results.append(tuple(
                    pvf_from_colored_parts(blocks[b], colors) for b in range(k)))
            return
        (part, color), mult = groups[gi]
        caps = []
        for b in range(k):
            room = (targets[b] - loads[b]) // part
            caps.append(min(mult, max(room, 0)))
        for comp in _compositions(mult, k, caps):
            if any(not ok_so_far(specs[b], blocks[b], part, comp[b])
                   for b in range(k)):
                continue
            for b in range(k):
                blocks[b].extend([(part, color)] * comp[b])
                loads[b] += part * comp[b]
            rec(gi + 1, blocks, loads)
            for b in range(k):
                for _ in range(comp[b]):
                    blocks[b].pop()
                loads[b] -= part * comp[b]

    rec(0, [[] for _ in range(k)], [0] * k)
    # "shape" blocks must use the whole shape; weights guarantee it, but a
    # wrong shape multiset can slip through only if sizes agree, so recheck.
    out = []
    for dec in results:
        good = True
        for spec, block in zip(specs, dec):
            if spec[0] == "shape" and shape_of(block) != tuple(spec[1]):
                good = False
                break
            if spec[0] == "odd-strict" and not (
                    is_odd_pvf(block) and is_strict_pvf(block)):
                good = False
                break
        if good:
            out.append(dec)
    return out


# ---------------------------------------------------------------------------
# reordering sign


def cycles_excess(cycles):
    """Sum of (length - 1) over a colored cycle list or a plain partition."""
    total = 0
    for c in cycles:
        length = c[0] if isinstance(c, tuple) else c
        total += length - 1
    return total


def reorder_sign(cycles_a, cycles_b):
    """Central exponent picked up when two lifted products of disjoint
    cycles are swapped: excess(a) * excess(b) mod 2.

    The inputs are colored cycle lists (or plain partitions); their
    supports are assumed disjoint.
    """
    return (cycles_excess(cycles_a) * cycles_excess(cycles_b)) % 2
