"""Brute-force verification backend.

The double cover of the symmetric group is realized inside the Clifford
algebra with generators squaring to -1 over Q(sqrt 2); its canonical
lifts give the exact multiplication cocycle.  On top of that the whole
covered wreath product is enumerated, its conjugacy classes computed by
orbit closure, split classes detected, and a numeric character table
produced by the class-sum eigenvalue method.  Everything here is
independent of the formula engine except for shared class labels.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .partitions import colored_parts, is_odd_pvf, is_strict_pvf, pvf_excess

CAP_DEFAULT = 5000


class OracleSizeError(ValueError):
    """Requested group exceeds the brute-force size cap."""


# ---------------------------------------------------------------------------
# Clifford algebra over Q(sqrt 2): elements are dicts frozenset -> (a, b)
# meaning a + b*sqrt(2), generators e_i with e_i^2 = -1, e_i e_j = -e_j e_i.


def _q2_add(x, y):
    return (x[0] + y[0], x[1] + y[1])

def _q2_mul(x, y):
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

def _q2_neg(x):
    return (-x[0], -x[1])

_ONE = (Fraction(1), Fraction(0))
_HALF_RT2 = (Fraction(0), Fraction(1, 2))  # 1/sqrt(2)


def _basis_mul(s, t):
    """e_s * e_t = sign * e_(s xor t) with e_i^2 = -1."""
    swaps = 0
    for b in t:
        for a in s:
            if a > b:
                swaps += 1
    sign = (-1) ** (swaps + len(s & t))
    return sign, s ^ t


def clifford_mul(x, y):
    out = {}
    for s, cx in x.items():
        for t, cy in y.items():
            sign, st = _basis_mul(s, t)
            c = _q2_mul(cx, cy)
            if sign < 0:
                c = _q2_neg(c)
            if st in out:
                c = _q2_add(out[st], c)
            if c == (0, 0):
                out.pop(st, None)
            else:
                out[st] = c
    return out


def clifford_unit():
    return {frozenset(): _ONE}


@lru_cache(maxsize=None)
def _tau(i):
    """Lift of the adjacent transposition (i, i+1): (e_i - e_{i+1})/sqrt 2."""
    return _freeze({frozenset([i]): _HALF_RT2,
                    frozenset([i + 1]): _q2_neg(_HALF_RT2)})


def _freeze(d):
    return tuple(sorted(d.items(), key=lambda kv: sorted(kv[0])))


def _thaw(t):
    return dict(t)


@lru_cache(maxsize=None)
def _transposition_lift(i, j):
    """Lift of the transposition (i, j), i < j, via the generator chain."""
    if j == i + 1:
        return _tau(i)
    acc = _thaw(_tau(j - 1))
    for k in range(j - 2, i - 1, -1):
        acc = clifford_mul(acc, _thaw(_tau(k)))
    for k in range(i + 1, j):
        acc = clifford_mul(acc, _thaw(_tau(k)))
    return _freeze(acc)


def _word_lift(word):
    """Lift of the cycle word (w1 -> w2 -> ... -> wk -> w1): the product of
    consecutive transposition lifts, a reversed pair costing one central z."""
    acc = clifford_unit()
    sign = 1
    for a, b in zip(word, word[1:]):
        if a < b:
            acc = clifford_mul(acc, _thaw(_transposition_lift(a, b)))
        else:
            acc = clifford_mul(acc, _thaw(_transposition_lift(b, a)))
            sign = -sign
    if sign < 0:
        acc = {s: _q2_neg(c) for s, c in acc.items()}
    return acc


def permutation_cycles(w):
    """Cycles of w (tuples, each rotated to start at its minimum),
    ordered by minimum: the lexicographic normal form."""
    n = len(w)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cur, cyc = start, []
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = w[cur]
        cycles.append(tuple(cyc))
    return cycles


def canonical_lift(w):
    """Exact Clifford element lifting w through its cycle normal form."""
    acc = clifford_unit()
    for cyc in permutation_cycles(tuple(w)):
        if len(cyc) > 1:
            acc = clifford_mul(acc, _word_lift(cyc))
    return acc


def _compose(w, u):
    """(w o u)(i) = w(u(i))."""
    return tuple(w[u[i]] for i in range(len(u)))


def _leading_ratio(x, y):
    """x == +-y as Clifford elements; returns the sign."""
    assert set(x.keys()) == set(y.keys()) and x, "lifts differ beyond sign"
    s = next(iter(x))
    cx, cy = x[s], y[s]
    if cx == cy:
        assert x == y
        return 1
    assert cx == _q2_neg(cy) and x == {k: _q2_neg(c) for k, c in y.items()}
    return -1


class LiftSigns:
    """Multiplication cocycle of the double cover at fixed n, cached."""

    def __init__(self, n):
        self.n = n
        self._lift = {}
        self._sign = {}

    def lift(self, w):
        if w not in self._lift:
            self._lift[w] = canonical_lift(w)
        return self._lift[w]

    def sign(self, w1, w2):
        """lift(w1) * lift(w2) = sign * lift(w1 o w2)."""
        key = (w1, w2)
        if key not in self._sign:
            prod = clifford_mul(self.lift(w1), self.lift(w2))
            self._sign[key] = _leading_ratio(prod, self.lift(_compose(w1, w2)))
        return self._sign[key]


def lift_sign(w1, w2):
    """Sign epsilon with t_w1 t_w2 = z^((1-epsilon)/2) t_(w1 w2)."""
    w1, w2 = tuple(w1), tuple(w2)
    assert len(w1) == len(w2)
    return LiftSigns(len(w1)).sign(w1, w2)


# ---------------------------------------------------------------------------
# the covered wreath product, elements (g, w, s)


def _perms(n):
    out = []

    def rec(prefix, rest):
        if not rest:
            out.append(tuple(prefix))
            return
        for i, r in enumerate(rest):
            rec(prefix + [r], rest[:i] + rest[i + 1:])

    rec([], list(range(n)))
    return out


class CoveredGroup:
    """The full double cover of the wreath product, order 2 * |G|^n * n!.

    Requires a concrete realization of the base group (built-in groups
    carry one).
    """

    def __init__(self, gd, n, cap=None):
        if gd.realization is None:
            raise ValueError("group %s has no concrete realization" % gd.name)
        cap = CAP_DEFAULT if cap is None else cap
        size = 2 * gd.order ** n
        for k in range(2, n + 1):
            size *= k
        if size > cap:
            raise OracleSizeError(
                "order %d exceeds the cap %d" % (size, cap))
        self.gd = gd
        self.n = n
        self.order = size
        self.real = gd.realization
        self.signs = LiftSigns(n)
        gs = list(range(len(self.real.elements)))
        self.elements = [(g, w, s) for g in product(gs, repeat=n)
                         for w in _perms(n) for s in (1, -1)]
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.identity = (tuple([self.real.index[self.real.identity]] * n),
                         tuple(range(n)), 1)

    def mult(self, a, b):
        g, w, s = a
        h, u, r = b
        winv = [0] * self.n
        for i, wi in enumerate(w):
            winv[wi] = i
        mult = self.real.mult
        els = self.real.elements
        idx = self.real.index
        gh = tuple(idx[mult(els[g[i]], els[h[winv[i]]])] for i in range(self.n))
        return (gh, _compose(w, u), s * r * self.signs.sign(w, u))

    def inverse(self, a):
        g, w, s = a
        winv = tuple(sorted(range(self.n), key=lambda i: w[i]))
        inv = self.real.inverse
        els = self.real.elements
        idx = self.real.index
        ginv = tuple(idx[inv(els[g[winv[i]]])] for i in range(self.n))
        return (ginv, winv, s * self.signs.sign(w, winv))

    def central(self, a):
        g, w, s = a
        return (g, w, -s)

    def colored_type(self, a):
        """Colored cycle type of the image in the plain wreath product."""
        g, w, _ = a
        blocks = [[] for _ in range(self.gd.num_classes)]
        els = self.real.elements
        for cyc in permutation_cycles(w):
            prod = self.real.identity
            for i in reversed(cyc):
                prod = self.real.mult(prod, els[g[i]])
            blocks[self.real.class_of(prod)].append(len(cyc))
        return tuple(tuple(sorted(b, reverse=True)) for b in blocks)

    def canonical_positive_element(self, rho):
        """The chosen representative of the positive split class: cycles in
        (length desc, color asc) order on consecutive intervals, the color
        representative at the last point of each cycle."""
        w = list(range(self.n))
        g = [self.real.index[self.real.identity]] * self.n
        offset = 0
        for length, color in colored_parts(rho):
            for k in range(length - 1):
                w[offset + k] = offset + k + 1
            w[offset + length - 1] = offset
            g[offset + length - 1] = self.real.index[
                self.real.class_reps[color]]
            offset += length
        return (tuple(g), tuple(w), 1)


class OracleClasses:
    def __init__(self, reps, classes, class_of, rho_labels, split):
        self.reps = reps
        self.classes = classes
        self.class_of = class_of
        self.rho_labels = rho_labels
        self.split = split


def conjugacy_classes(gd, n, cap=None):
    """All conjugacy classes of the covered wreath product by orbit
    closure under conjugation by generators, with colored-type labels and
    split status.  Split status is checked against the class-combinatorial
    criterion (odd parts, or strict with odd excess) and a mismatch raises."""
    G = CoveredGroup(gd, n, cap)
    gens = []
    e_idx = G.real.index[G.real.identity]
    for gen in G.real.generators:
        for pos in range(n):
            g = [e_idx] * n
            g[pos] = G.real.index[gen]
            gens.append((tuple(g), tuple(range(n)), 1))
    for i in range(n - 1):
        w = list(range(n))
        w[i], w[i + 1] = w[i + 1], w[i]
        gens.append((tuple([e_idx] * n), tuple(w), 1))
    gen_invs = [G.inverse(x) for x in gens]

    class_of = {}
    reps, classes = [], []
    for x in G.elements:
        if x in class_of:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for t, tinv in zip(gens, gen_invs):
                z = G.mult(t, G.mult(y, tinv))
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        ci = len(reps)
        for y in orbit:
            class_of[y] = ci
        reps.append(x)
        classes.append(sorted(G.index[y] for y in orbit))

    rho_labels = [G.colored_type(rep) for rep in reps]
    split = []
    for ci, rep in enumerate(reps):
        is_split = class_of[G.central(rep)] != ci
        rho = rho_labels[ci]
        criterion = is_odd_pvf(rho) or (
            is_strict_pvf(rho) and pvf_excess(rho) % 2 == 1)
        if is_split != criterion:
            raise AssertionError(
                "split criterion mismatch at %r: orbit says %s" % (rho, is_split))
        split.append(is_split)
    return G, OracleClasses(reps, classes, class_of, rho_labels, split)


def numeric_character_table(gd, n, tol=1e-8, seed=0, cap=None, retries=20):
    """Full character table of the covered wreath product via the
    class-sum eigenvalue method; returns (group, classes, matrix) with one
    row per irreducible character."""
    G, oc = conjugacy_classes(gd, n, cap)
    k = len(oc.reps)
    sizes = np.array([len(c) for c in oc.classes], dtype=float)
    # structure constants: a[i][j][m] = #{x in C_i : x^{-1} rep_m in C_j}
    mats = np.zeros((k, k, k))
    elems = G.elements
    for m, rep in enumerate(oc.reps):
        for i, cls in enumerate(oc.classes):
            for xi in cls:
                y = G.mult(G.inverse(elems[xi]), rep)
                mats[i, oc.class_of[y], m] += 1
    ident = next(i for i, rep in enumerate(oc.reps)
                 if rep == G.identity)
    rng = np.random.default_rng(seed)
    for attempt in range(retries):
        coeffs = rng.standard_normal(k)
        combo = np.tensordot(coeffs, mats, axes=(0, 0))
        eigvals, eigvecs = np.linalg.eig(combo)
        order = np.argsort(eigvals.real, kind="stable")
        gaps_ok = True
        for a in range(k):
            for b in range(a + 1, k):
                if abs(eigvals[a] - eigvals[b]) < tol * 100:
                    gaps_ok = False
        if not gaps_ok:
            continue
        rows = []
        for idx in order:
            v = eigvecs[:, idx]
            if abs(v[ident]) < tol:
                gaps_ok = False
                break
            omega = v / v[ident]
            deg2 = G.order / np.sum(np.abs(omega) ** 2 / sizes)
            deg = np.sqrt(deg2.real)
            rows.append(deg * omega / sizes)
        if not gaps_ok:
            continue
        table = np.array(rows)
        gram = (table * sizes) @ table.conj().T / G.order
        if np.max(np.abs(gram - np.eye(k))) < max(tol * 10, 1e-9):
            return G, oc, table
    raise ArithmeticError("eigenvalue separation failed after %d tries" % retries)


def spin_rows(table, oc, G, tol=1e-8):
    """Indices of the rows with value(z) = -value(identity)."""
    ident = next(i for i, rep in enumerate(oc.reps) if rep == G.identity)
    zed = oc.class_of[G.central(G.identity)]
    return [r for r in range(table.shape[0])
            if abs(table[r, zed] + table[r, ident]) < tol * max(1.0, abs(table[r, ident]))]


def compare(formula_table, gd, tol=1e-6, seed=0, cap=None):
    """Match the formula table against the numeric table: a bijection
    between formula rows and numeric spin rows agreeing within tol on all
    positive split classes (resolved by the canonical representatives).

    Returns a report dict; report['ok'] says whether the match succeeded.
    """
    n = formula_table.n
    G, oc, numeric = numeric_character_table(gd, n, tol=min(tol, 1e-8),
                                             seed=seed, cap=cap)
    spin = spin_rows(numeric, oc, G)
    col_class = []
    for col in formula_table.columns:
        x = G.canonical_positive_element(col.rho)
        col_class.append(oc.class_of[x])
    formula = np.array([[v.to_complex() for v in row]
                        for row in formula_table.values])
    want = numeric[np.ix_(spin, col_class)]
    nrows = len(formula_table.rows)
    report = {"group": gd.name, "n": n, "formula_rows": nrows,
              "numeric_spin_rows": len(spin), "ok": False,
              "matching": [], "max_deviation": None}
    if len(spin) != nrows:
        report["error"] = "row count mismatch"
        return report
    used = [False] * nrows
    matching = []
    worst = 0.0
    for i in range(nrows):
        best, best_dev = None, None
        for j in range(nrows):
            if used[j]:
                continue
            dev = np.max(np.abs(formula[i] - want[j]))
            if best_dev is None or dev < best_dev:
                best, best_dev = j, dev
        if best_dev > tol:
            report["error"] = ("row %d unmatched, best deviation %.3g"
                               % (i, best_dev))
            report["max_deviation"] = float(best_dev)
            return report
        used[best] = True
        matching.append((i, spin[best]))
        worst = max(worst, best_dev)
    # spin characters must also vanish on every non-split class
    for r in spin:
        for ci, is_split in enumerate(oc.split):
            if not is_split and abs(numeric[r, ci]) > tol:
                report["error"] = "spin row %d nonzero on non-split class" % r
                return report
    report["ok"] = True
    report["matching"] = matching
    report["max_deviation"] = float(worst)
    return report
