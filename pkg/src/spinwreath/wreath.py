"""Split-class bookkeeping and the spin character table of the wreath
double cover.

Rows are strict colored partitions over the character colors (an
associate pair when the excess is odd); stored columns are the split
classes, odd colored partitions (parts odd) and odd-excess strict colored
partitions, each once with positive sign.  A cell value is the induced
character: a sum over block decompositions of the column class, weighted
by centralizer-order ratios and the central reordering sign, of the
starred product of the per-block factors.
"""

from collections import namedtuple
from fractions import Fraction
from math import factorial

from .cyclo import CycloNumber, RadicalValue, i_power, sqrt_half_product
from .partitions import (block_decompositions, centralizer_order,
                         colored_parts, enumerate_pvf, excess, is_odd_pvf,
                         is_strict_pvf, pvf_excess, pvf_weight, shape_of,
                         z_order)
from .spin_sym import delta_value

SplitClass = namedtuple("SplitClass", ["rho", "kind", "z", "z_tilde"])
SpinRow = namedtuple("SpinRow", ["lam", "associate"])


class InternalInvariantError(AssertionError):
    """A structural identity the engine relies on failed."""


def split_classes(n, gd):
    """All split classes: odd colored partitions first, then odd-excess
    strict ones; each appears once (the negative class is implied)."""
    if n < 1:
        raise ValueError("n must be positive")
    zeta = gd.centralizer_orders
    out = []
    for rho in enumerate_pvf(n, gd.num_classes, "odd"):
        z = centralizer_order(rho, zeta)
        out.append(SplitClass(rho, "OP", z, 2 * z))
    for rho in enumerate_pvf(n, gd.num_classes, "strict-odd"):
        z = centralizer_order(rho, zeta)
        out.append(SplitClass(rho, "SP1", z, 2 * z))
    return out


def odd_char_blocks(lam):
    """Indices of the nonempty blocks with odd excess (the type-Q factors)."""
    return tuple(g for g, mu in enumerate(lam) if mu and excess(mu) % 2 == 1)


def color_product(gamma, rho_gamma, gd):
    """prod over colors c of chi_gamma(c)^(number of parts colored c)."""
    acc = CycloNumber.rational(1)
    for c, mu in enumerate(rho_gamma):
        if mu:
            acc = acc * gd.table[gamma][c] ** len(mu)
    return acc


def block_value(lam_gamma, gamma, rho_gamma, gd):
    """Per-block factor: the color-character product times the spin
    symmetric group character of the block's underlying shape."""
    if sum(lam_gamma) != pvf_weight(rho_gamma):
        raise ValueError("block weight mismatch")
    if not lam_gamma:
        return RadicalValue.rational(1)
    d = delta_value(lam_gamma, shape_of(rho_gamma))
    if d.is_zero():
        return RadicalValue.zero()
    return d * color_product(gamma, rho_gamma, gd)


def starred_value(lam, dec, gd):
    """Character of the twisted Young-subgroup product on the class of the
    given decomposition: 2^(m//2) times the product of block values, where
    m counts the odd-excess blocks.

    The value vanishes outright unless the number of odd-excess blocks of
    the decomposition among the type-Q positions is 0 or exactly m with m
    odd: a double-spin (even-excess) product kills any odd block, and an
    associate pair is supported on classes where every type-Q factor is
    odd.  This makes the zero block of the table pointwise.
    """
    J = odd_char_blocks(lam)
    m = len(J)
    k_odd = sum(1 for g in J if pvf_excess(dec[g]) % 2 == 1)
    if k_odd != 0 and not (k_odd == m and m % 2 == 1):
        return RadicalValue.zero()
    acc = RadicalValue.rational(2 ** (m // 2))
    for g, mu in enumerate(lam):
        b = block_value(mu, g, dec[g], gd)
        if b.is_zero():
            return RadicalValue.zero()
        acc = acc * b
    return acc


def closed_starred_value(lam, dec, gd):
    """Main-theorem closed form for a fully supported odd decomposition:
    i^(sum over type-Q blocks of (weight - length + 1)/2) *
    sqrt(product of their part products / 2) * color products *
    remaining double-spin character values."""
    J = odd_char_blocks(lam)
    e = 0
    prod_z = 1
    for g in J:
        if shape_of(dec[g]) != lam[g]:
            raise ValueError("decomposition is not on the supported pattern")
        e += (sum(lam[g]) - len(lam[g]) + 1) // 2
        prod_z *= z_order(lam[g])
    acc = RadicalValue.from_cyclo(i_power(e)) * sqrt_half_product(prod_z)
    for g, mu in enumerate(lam):
        acc = acc * color_product(g, dec[g], gd)
        if g not in J and mu:
            acc = acc * delta_value(mu, shape_of(dec[g]))
    return acc


def canonical_sign(dec):
    """Central sign relating the blockwise canonical lift to the global
    canonical lift of the merged class.

    Reordering the cycle lifts from block order to the global
    (length desc, color asc) order contributes one central factor per
    inverted pair of odd cycles (even lengths); the point relabeling u
    that moves the cycle supports contributes d(u) * d(w), and d(u) is
    the parity of the inverted pairs of odd-length cycles.  Mixed-length
    inverted pairs never contribute.  Validated against the Clifford
    oracle (see tests).
    """
    layout = []
    for rho_g in dec:
        layout.extend(colored_parts(rho_g))
    if len(layout) < 2:
        return 1
    target = sorted(layout, key=lambda t: (-t[0], t[1]))
    remaining = list(range(len(target)))
    perm = []
    for pc in layout:
        for pos in remaining:
            if target[pos] == pc:
                perm.append(pos)
                remaining.remove(pos)
                break
    inv_even_len = 0   # both cycles of even length (odd excess)
    inv_odd_len = 0    # both cycles of odd length (even excess)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                even_i, even_j = layout[i][0] % 2 == 0, layout[j][0] % 2 == 0
                if even_i and even_j:
                    inv_even_len += 1
                elif not even_i and not even_j:
                    inv_odd_len += 1
    d_w = sum(p - 1 for p, _ in layout)
    e = inv_even_len + d_w * inv_odd_len
    return -1 if e % 2 else 1


def _decomposition_specs(lam, rho):
    """Blocks of the induction sum: any split of the right weights on an
    odd class; the supported pattern (type-Q blocks keep their shape, the
    rest odd-strict) on an odd-excess strict class."""
    if is_odd_pvf(rho):
        return [("weight", sum(mu)) for mu in lam], "OP"
    if is_strict_pvf(rho) and pvf_excess(rho) % 2 == 1:
        J = set(odd_char_blocks(lam))
        specs = []
        for g, mu in enumerate(lam):
            specs.append(("shape", mu) if g in J else ("odd-strict", sum(mu)))
        return specs, "SP1"
    raise ValueError("class %r is not split" % (rho,))


def induced_value(lam, rho, gd, associate=False):
    value, _ = induced_value_detail(lam, rho, gd, associate)
    return value


def induced_value_detail(lam, rho, gd, associate=False):
    """Value of the induced spin character on the positive split class of
    rho, plus diagnostics: number of decompositions, their integer coset
    weights, and whether distinct decompositions carry distinct color
    products (the flag for the scalar-prefactor reading)."""
    if sum(sum(mu) for mu in lam) != pvf_weight(rho):
        raise ValueError("weight mismatch between row and class")
    zeta = gd.centralizer_orders
    z_rho = centralizer_order(rho, zeta)
    specs, kind = _decomposition_specs(lam, rho)
    decs = block_decompositions(rho, specs)
    total = RadicalValue.zero()
    weights = []
    cps = []
    for dec in decs:
        denom = 1
        for b in dec:
            denom *= centralizer_order(b, zeta)
        w = Fraction(z_rho, denom)
        if w.denominator != 1:
            raise InternalInvariantError("non-integer coset weight %s" % w)
        sign = canonical_sign(dec)
        sv = starred_value(lam, dec, gd)
        if kind == "SP1" and not sv.is_zero():
            cv = closed_starred_value(lam, dec, gd)
            if sv != cv:
                raise InternalInvariantError(
                    "factored and closed starred values disagree at %r, %r"
                    % (lam, dec))
            cp = CycloNumber.rational(1)
            for g in range(len(lam)):
                cp = cp * color_product(g, dec[g], gd)
            cps.append(cp)
        weights.append(int(w) * sign)
        total = total + sv * (w if sign > 0 else -w)
    if associate and pvf_excess(rho) % 2 == 1:
        total = -total
    ambiguous = any(cps[0] != cp for cp in cps[1:]) if len(cps) > 1 else False
    info = {"kind": kind, "n_decs": len(decs), "weights": weights,
            "ambiguous_color_product": ambiguous}
    return total, info


def induced_value_full_enumeration(lam, rho, gd, associate=False):
    """Same value computed without the support restrictions: every split
    of the class into blocks of the right weights enters, and the
    pointwise vanishing in starred_value does the filtering.  Used to
    cross-check the zero pattern."""
    if sum(sum(mu) for mu in lam) != pvf_weight(rho):
        raise ValueError("weight mismatch between row and class")
    if not (is_odd_pvf(rho)
            or (is_strict_pvf(rho) and pvf_excess(rho) % 2 == 1)):
        raise ValueError("class %r is not split" % (rho,))
    zeta = gd.centralizer_orders
    z_rho = centralizer_order(rho, zeta)
    specs = [("weight", sum(mu)) for mu in lam]
    total = RadicalValue.zero()
    for dec in block_decompositions(rho, specs):
        denom = 1
        for b in dec:
            denom *= centralizer_order(b, zeta)
        w = Fraction(z_rho, denom)
        sign = canonical_sign(dec)
        sv = starred_value(lam, dec, gd)
        total = total + sv * (w if sign > 0 else -w)
    if associate and pvf_excess(rho) % 2 == 1:
        total = -total
    return total


class SpinTable:
    """Complete spin character table: rows indexed by strict colored
    partitions over the character colors (doubled when the excess is
    odd), stored columns by the positive split classes."""

    def __init__(self, group, n, conductor, rows, columns, values, flags):
        self.group = group
        self.n = n
        self.conductor = conductor
        self.rows = rows
        self.columns = columns
        self.values = values
        self.flags = flags
        self._col_index = {col.rho: j for j, col in enumerate(columns)}
        self._row_index = {(row.lam, row.associate): i
                           for i, row in enumerate(rows)}

    def column_index(self, rho):
        return self._col_index[tuple(tuple(mu) for mu in rho)]

    def row_index(self, lam, associate=False):
        return self._row_index[(tuple(tuple(mu) for mu in lam), associate)]

    def value(self, lam, rho, associate=False):
        return self.values[self.row_index(lam, associate)][self.column_index(rho)]

    def identity_column(self):
        rho_id = tuple([(1,) * self.n] + [()] * (len(self.columns[0].rho) - 1))
        return self.column_index(rho_id)

    def degree(self, i):
        """Rational-integer degree of row i (value on the identity class)."""
        v = self.values[i][self.identity_column()]
        if not v.is_rational():
            raise InternalInvariantError("non-rational degree %r" % (v,))
        q = v.rational_value()
        if q.denominator != 1 or q <= 0:
            raise InternalInvariantError("bad degree %s" % (q,))
        return int(q)


def full_table(n, gd):
    """Build the whole table for the wreath double cover of weight n."""
    columns = split_classes(n, gd)
    sp1_cols = [j for j, col in enumerate(columns) if col.kind == "SP1"]
    rows = []
    values = []
    flags = []
    for lam in enumerate_pvf(n, gd.num_classes, "strict"):
        d_odd = pvf_excess(lam) % 2 == 1
        if len(odd_char_blocks(lam)) % 2 != pvf_excess(lam) % 2:
            raise InternalInvariantError(
                "odd-block count parity disagrees with excess at %r" % (lam,))
        base = []
        for col in columns:
            v, info = induced_value_detail(lam, col.rho, gd)
            if info["ambiguous_color_product"]:
                flags.append((lam, col.rho))
            base.append(v)
        rows.append(SpinRow(lam, False))
        values.append(base)
        if d_odd:
            primed = list(base)
            for j in sp1_cols:
                primed[j] = -primed[j]
            rows.append(SpinRow(lam, True))
            values.append(primed)
    conductor = 4 * gd.conductor // _gcd(4, gd.conductor)
    table = SpinTable(gd.name, n, conductor, rows, columns, values, flags)
    for i in range(len(rows)):
        table.degree(i)  # integrality enforced up front
    return table


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def inner_product(table, i, j, subset="all"):
    """Hermitian pairing of rows i and j over the stored split classes
    weighted by 1/Z; the implied negative classes exactly cancel the
    doubled centralizer, so this is the group inner product when
    subset='all'."""
    acc = RadicalValue.zero()
    for col, va, vb in zip(table.columns, table.values[i], table.values[j]):
        if subset != "all" and col.kind != subset:
            continue
        if va.is_zero() or vb.is_zero():
            continue
        acc = acc + va * vb.conj() * Fraction(1, col.z)
    return acc


def run_checks(table, gd):
    """The full invariant suite; returns a report dict with one entry per
    check and an overall flag."""
    checks = []
    nrows = len(table.rows)
    ncols = len(table.columns)
    half = Fraction(1, 2)

    n_op = sum(1 for c in table.columns if c.kind == "OP")
    n_sp1 = ncols - n_op
    lams = {r.lam for r in table.rows}
    sp0 = sum(1 for lam in lams if pvf_excess(lam) % 2 == 0)
    sp1_rows = sum(1 for lam in lams if pvf_excess(lam) % 2 == 1)
    counting_ok = (nrows == sp0 + 2 * sp1_rows == n_op + n_sp1 == ncols)
    checks.append(("counting-identity", counting_ok,
                   "%d rows = %d + 2*%d; %d split classes = %d odd + %d strict-odd"
                   % (nrows, sp0, sp1_rows, ncols, n_op, n_sp1)))

    ortho_ok, detail = True, "all pairs exact"
    for i in range(nrows):
        for j in range(i, nrows):
            want = Fraction(1 if i == j else 0)
            got = inner_product(table, i, j)
            if got != RadicalValue.rational(want):
                ortho_ok = False
                detail = "rows %d,%d give %r" % (i, j, got)
                break
        if not ortho_ok:
            break
    checks.append(("orthonormality", ortho_ok, detail))

    split_ok, detail = True, "1/2 + 1/2 on every odd-excess row, 1 + 0 otherwise"
    for i, row in enumerate(table.rows):
        op_part = inner_product(table, i, i, "OP")
        sp1_part = inner_product(table, i, i, "SP1")
        if pvf_excess(row.lam) % 2 == 1:
            ok = (op_part == RadicalValue.rational(half)
                  and sp1_part == RadicalValue.rational(half))
        else:
            ok = (op_part == RadicalValue.rational(1)
                  and sp1_part == RadicalValue.zero())
        if not ok:
            split_ok = False
            detail = "row %d has parts %r / %r" % (i, op_part, sp1_part)
            break
    checks.append(("norm-split", split_ok, detail))

    degsum = sum(table.degree(i) ** 2 for i in range(nrows))
    want = gd.order ** table.n * factorial(table.n)
    checks.append(("degree-sum", degsum == want,
                   "sum of squared degrees %d vs %d" % (degsum, want)))

    zero_ok, detail = True, "zero exactly off the supported pattern"
    for i, row in enumerate(table.rows):
        for j, col in enumerate(table.columns):
            if col.kind != "SP1":
                continue
            v = table.values[i][j]
            if pvf_excess(row.lam) % 2 == 0 and not v.is_zero():
                zero_ok = False
                detail = "even-excess row %d nonzero at %r" % (i, col.rho)
                break
            specs, _ = _decomposition_specs(row.lam, col.rho)
            if not block_decompositions(col.rho, specs) and not v.is_zero():
                zero_ok = False
                detail = "unsupported cell (%d, %r) nonzero" % (i, col.rho)
                break
        if not zero_ok:
            break
    checks.append(("zero-pattern", zero_ok, detail))

    assoc_ok, detail = True, "primed rows equal on odd classes, negated on strict-odd"
    for lam in lams:
        if pvf_excess(lam) % 2 == 0:
            continue
        i = table.row_index(lam, False)
        k = table.row_index(lam, True)
        for j, col in enumerate(table.columns):
            a, b = table.values[i][j], table.values[k][j]
            if col.kind == "OP":
                ok = a == b
            else:
                ok = a == -b
            if not ok:
                assoc_ok = False
                detail = "pair %r differs wrongly at %r" % (lam, col.rho)
                break
        if not assoc_ok:
            break
    checks.append(("associate-rule", assoc_ok, detail))

    report = {
        "group": table.group,
        "n": table.n,
        "checks": [{"name": n_, "ok": ok, "detail": d} for n_, ok, d in checks],
        "ambiguous_color_products": [
            {"row": [list(mu) for mu in lam], "class": [list(mu) for mu in rho]}
            for lam, rho in table.flags],
        "ok": all(ok for _, ok, _ in checks),
    }
    return report
