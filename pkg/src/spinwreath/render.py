"""Exact and numeric rendering of spin tables: strings, JSON, CSV, LaTeX.

Exact cells print as '(cyclo)*sqrt(r)' strings such as 'i', '-i', '2',
'(1/2)*sqrt(2)'.  The JSON document round-trips: values are serialized
through the (radicand, (exponent, numerator, denominator) list) encoding
at the table conductor.
"""

import json
from fractions import Fraction

from .cyclo import CycloNumber, RadicalValue


def _frac_str(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (
        q.numerator, q.denominator)


def cyclo_str(c):
    """Compact exact form: rationals plainly, i-multiples with 'i', other
    cyclotomics as a sum of zN^k monomials."""
    if c.is_zero():
        return "0"
    if c.is_rational():
        return _frac_str(c.rational_value())
    lifted = c.lift(c.n * 4 // _gcd(c.n, 4)) if c.n % 4 else c
    im = lifted.coeffs.get(lifted.n // 4, None)
    if im is not None and len(lifted.coeffs) == 1:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return ("(%s)i" % _frac_str(im)) if im.denominator != 1 else "%si" % im
    parts = []
    for k, v in sorted(c.coeffs.items()):
        if k == 0:
            parts.append(_frac_str(v))
        elif v == 1:
            parts.append("z%d^%d" % (c.n, k))
        else:
            parts.append("(%s)*z%d^%d" % (_frac_str(v), c.n, k))
    return "+".join(parts).replace("+-", "-")


def value_str(v):
    """Exact string for a RadicalValue."""
    if v.is_zero():
        return "0"
    parts = []
    for r in sorted(v.terms):
        cs = cyclo_str(v.terms[r])
        if r == 1:
            parts.append(cs)
        elif cs == "1":
            parts.append("sqrt(%d)" % r)
        elif cs == "-1":
            parts.append("-sqrt(%d)" % r)
        else:
            base = cs if (cs.lstrip("-").isdigit() or cs in ("i", "-i")) \
                else "(%s)" % cs
            parts.append("%s*sqrt(%d)" % (base, r))
    return " + ".join(parts).replace("+ -", "- ")


def value_numeric_str(v, precision=10):
    z = v.to_complex()
    fmt = "%%.%dg" % precision
    return (fmt % z.real) + (("+" if z.imag >= 0 else "") + fmt % z.imag) + "j"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _pvf_label(rho):
    blocks = []
    for c, mu in enumerate(rho):
        if mu:
            blocks.append("%s@c%d" % ("(" + ",".join(map(str, mu)) + ")", c))
    return " ".join(blocks) if blocks else "empty"


def row_label(row):
    return _pvf_label(row.lam) + ("'" if row.associate else "")


def table_to_jsonable(table, numeric=False, precision=10):
    cols = []
    for col in table.columns:
        cols.append({
            "rho": [list(mu) for mu in col.rho],
            "kind": col.kind,
            "label": _pvf_label(col.rho),
            "Z": col.z,
            "Ztilde": col.z_tilde,
        })
    rows = []
    for i, row in enumerate(table.rows):
        rows.append({
            "lambda": [list(mu) for mu in row.lam],
            "associate": row.associate,
            "label": row_label(row),
            "degree": table.degree(i),
        })
    values = []
    for rvals in table.values:
        out = []
        for v in rvals:
            cell = {"exact": value_str(v),
                    "terms": _serialize_value(v, table.conductor)}
            if numeric:
                z = v.to_complex()
                cell["numeric"] = [float(("%%.%dg" % precision) % z.real),
                                   float(("%%.%dg" % precision) % z.imag)]
            out.append(cell)
        values.append(out)
    return {
        "group": table.group,
        "n": table.n,
        "conductor": table.conductor,
        "columns": cols,
        "rows": rows,
        "values": values,
        "ambiguous_color_products": [
            {"row": [list(mu) for mu in lam], "class": [list(mu) for mu in rho]}
            for lam, rho in table.flags],
    }


def _serialize_value(v, conductor):
    return [[r, v.terms[r].lift(conductor).serialize()] for r in sorted(v.terms)]


def value_from_jsonable(terms, conductor):
    return RadicalValue.deserialize(terms, conductor)


def table_to_json(table, numeric=False, precision=10):
    return json.dumps(table_to_jsonable(table, numeric, precision), indent=1)


def table_to_csv(table, numeric=False, precision=10):
    lines = []
    head = ["character"] + [_pvf_label(c.rho) for c in table.columns]
    lines.append(",".join('"%s"' % h for h in head))
    meta = [["kind"] + [c.kind for c in table.columns],
            ["Z"] + [str(c.z) for c in table.columns],
            ["Ztilde"] + [str(c.z_tilde) for c in table.columns]]
    for m in meta:
        lines.append(",".join('"%s"' % x for x in m))
    for row, rvals in zip(table.rows, table.values):
        cells = [row_label(row)]
        for v in rvals:
            cells.append(value_numeric_str(v, precision) if numeric
                         else value_str(v))
        lines.append(",".join('"%s"' % c for c in cells))
    return "\n".join(lines) + "\n"


def _latex_value(v):
    if v.is_zero():
        return "0"
    s = value_str(v)
    s = s.replace("sqrt(", r"\sqrt{").replace(")", "}")
    # undo over-eager brace replacement inside rationals like (1/2}
    s = s.replace("(", "{").replace("i", r"\mathrm{i}")
    return "$" + s + "$"


def table_to_latex(table):
    cols = ["$%s$" % _pvf_label(c.rho).replace("@", r"\,@\,")
            for c in table.columns]
    lines = [r"\begin{tabular}{l|%s}" % ("c" * len(cols)),
             " & ".join(["character"] + cols) + r" \\ \hline"]
    for row, rvals in zip(table.rows, table.values):
        cells = ["$%s$" % row_label(row).replace("@", r"\,@\,")]
        cells += [_latex_value(v) for v in rvals]
        lines.append(" & ".join(cells) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"
