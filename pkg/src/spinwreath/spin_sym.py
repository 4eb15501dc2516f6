"""The complete spin character table of the double cover of S_n.

Values on odd classes come from the Q-function expansion; an odd-excess
row additionally takes the value i^((n-l+1)/2) * sqrt(product of parts / 2)
on its own strict class and vanishes on every other odd-excess strict
class.  The associate character negates the values on odd-excess classes.
"""

from collections import namedtuple

from .cyclo import RadicalValue, i_power, sqrt_half_product
from .partitions import excess, is_odd, is_partition, is_strict, partitions_of
from .qfunctions import delta_on_odd

SymTable = namedtuple("SymTable", ["n", "rows", "columns", "values"])


def delta_value(nu, class_label, associate=False):
    """Spin character of the strict row nu at the class of cycle type
    class_label, as an exact RadicalValue."""
    nu, mu = tuple(nu), tuple(class_label)
    if not is_partition(nu) or not is_strict(nu):
        raise ValueError("row label must be a strict partition: %r" % (nu,))
    if not is_partition(mu):
        raise ValueError("not a partition: %r" % (mu,))
    if sum(nu) != sum(mu):
        raise ValueError("weight mismatch: %r vs %r" % (nu, mu))
    if is_odd(mu):
        v = RadicalValue.rational(delta_on_odd(nu, mu))
    elif excess(nu) % 2 == 1 and mu == nu:
        prod = 1
        for p in nu:
            prod *= p
        e = (sum(nu) - len(nu) + 1) // 2
        v = sqrt_half_product(prod) * i_power(e)
    else:
        v = RadicalValue.zero()
    if associate and excess(mu) % 2 == 1:
        v = -v
    return v


def split_class_labels(n):
    """Cycle types carrying spin character values: odd partitions followed
    by odd-excess strict partitions, each family largest-first."""
    odd = partitions_of(n, "odd")
    strict_odd = [mu for mu in partitions_of(n, "strict") if excess(mu) % 2 == 1]
    return odd + strict_odd


def spin_sym_table(n):
    """Rows are strict partitions of n, doubled into an associate pair when
    the excess is odd; columns are the split class labels."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = []
    for nu in partitions_of(n, "strict"):
        rows.append((nu, False))
        if excess(nu) % 2 == 1:
            rows.append((nu, True))
    columns = split_class_labels(n)
    values = [[delta_value(nu, mu, associate) for mu in columns]
              for nu, associate in rows]
    return SymTable(n, rows, columns, values)
