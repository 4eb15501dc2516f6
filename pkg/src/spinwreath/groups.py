"""Finite group input: class data plus an exact character table.

A group is supplied as conjugacy-class data (labels and centralizer
orders) and a character table over Q(zeta_conductor); every invariant
(class equation, exact row and column orthogonality, trivial first
character, integral degrees) is enforced at load time.  Built-in groups
also carry a concrete realization (elements and multiplication) used by
the brute-force oracle.
"""

import json
from fractions import Fraction

from .cyclo import CycloNumber


class GroupDataError(ValueError):
    """Malformed or inconsistent group input."""


class Realization:
    """Concrete elements for a built-in group, for oracle use only."""

    def __init__(self, elements, mult, identity, class_of, class_reps,
                 generators):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._mult = mult
        self.identity = identity
        self.class_of = class_of          # element -> class index
        self.class_reps = class_reps      # class index -> element
        self.generators = generators

    def mult(self, a, b):
        return self._mult(a, b)

    def inverse(self, a):
        for b in self.elements:
            if self._mult(a, b) == self.identity:
                return b
        raise GroupDataError("no inverse for %r" % (a,))


class GroupData:
    def __init__(self, name, order, conductor, class_labels,
                 centralizer_orders, table, realization=None):
        self.name = name
        self.order = order
        self.conductor = conductor
        self.class_labels = list(class_labels)
        self.centralizer_orders = list(centralizer_orders)
        self.table = [list(row) for row in table]
        self.realization = realization

    @property
    def num_classes(self):
        return len(self.class_labels)

    def degree(self, i):
        return int(self.table[i][0].rational_value())

    def serialize(self):
        return {
            "name": self.name,
            "order": self.order,
            "conductor": self.conductor,
            "classes": [{"label": lab, "centralizer": z}
                        for lab, z in zip(self.class_labels,
                                          self.centralizer_orders)],
            "characters": [[v.serialize() for v in row] for row in self.table],
        }

    def __repr__(self):
        return "GroupData(%s, order %d, %d classes)" % (
            self.name, self.order, self.num_classes)


def validate(gd):
    """Check every invariant; returns a list of (check, ok, detail)."""
    report = []
    k = gd.num_classes
    sizes_ok = all(gd.order % z == 0 for z in gd.centralizer_orders)
    class_sum = sum(gd.order // z for z in gd.centralizer_orders) if sizes_ok else -1
    report.append(("class-equation", sizes_ok and class_sum == gd.order,
                   "sum of class sizes %s vs order %d" % (class_sum, gd.order)))
    report.append(("identity-centralizer", gd.centralizer_orders[0] == gd.order,
                   "centralizer of identity class is %d"
                   % gd.centralizer_orders[0]))
    trivial = all(v == CycloNumber.rational(1) for v in gd.table[0])
    report.append(("trivial-first", trivial, "first character must be all ones"))
    degs_ok = True
    for i in range(k):
        v = gd.table[i][0]
        if not (v.is_rational() and v.rational_value().denominator == 1
                and v.rational_value() > 0):
            degs_ok = False
            report.append(("degree", False,
                           "character %d has degree %r" % (i, v)))
    if degs_ok:
        report.append(("degree", True, "all degrees positive integers"))
    for i in range(k):
        for j in range(i, k):
            acc = CycloNumber.rational(0)
            for c in range(k):
                acc = acc + gd.table[i][c] * gd.table[j][c].conj() * Fraction(
                    1, gd.centralizer_orders[c])
            want = CycloNumber.rational(1 if i == j else 0)
            if acc != want:
                report.append(("row-orthogonality", False,
                               "rows %d,%d give %r" % (i, j, acc)))
    for c in range(k):
        for d in range(c, k):
            acc = CycloNumber.rational(0)
            for i in range(k):
                acc = acc + gd.table[i][c] * gd.table[i][d].conj()
            want = CycloNumber.rational(
                gd.centralizer_orders[c] if c == d else 0)
            if acc != want:
                report.append(("column-orthogonality", False,
                               "columns %d,%d give %r" % (c, d, acc)))
    if not any(name == "row-orthogonality" for name, ok, _ in report):
        report.append(("row-orthogonality", True, "exact"))
    if not any(name == "column-orthogonality" for name, ok, _ in report):
        report.append(("column-orthogonality", True, "exact"))
    return report


def _check(gd):
    bad = [(name, detail) for name, ok, detail in validate(gd) if not ok]
    if bad:
        raise GroupDataError("invalid group %s: %s" % (gd.name, bad))
    return gd


# ---------------------------------------------------------------------------
# built-in groups


def _rat(q):
    return CycloNumber.rational(q)


def _trivial():
    real = Realization(
        elements=[0], mult=lambda a, b: 0, identity=0,
        class_of=lambda e: 0, class_reps=[0], generators=[])
    return GroupData("trivial", 1, 1, ["e"], [1], [[_rat(1)]], real)


def _cyclic(k):
    zk = [CycloNumber.zeta(k, j) if k > 1 else _rat(1) for j in range(k)]
    table = [[zk[(i * j) % k] for j in range(k)] for i in range(k)]
    real = Realization(
        elements=list(range(k)), mult=lambda a, b: (a + b) % k, identity=0,
        class_of=lambda e: e, class_reps=list(range(k)),
        generators=[1] if k > 1 else [])
    return GroupData("z%d" % k, k, k, ["g%d" % j for j in range(k)],
                     [k] * k, table, real)


def _perm_mult(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def _s3():
    from itertools import permutations
    elements = sorted(permutations(range(3)))

    def class_of(e):
        fixed = sum(1 for i in range(3) if e[i] == i)
        if fixed == 3:
            return 0
        return 1 if fixed == 1 else 2

    real = Realization(
        elements=elements, mult=_perm_mult, identity=(0, 1, 2),
        class_of=class_of, class_reps=[(0, 1, 2), (1, 0, 2), (1, 2, 0)],
        generators=[(1, 0, 2), (1, 2, 0)])
    table = [
        [_rat(1), _rat(1), _rat(1)],
        [_rat(1), _rat(-1), _rat(1)],
        [_rat(2), _rat(0), _rat(-1)],
    ]
    return GroupData("s3", 6, 1, ["e", "swap", "cycle"], [6, 2, 3], table, real)


def builtin_groups():
    return {
        "trivial": _trivial,
        "z2": lambda: _cyclic(2),
        "z3": lambda: _cyclic(3),
        "z4": lambda: _cyclic(4),
        "s3": _s3,
    }


def load_group(source):
    """Load a built-in group by name or a group file by path; all
    invariants are validated and a violation raises GroupDataError."""
    builtins = builtin_groups()
    if source in builtins:
        return _check(builtins[source]())
    try:
        with open(source) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise GroupDataError("cannot read group file %r: %s" % (source, e))
    except json.JSONDecodeError as e:
        raise GroupDataError("group file %r is not valid JSON: %s" % (source, e))
    return load_group_dict(doc)


def load_group_dict(doc):
    try:
        name = doc["name"]
        order = int(doc["order"])
        conductor = int(doc["conductor"])
        labels = [c["label"] for c in doc["classes"]]
        zetas = [int(c["centralizer"]) for c in doc["classes"]]
        table = [[CycloNumber.deserialize(entry, conductor) for entry in row]
                 for row in doc["characters"]]
    except (KeyError, TypeError, ValueError) as e:
        raise GroupDataError("malformed group document: %s" % (e,))
    if len(table) != len(labels) or any(len(r) != len(labels) for r in table):
        raise GroupDataError("character table must be square on the classes")
    return _check(GroupData(name, order, conductor, labels, zetas, table))


def save_group(gd, path):
    with open(path, "w") as fh:
        json.dump(gd.serialize(), fh, indent=1, sort_keys=False)
        fh.write("\n")
