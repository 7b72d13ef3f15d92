"""Character tables and everything the table alone determines.

A CharTable stores class sizes, element orders, power maps and the full
matrix of irreducible character values (exact cyclotomics).  From that we
derive centralizer orders, kernels, the normal subgroup lattice, quotient
tables, the standard p-cores, the derived subgroup, the center, and a few
structural tests (nilpotency of a normal subgroup, cyclic Sylow).

Normal subgroups are unions of conjugacy classes and are represented by a
frozen set of class indices plus the subgroup order (NormalSet).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyc, cyc_to_rat
from .numutil import divisors, factorize, p_part, prime_divisors, valuation

#: desk-scale guard
MAX_CLASSES = 512


@dataclass(frozen=True)
class ClassData:
    size: int
    element_order: int
    name: str | None = None


@dataclass(frozen=True)
class NormalSet:
    """A normal subgroup as the set of conjugacy classes it contains."""

    members: frozenset[int]
    order: int

    def __contains__(self, c: int) -> bool:
        return c in self.members

    def __le__(self, other: "NormalSet") -> bool:
        return self.members <= other.members

    def is_trivial(self) -> bool:
        return self.order == 1


class CharTable:
    """An ordinary character table; immutable once built.

    Row 0 is the trivial character, column 0 the identity class.  Power
    maps are required for every prime dividing the group order.  Derived
    data (lattice, quotients) is memoized on the instance.
    """

    def __init__(self, group_order, classes, power_maps, chars, name=None):
        if len(classes) > MAX_CLASSES:
            raise ValueError(f"more than {MAX_CLASSES} classes")
        self.group_order = int(group_order)
        self.classes = tuple(classes)
        self.power_maps = {int(p): tuple(m) for p, m in power_maps.items()}
        self.chars = tuple(tuple(row) for row in chars)
        self.name = name
        self.k = len(self.classes)
        self._memo: dict = {}

    def __repr__(self):
        return f"CharTable({self.name or '?'}, |G|={self.group_order}, k={self.k})"

    def degree(self, i: int) -> int:
        d = cyc_to_rat(self.chars[i][0])
        if d is None or d.denominator != 1 or d <= 0:
            raise ValueError(f"character {i} has invalid degree {self.chars[i][0]!r}")
        return int(d)

    def whole_group(self) -> NormalSet:
        return NormalSet(frozenset(range(self.k)), self.group_order)

    def trivial_subgroup(self) -> NormalSet:
        return NormalSet(frozenset([0]), 1)

    def subset_order(self, members) -> int:
        return sum(self.classes[c].size for c in members)


# -- validation -------------------------------------------------------


def validate(t: CharTable) -> list[str]:
    """All invariant violations of the table; empty list means valid."""
    bad: list[str] = []
    n = t.group_order
    if len(t.chars) != t.k:
        bad.append(f"character count {len(t.chars)} != class count {t.k}")
        return bad
    if any(len(row) != t.k for row in t.chars):
        bad.append("ragged character matrix")
        return bad
    if sum(c.size for c in t.classes) != n:
        bad.append("class sizes do not sum to the group order")
    if t.classes[0].size != 1 or t.classes[0].element_order != 1:
        bad.append("column 0 is not the identity class")
    if any(t.chars[0][c] != Cyc.one() for c in range(t.k)):
        bad.append("row 0 is not the trivial character")
    for c, cls in enumerate(t.classes):
        if cls.size <= 0 or n % cls.size:
            bad.append(f"class {c}: size {cls.size} does not divide |G|")
        if cls.element_order <= 0 or n % cls.element_order:
            bad.append(f"class {c}: element order {cls.element_order} does not divide |G|")
    for p in prime_divisors(n):
        pm = t.power_maps.get(p)
        if pm is None or len(pm) != t.k:
            bad.append(f"power map for prime {p} missing or wrong length")
            continue
        for c in range(t.k):
            o = t.classes[c].element_order
            expect = o // (p if o % p == 0 else 1)
            if t.classes[pm[c]].element_order != expect:
                bad.append(f"power map p={p} inconsistent at class {c}")
    if set(t.power_maps) != set(prime_divisors(n)):
        bad.append("power map primes do not match the prime divisors of |G|")
    # orthogonality (row, then column against class sizes)
    for i in range(t.k):
        for j in range(i, t.k):
            s = Cyc.zero()
            for c in range(t.k):
                s = s + t.classes[c].size * (t.chars[i][c] * t.chars[j][c].conjugate())
            want = Fraction(n) if i == j else Fraction(0)
            if cyc_to_rat(s) != want:
                bad.append(f"row orthogonality fails for characters {i}, {j}")
    for c in range(t.k):
        s = Cyc.zero()
        for i in range(t.k):
            s = s + t.chars[i][c].abs2()
        val = cyc_to_rat(s)
        if val is None or val != Fraction(n, t.classes[c].size):
            bad.append(f"column orthogonality fails at class {c}")
    try:
        for i in range(t.k):
            t.degree(i)
    except ValueError as exc:
        bad.append(str(exc))
    return bad


# -- elementary invariants --------------------------------------------


def centralizer_order(t: CharTable, c: int) -> int:
    """|C_G(x)| for x in class c, via the second orthogonality relation."""
    s = Cyc.zero()
    for i in range(t.k):
        s = s + t.chars[i][c].abs2()
    val = cyc_to_rat(s)
    if val is None or val.denominator != 1 or val <= 0:
        raise ValueError(f"non-integral centralizer order at class {c}")
    return int(val)


def kernel_of(t: CharTable, i: int) -> NormalSet:
    deg = t.chars[i][0]
    members = frozenset(c for c in range(t.k) if t.chars[i][c] == deg)
    return NormalSet(members, t.subset_order(members))


def normal_lattice(t: CharTable) -> frozenset[NormalSet]:
    """All normal subgroups: kernels closed under pairwise intersection."""
    if "lattice" in t._memo:
        return t._memo["lattice"]
    sets = {kernel_of(t, i).members for i in range(t.k)}
    frontier = set(sets)
    while frontier:
        new = set()
        for a in frontier:
            for b in sets:
                c = a & b
                if c not in sets and c not in new:
                    new.add(c)
        sets |= new
        frontier = new
    out = frozenset(NormalSet(m, t.subset_order(m)) for m in sets)
    for ns in out:
        if t.group_order % ns.order:
            raise ValueError("normal-set order does not divide |G| (invalid table)")
    t._memo["lattice"] = out
    return out


def normal_join(t: CharTable, parts) -> NormalSet:
    """Smallest normal subgroup containing all the given NormalSets."""
    union = frozenset().union(*[p.members for p in parts]) if parts else frozenset([0])
    best = None
    for ns in normal_lattice(t):
        if union <= ns.members and (best is None or ns.order < best.order):
            best = ns
    assert best is not None
    return best


def minimal_normals(t: CharTable) -> list[NormalSet]:
    lat = [ns for ns in normal_lattice(t) if ns.order > 1]
    out = [ns for ns in lat if not any(o.order > 1 and o.members < ns.members for o in lat)]
    return sorted(out, key=lambda ns: (ns.order, sorted(ns.members)))


def derived_subgroup(t: CharTable) -> NormalSet:
    linear = [i for i in range(t.k) if t.degree(i) == 1]
    members = frozenset(range(t.k))
    for i in linear:
        members &= kernel_of(t, i).members
    return NormalSet(members, t.subset_order(members))


def center_classes(t: CharTable) -> NormalSet:
    members = frozenset(c for c in range(t.k) if t.classes[c].size == 1)
    return NormalSet(members, t.subset_order(members))


def power_class(t: CharTable, c: int, m: int) -> int:
    """Class of x^m for x in class c, composing prime power maps."""
    m %= t.classes[c].element_order
    if m == 0:
        return 0
    for p, e in factorize(m).items():
        for _ in range(e):
            c = t.power_maps[p][c]
    return c


def is_p_element(t: CharTable, c: int, p: int) -> bool:
    o = t.classes[c].element_order
    stored = len(factorize(o)) == 0 or factorize(o).keys() <= {p}
    if p in t.power_maps:
        cur, steps = c, 0
        while cur != 0 and steps <= valuation(t.group_order, p) + 1:
            cur = t.power_maps[p][cur]
            steps += 1
        via_maps = cur == 0
        if via_maps != stored:
            raise ValueError(f"element order and power maps disagree at class {c}")
    return stored


def core_subgroups(t: CharTable, p: int) -> tuple[NormalSet, NormalSet, NormalSet]:
    """(O_{p'}(G), O_p(G), O^{p'}(G)) from the normal lattice."""
    lat = normal_lattice(t)
    coprime = [ns for ns in lat if ns.order % p]
    o_pprime = max(coprime, key=lambda ns: ns.order)
    if not all(ns <= o_pprime for ns in coprime):
        raise ValueError("no unique largest normal p'-subgroup (invalid table)")
    ppower = [ns for ns in lat if ns.order == p_part(ns.order, p)]
    o_p = max(ppower, key=lambda ns: ns.order)
    if not all(ns <= o_p for ns in ppower):
        raise ValueError("no unique largest normal p-subgroup (invalid table)")
    coind = [ns for ns in lat if (t.group_order // ns.order) % p]
    o_upper = min(coind, key=lambda ns: ns.order)
    if not all(o_upper <= ns for ns in coind):
        raise ValueError("no unique smallest normal subgroup of p'-index (invalid table)")
    return o_pprime, o_p, o_upper


def is_nilpotent_normal(t: CharTable, N: NormalSet) -> bool:
    """N nilpotent iff it is the direct product of its Sylow subgroups,
    i.e. its r-elements form a normal subgroup of full r-part order for
    every prime r | |N|."""
    lat_members = {ns.members for ns in normal_lattice(t)}
    for r in prime_divisors(N.order):
        relts = frozenset(c for c in N.members if is_p_element(t, c, r))
        if relts not in lat_members:
            return False
        if t.subset_order(relts) != p_part(N.order, r):
            return False
    return True


def has_cyclic_sylow(t: CharTable, p: int) -> bool:
    target = p_part(t.group_order, p)
    return any(cls.element_order == target for cls in t.classes) or target == 1


# -- quotient tables --------------------------------------------------


def quotient_table(t: CharTable, N: NormalSet) -> CharTable:
    """The character table of G/N, from the characters containing N."""
    if N.members not in {ns.members for ns in normal_lattice(t)}:
        raise ValueError("not a normal subgroup of this table")
    rows = [i for i in range(t.k) if N.members <= kernel_of(t, i).members]
    # columns collapse when every surviving character agrees
    col_key = {}
    rep_cols: list[int] = []
    col_class: list[int] = []
    for c in range(t.k):
        key = tuple(t.chars[i][c] for i in rows)
        if key not in col_key:
            col_key[key] = len(rep_cols)
            rep_cols.append(c)
        col_class.append(col_key[key])
    q_order = t.group_order // N.order
    kq = len(rep_cols)
    # class sizes via second orthogonality in the quotient
    sizes = []
    for c in rep_cols:
        s = Cyc.zero()
        for i in rows:
            s = s + t.chars[i][c].abs2()
        cent = cyc_to_rat(s)
        if cent is None or cent.denominator != 1 or q_order % int(cent):
            raise ValueError("quotient centralizer order is not an integer divisor")
        sizes.append(q_order // int(cent))
    # element orders: least n with x^n inside N
    orders = []
    for c in rep_cols:
        o = t.classes[c].element_order
        for d in divisors(o):
            if power_class(t, c, d) in N.members:
                orders.append(d)
                break
    power_maps = {}
    for p in prime_divisors(q_order):
        power_maps[p] = tuple(col_class[power_class(t, c, p)] for c in rep_cols)
    classes = tuple(ClassData(size=s, element_order=o) for s, o in zip(sizes, orders))
    chars = tuple(tuple(t.chars[i][c] for c in rep_cols) for i in rows)
    name = f"{t.name}/N{N.order}" if t.name else None
    qt = CharTable(q_order, classes, power_maps, chars, name=name)
    if qt.classes[0].size != 1:
        raise ValueError("identity class lost in quotient (invalid input)")
    return qt
