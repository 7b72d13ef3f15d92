"""Brute-force permutation groups: the ground-truth oracle.

Elements are enumerated explicitly (breadth-first over the generators, so
the ordering is deterministic and the identity is always element 0) and
stored as one big (order x degree) integer array.  Conjugacy classes,
Sylow subgroups, derived subgroups and centers are all computed by direct
scans over that array; nothing here is clever, which is the point --
everything downstream is validated against these numbers.

Composition convention: permutations act on the right of points, and
``mul(a, b)`` means "apply a, then b", i.e. (a*b)[pt] = b[a[pt]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numutil import lcm, p_part, prime_divisors, valuation

#: default element-enumeration cap
DEFAULT_CAP = 2_000_000

#: degrees up to this pack into a single int64 key (d^d < 2^63)
_FAST_DEGREE = 15


class CapExceeded(RuntimeError):
    """Raised when a group closure exceeds the configured element cap."""


def perm_from_cycles(degree: int, cycles) -> list[int]:
    """Image list of a permutation given by disjoint cycles (0-based)."""
    img = list(range(degree))
    for cyc in cycles:
        cyc = list(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return img


@dataclass
class ConjugacyData:
    reps: list[int]                 # element index of each class representative
    sizes: np.ndarray               # class sizes
    orders: list[int]               # element order per class
    class_of: np.ndarray            # class index per element
    power_maps: dict[int, list[int]]  # prime -> class index of rep^p


@dataclass(frozen=True)
class GroundTruth:
    """Oracle Sylow invariants for one (group, prime) pair."""

    p: int
    sylow_order: int
    commutator_index: int   # |P : P'|
    center_index: int       # |P : Z(P)|
    maximal_class: bool
    abelian: bool


class PermGroup:
    """A finite permutation group given by generators, fully enumerated."""

    def __init__(self, degree: int, generators, cap: int = DEFAULT_CAP, name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        for g in generators:
            arr = np.asarray(list(g), dtype=np.int64)
            if arr.shape != (degree,) or sorted(arr.tolist()) != list(range(degree)):
                raise ValueError(f"not a permutation of degree {degree}: {list(g)}")
            gens.append(arr)
        if not gens:
            gens = [np.arange(degree, dtype=np.int64)]
        self.degree = degree
        self.generators = gens
        self.cap = cap
        self.name = name
        self._elements: np.ndarray | None = None
        self._inverses: np.ndarray | None = None
        self._conj: ConjugacyData | None = None
        # index lookup state (fast path: packed int64 keys; slow path: dict)
        self._powers = None
        self._sorted_keys = None
        self._sort_order = None
        self._key_dict = None

    # -- enumeration --------------------------------------------------

    def _keys_of(self, rows: np.ndarray):
        if self.degree <= _FAST_DEGREE:
            return rows @ self._powers
        return [r.tobytes() for r in np.ascontiguousarray(rows, dtype=np.int64)]

    def elements(self) -> np.ndarray:
        """All group elements, (order x degree); element 0 is the identity."""
        if self._elements is not None:
            return self._elements
        d = self.degree
        if d <= _FAST_DEGREE:
            self._powers = d ** np.arange(d, dtype=np.int64)
        ident = np.arange(d, dtype=np.int64)
        rows = [ident]
        seen = {self._row_key(ident)}
        frontier = np.stack([ident])
        while frontier.size:
            new_rows = []
            for g in self.generators:
                prods = g[frontier]  # apply frontier element, then g
                for r in prods:
                    k = self._row_key(r)
                    if k not in seen:
                        seen.add(k)
                        new_rows.append(r)
            if len(rows) + len(new_rows) > self.cap:
                raise CapExceeded(f"group exceeds element cap {self.cap}")
            if not new_rows:
                break
            rows.extend(new_rows)
            frontier = np.stack(new_rows)
        E = np.stack(rows)
        self._elements = E
        self._inverses = np.argsort(E, axis=1)
        if d <= _FAST_DEGREE:
            keys = E @ self._powers
            self._sort_order = np.argsort(keys)
            self._sorted_keys = keys[self._sort_order]
        else:
            self._key_dict = {self._row_key(r): i for i, r in enumerate(E)}
        return E

    def _row_key(self, row: np.ndarray):
        if self.degree <= _FAST_DEGREE:
            return int(row @ self._powers)
        return row.astype(np.int64).tobytes()

    @property
    def order(self) -> int:
        return len(self.elements())

    def inverses(self) -> np.ndarray:
        self.elements()
        return self._inverses

    # -- element index arithmetic -------------------------------------

    def index_batch(self, rows: np.ndarray) -> np.ndarray:
        """Element indices of a batch of permutation rows (must be members)."""
        self.elements()
        if self.degree <= _FAST_DEGREE:
            keys = rows @ self._powers
            pos = np.searchsorted(self._sorted_keys, keys)
            idx = self._sort_order[pos]
            return idx
        return np.array([self._key_dict[r.tobytes()]
                         for r in np.ascontiguousarray(rows, dtype=np.int64)])

    def index_of(self, row: np.ndarray) -> int:
        return int(self.index_batch(np.asarray(row, dtype=np.int64)[None, :])[0])

    def mul_index(self, i: int, j: int) -> int:
        """Index of (element i, then element j)."""
        E = self.elements()
        return self.index_of(E[j][E[i]])

    def inv_index(self, i: int) -> int:
        return self.index_of(self.inverses()[i])

    def pow_index(self, i: int, k: int) -> int:
        E = self.elements()
        d = self.degree
        if k < 0:
            return self.pow_index(self.inv_index(i), -k)
        acc = np.arange(d, dtype=np.int64)
        base = E[i]
        while k:
            if k & 1:
                acc = base[acc]
            base = base[base]
            k >>= 1
        return self.index_of(acc)

    def element_order(self, i: int) -> int:
        img = self.elements()[i]
        seen = np.zeros(self.degree, dtype=bool)
        out = 1
        for start in range(self.degree):
            if not seen[start]:
                length, pt = 0, start
                while not seen[pt]:
                    seen[pt] = True
                    pt = int(img[pt])
                    length += 1
                out = lcm(out, length)
        return out

    def closure_indices(self, gen_indices) -> np.ndarray:
        """Sorted element indices of the subgroup generated by the given elements."""
        E = self.elements()
        seen = {0}
        frontier = [0]
        gen_rows = [E[i] for i in gen_indices]
        while frontier:
            block = E[np.array(frontier)]
            nxt = []
            for g in gen_rows:
                for idx in self.index_batch(g[block]).tolist():
                    if idx not in seen:
                        seen.add(idx)
                        nxt.append(idx)
            frontier = nxt
        return np.array(sorted(seen))

    # -- conjugacy structure ------------------------------------------

    def conjugacy_data(self) -> ConjugacyData:
        if self._conj is not None:
            return self._conj
        E = self.elements()
        Einv = self.inverses()
        n = len(E)
        class_of = np.full(n, -1, dtype=np.int64)
        reps, sizes, orders = [], [], []
        for idx in range(n):
            if class_of[idx] >= 0:
                continue
            x = E[idx]
            # g^-1 x g for every g, all at once
            conj = np.take_along_axis(E, x[Einv], axis=1)
            members = np.unique(self.index_batch(conj))
            class_of[members] = len(reps)
            reps.append(idx)
            sizes.append(len(members))
            orders.append(self.element_order(idx))
        power_maps = {}
        for p in prime_divisors(n):
            power_maps[p] = [int(class_of[self.pow_index(r, p)]) for r in reps]
        self._conj = ConjugacyData(reps, np.array(sizes), orders, class_of, power_maps)
        return self._conj

    def exponent(self) -> int:
        out = 1
        for o in self.conjugacy_data().orders:
            out = lcm(out, o)
        return out

    def centralizer_order_of_class(self, c: int) -> int:
        cd = self.conjugacy_data()
        return self.order // int(cd.sizes[c])

    def centralizer_size(self, i: int) -> int:
        """|C_G(x)| for element index i, by direct scan."""
        E = self.elements()
        x = E[i]
        return int(np.count_nonzero((E[:, x] == x[E]).all(axis=1)))

    def center_indices(self) -> np.ndarray:
        E = self.elements()
        mask = np.ones(len(E), dtype=bool)
        for g in self.generators:
            mask &= (E[:, g] == g[E]).all(axis=1)
        return np.flatnonzero(mask)

    def commutator_indices(self, idx_set=None) -> list[int]:
        """Indices of all commutators [x, y] with x, y ranging over idx_set."""
        E = self.elements()
        Einv = self.inverses()
        idx = np.arange(len(E)) if idx_set is None else np.asarray(sorted(idx_set))
        out = set()
        for j in idx.tolist():
            y, yinv = E[j], Einv[j]
            # [x,y] = x^-1 y^-1 x y for all x in one shot
            t = np.take_along_axis(E[idx], yinv[Einv[idx]], axis=1)
            comm = y[t]
            out.update(self.index_batch(comm).tolist())
        return sorted(out)

    def derived_indices(self) -> np.ndarray:
        """G' = normal closure of the generator commutators (element indices)."""
        gens = []
        gi = [self.index_of(g) for g in self.generators]
        for i in gi:
            for j in gi:
                c = self.mul_index(self.mul_index(self.inv_index(i), self.inv_index(j)),
                                   self.mul_index(i, j))
                if c:
                    gens.append(c)
        gens = sorted(set(gens))
        current = self.closure_indices(gens) if gens else np.array([0])
        E, Einv = self.elements(), self.inverses()
        while True:
            cur_set = set(current.tolist())
            extra = []
            for j in gi:
                conj = E[j][E[current][:, Einv[j]]]  # g^-1 x g rowwise
                for idx in self.index_batch(conj).tolist():
                    if idx not in cur_set:
                        extra.append(idx)
            if not extra:
                return current
            # keep the generating list short: one new conjugate is enough to
            # grow the closure, and re-closing is O(|H| * #gens)
            gens.append(extra[0])
            current = self.closure_indices(gens)

    # -- Sylow machinery ----------------------------------------------

    def sylow_p(self, p: int) -> "PermGroup":
        """A Sylow p-subgroup, grown through normalizers from a cyclic seed."""
        n = self.order
        target = p_part(n, p)
        ident = np.arange(self.degree, dtype=np.int64)
        if target == 1:
            return PermGroup(self.degree, [ident], name=f"Syl_{p}(trivial)")
        cd = self.conjugacy_data()
        elem_orders = np.array(cd.orders)[cd.class_of]
        E = self.elements()
        Einv = self.inverses()

        def p_element_part(i: int) -> int:
            o = int(elem_orders[i])
            return self.pow_index(i, o // p_part(o, p))

        seed = next(i for i in range(n) if elem_orders[i] % p == 0)
        gen_idx = [p_element_part(seed)]
        members = self.closure_indices(gen_idx)
        while len(members) < target:
            mask = np.ones(n, dtype=bool)
            for q in gen_idx:
                conj = np.take_along_axis(E, E[q][Einv], axis=1)
                mask &= np.isin(self.index_batch(conj), members)
            member_set = set(members.tolist())
            for j in np.flatnonzero(mask).tolist():
                if elem_orders[j] % p:
                    continue
                y = p_element_part(j)
                if y not in member_set:
                    gen_idx.append(y)
                    break
            else:  # pragma: no cover - Sylow theory says this cannot happen
                raise AssertionError("no p-element extends the candidate p-subgroup")
            members = self.closure_indices(gen_idx)
        return PermGroup(self.degree, [E[i] for i in gen_idx],
                         name=f"Syl_{p}({self.name or '?'})")

    def ground_truth(self, p: int) -> GroundTruth:
        return subgroup_invariants(self.sylow_p(p), p)


def subgroup_invariants(P: PermGroup, p: int) -> GroundTruth:
    """Sylow invariants of a p-group by exhaustive computation."""
    n = P.order
    v = valuation(n, p)
    if n != p**v:
        raise ValueError(f"not a p-group: |P| = {n}")
    derived = P.closure_indices(P.commutator_indices()) if n > 1 else np.array([0])
    center = P.center_indices()
    abelian = len(center) == n
    commutator_index = n // len(derived)
    center_index = n // len(center)
    if abelian or v <= 2:
        maximal = False
    elif v == 3:
        maximal = True  # nonabelian of order p^3 has class 2 = v - 1
    else:
        E = P.elements()
        maximal = False
        for i in range(n):
            x = E[i]
            cent = int(np.count_nonzero((E[:, x] == x[E]).all(axis=1)))
            if cent == p * p:
                maximal = True
                break
    return GroundTruth(p=p, sylow_order=n, commutator_index=commutator_index,
                       center_index=center_index, maximal_class=maximal, abelian=abelian)


def index_p_normal_subgroups(P: PermGroup, p: int) -> list[np.ndarray]:
    """All normal subgroups of index p in a p-group (element index arrays).

    These are exactly the kernels of surjections onto C_p, i.e. the
    hyperplane preimages of P modulo its Frattini subgroup P'P^p.
    """
    n = P.order
    if n % p:
        raise ValueError("not a p-group for this prime")
    if n == 1:
        return []
    frat_gens = set(P.commutator_indices())
    for i in range(n):
        frat_gens.add(P.pow_index(i, p))
    frat_gens.discard(0)
    M = P.closure_indices(sorted(frat_gens)) if frat_gens else np.array([0])
    # label cosets of M by their smallest member index
    E = P.elements()
    coset_of = {}
    for i in range(n):
        if i in coset_of:
            continue
        # coset x*M: apply x, then each m in M
        block = P.index_batch(np.stack([E[m][E[i]] for m in M.tolist()]))
        label = int(block.min())
        for b in block.tolist():
            coset_of[b] = label
    q = len(set(coset_of.values()))
    r = 0
    while p**r < q:
        r += 1
    assert p**r == q
    # find a basis of the elementary abelian quotient and coordinates
    coords = {coset_of[0]: (0,) * r}
    basis = []
    for i in range(n):
        lab = coset_of[i]
        if lab in coords:
            continue
        # tentatively extend the basis by element i
        k = len(basis)
        new_coords = dict(coords)
        for old_lab, vec in coords.items():
            rep = next(j for j in range(n) if coset_of[j] == old_lab)
            acc = rep
            for e in range(1, p):
                acc = P.mul_index(acc, i)
                new_vec = list(vec)
                new_vec[k] = e
                new_coords[coset_of[acc]] = tuple(new_vec)
        if len(new_coords) > len(coords):
            basis.append(i)
            coords = new_coords
        if len(coords) == q:
            break
    assert len(basis) == r and len(coords) == q
    elem_vec = np.array([coords[coset_of[i]] for i in range(n)])
    out = []
    seen_funcs = set()
    for func in _nonzero_functionals(p, r):
        key = tuple(func)
        if key in seen_funcs:
            continue
        for s in range(2, p):
            seen_funcs.add(tuple((s * f) % p for f in func))
        seen_funcs.add(key)
        members = np.flatnonzero((elem_vec @ np.array(func)) % p == 0)
        out.append(members)
    return out


def _nonzero_functionals(p: int, r: int):
    vec = [0] * r
    total = p**r
    for k in range(1, total):
        m = k
        for i in range(r):
            vec[i] = m % p
            m //= p
        yield tuple(vec)
