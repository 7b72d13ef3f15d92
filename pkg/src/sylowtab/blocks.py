"""p-blocks from central characters reduced modulo a prime ideal over p.

Two irreducible characters lie in the same p-block exactly when their
central characters omega_chi(C) = |C| chi(x_C) / chi(1) agree after
reduction into GF(p^m).  All reductions for one table go through a single
CycReducer at a common conductor, so the resulting partition cannot
depend on representative choices (and, as tested, does not depend on the
irreducible polynomial backing the finite field).
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharTable, is_p_element
from .cyclo import Cyc
from .gfpm import CycReducer
from .numutil import lcm, valuation


@dataclass(frozen=True)
class BlockPartition:
    p: int
    blocks: tuple[tuple[int, ...], ...]
    principal_index: int
    defects: tuple[int, ...]

    def principal(self) -> tuple[int, ...]:
        return self.blocks[self.principal_index]


def central_character(t: CharTable, i: int) -> list[Cyc]:
    """omega_chi over all classes; every value must be a cyclotomic integer."""
    deg = t.degree(i)
    out = []
    for c in range(t.k):
        w = (t.classes[c].size * t.chars[i][c]) / deg
        if not w.is_integral():
            raise ValueError(f"central character {i} is non-integral at class {c}")
        out.append(w)
    return out


def block_partition(t: CharTable, p: int, modulus=None) -> BlockPartition:
    """Partition Irr(G) into p-blocks; `modulus` optionally overrides the
    irreducible polynomial used for GF(p^m) (the partition is the same)."""
    omegas = [central_character(t, i) for i in range(t.k)]
    conductor = 1
    for row in omegas:
        for w in row:
            conductor = lcm(conductor, w.n)
    reducer = CycReducer(p, conductor, modulus=modulus)
    keyed: dict[tuple, list[int]] = {}
    for i, row in enumerate(omegas):
        key = tuple(reducer.reduce(w).coeffs for w in row)
        keyed.setdefault(key, []).append(i)
    blocks = tuple(tuple(b) for b in sorted(keyed.values()))
    principal = next(j for j, b in enumerate(blocks) if 0 in b)
    vg = valuation(t.group_order, p)
    defects = tuple(vg - min(valuation(t.degree(i), p) for i in b) for b in blocks)
    return BlockPartition(p=p, blocks=blocks, principal_index=principal, defects=defects)


def count_height_zero_principal(t: CharTable, p: int) -> int:
    """|Irr_{p'}(B_0)|: principal-block characters of degree coprime to p."""
    bp = block_partition(t, p)
    return sum(1 for i in bp.principal() if t.degree(i) % p)


def abelian_sylow_test(t: CharTable, p: int) -> bool:
    """P abelian iff every principal-block degree is coprime to p
    (the Height Zero theorem for principal blocks)."""
    bp = block_partition(t, p)
    return all(t.degree(i) % p for i in bp.principal())


def has_small_centralizer_p_element(t: CharTable, p: int) -> bool:
    """Is there a p-element class whose centralizer order has p-part <= p^2?"""
    from .chartab import centralizer_order

    for c in range(t.k):
        if is_p_element(t, c, p) and valuation(centralizer_order(t, c), p) <= 2:
            return True
    return False
