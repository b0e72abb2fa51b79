"""Littlewood-Richardson coefficients, restriction to block subgroups, and exact
Fourier coefficients of power words.

The LR coefficient is computed straight from its combinatorial definition:
count the ways nu arises from lam by successively adding horizontal strips of
sizes mu_1, mu_2, ... (no two new boxes in a column) such that the resulting
labelling, read top to bottom and right to left within rows, stays lattice
(every prefix has at least as many p's as (p+1)'s).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional

from .errors import CapError, RankError
from .partitions import DominantWeight, Partition, dim_weyl

__all__ = [
    "LRCache",
    "lr_coefficient",
    "BlockSubgroup",
    "BranchingTable",
    "restrict",
    "invariant_dim",
    "power_word_fourier_exact",
    "power_word_subgroup",
]

MAX_LR_WEIGHT = 40  # enumeration cap on |nu|


class LRCache:
    """Memo for LR coefficients, optionally mirrored to an append-only file.

    File records are lines "lam;mu;nu;N" in the canonical bracket encoding.
    The file is loaded lazily on first access and every newly computed
    coefficient is appended.  Reads are lock-free; writes are guarded.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self._mem: dict[tuple[Partition, Partition, Partition], int] = {}
        self._lock = threading.Lock()
        self._loaded = path is None

    def _ensure_loaded(self):
        if self._loaded:
            return
        with self._lock:
            if self._loaded:
                return
            try:
                with open(self.path, "r", encoding="utf-8") as fh:
                    for line in fh:
                        line = line.strip()
                        if not line:
                            continue
                        a, b, c, v = line.split(";")
                        key = (
                            Partition.parse(a),
                            Partition.parse(b),
                            Partition.parse(c),
                        )
                        self._mem[key] = int(v)
            except FileNotFoundError:
                pass
            self._loaded = True

    def get(self, lam: Partition, mu: Partition, nu: Partition) -> Optional[int]:
        self._ensure_loaded()
        return self._mem.get((lam, mu, nu))

    def put(self, lam: Partition, mu: Partition, nu: Partition, value: int):
        self._ensure_loaded()
        with self._lock:
            if (lam, mu, nu) in self._mem:
                return
            self._mem[(lam, mu, nu)] = value
            if self.path is not None:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(
                        f"{lam.encode()};{mu.encode()};{nu.encode()};{value}\n"
                    )

    def __len__(self) -> int:
        self._ensure_loaded()
        return len(self._mem)


_default_cache = LRCache()


def _horizontal_strip_additions(shape: tuple[int, ...], size: int, inside: Partition):
    """All shapes reachable from `shape` by adding `size` boxes, no two in a
    column, staying inside `inside`.  Yields (new_shape, added_cells)."""
    rows = len(shape) + 1
    results = []

    def place(row: int, remaining: int, current: list[int], cells: list[tuple[int, int]]):
        if remaining == 0:
            # pad out untouched rows
            rest = list(shape[row:])
            results.append((tuple(current + rest), tuple(cells)))
            return
        if row >= rows:
            return
        old = shape[row] if row < len(shape) else 0
        above_old = shape[row - 1] if row >= 1 else inside.part(row + 1) + remaining
        hi = min(inside.part(row + 1), above_old) - old
        lo = 0
        for r in range(hi, lo - 1, -1):
            if r > remaining:
                continue
            added = [(row + 1, old + t + 1) for t in range(r)]
            place(row + 1, remaining - r, current + [old + r], cells + added)

    place(0, size, [], [])
    # normalize: strip trailing zeros from shapes
    for shp, cells in results:
        while shp and shp[-1] == 0:
            shp = shp[:-1]
        yield shp, cells


def _count_strict_expansions(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of strict mu-expansions of lam realizing nu."""
    count = 0

    def walk(shape: tuple[int, ...], step: int, labelled: list[tuple[int, int, int]]):
        nonlocal count
        if step == mu.length:
            if Partition(shape) == nu:
                if _is_lattice(labelled, mu.length):
                    count += 1
            return
        for new_shape, cells in _horizontal_strip_additions(
            shape, mu.parts[step], nu
        ):
            walk(
                new_shape,
                step + 1,
                labelled + [(i, j, step + 1) for (i, j) in cells],
            )

    walk(lam.parts, 0, [])
    return count


def _is_lattice(labelled: list[tuple[int, int, int]], n_labels: int) -> bool:
    """Check the lattice condition in the top-to-bottom, right-to-left order."""
    order = sorted(labelled, key=lambda c: (c[0], -c[1]))
    seen = [0] * (n_labels + 2)
    for (_, _, label) in order:
        if label >= 2 and seen[label - 1] <= seen[label]:
            return False
        seen[label] += 1
    return True


def lr_coefficient(
    lam: Partition, mu: Partition, nu: Partition, cache: Optional[LRCache] = None
) -> int:
    """Multiplicity of nu in lam x mu (equivalently of lam x mu branching data).

    Zero unless |lam| + |mu| = |nu| and both lam and mu fit inside nu;
    symmetric in (lam, mu).
    """
    if lam.weight + mu.weight != nu.weight:
        return 0
    if not (nu.contains(lam) and nu.contains(mu)):
        return 0
    if nu.weight > MAX_LR_WEIGHT:
        raise CapError(f"|nu|={nu.weight} exceeds the LR cap {MAX_LR_WEIGHT}")
    if cache is None:
        cache = _default_cache
    hit = cache.get(lam, mu, nu)
    if hit is not None:
        return hit
    value = _count_strict_expansions(lam, mu, nu)
    cache.put(lam, mu, nu, value)
    return value


@dataclass(frozen=True)
class BlockSubgroup:
    """A product of unitary groups U_b1 x ... x U_bk block-diagonal in U_n."""

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        if any(b < 1 for b in self.blocks):
            raise ValueError("blocks must be positive")
        if sum(self.blocks) != self.n:
            raise RankError(
                f"blocks {self.blocks} sum to {sum(self.blocks)}, not n={self.n}"
            )


@dataclass
class BranchingTable:
    """Decomposition of a U_n irreducible over U_k x U_{n-k}."""

    source: DominantWeight
    k: int
    entries: dict[tuple[DominantWeight, DominantWeight], int] = field(
        default_factory=dict
    )

    def dimension_check(self) -> bool:
        """Exact bookkeeping: sum of mult * dim * dim equals the source dimension."""
        total = sum(
            m * dim_weyl(mu) * dim_weyl(nu) for (mu, nu), m in self.entries.items()
        )
        return total == dim_weyl(self.source)


def _sub_partitions(lam: Partition, max_len: int):
    """All partitions contained in lam with at most max_len rows."""
    rows = min(lam.length, max_len)

    def grow(i: int, cap: int, prefix: tuple[int, ...]):
        if i == rows:
            yield Partition(prefix)
            return
        hi = min(lam.parts[i], cap)
        for v in range(hi, -1, -1):
            yield from grow(i + 1, v, prefix + (v,))

    yield from grow(0, lam.parts[0] if lam.length else 0, ())


def _shift_weight(p: Partition, rank: int, shift: int) -> DominantWeight:
    return DominantWeight(rank, tuple(x + shift for x in p.padded(rank)))


def restrict(
    lam: DominantWeight, k: int, cache: Optional[LRCache] = None
) -> BranchingTable:
    """Branch a U_n irreducible to U_k x U_{n-k}.

    Negative entries are handled by tensoring with a power of det: with
    c = -lam_n, the weight lam + c*1 is a partition, and each branch factor
    is shifted back down by c.
    """
    n = lam.n
    if not (1 <= k < n):
        raise RankError(f"need 1 <= k < n, got k={k}, n={n}")
    c = -lam.entries[-1]
    shifted = Partition(tuple(e + c for e in lam.entries))
    table = BranchingTable(source=lam, k=k)
    for mu in _sub_partitions(shifted, k):
        rest = shifted.weight - mu.weight
        for nu in _sub_partitions(shifted, n - k):
            if nu.weight != rest:
                continue
            mult = lr_coefficient(mu, nu, shifted, cache=cache)
            if mult:
                key = (_shift_weight(mu, k, -c), _shift_weight(nu, n - k, -c))
                table.entries[key] = mult
    return table


def invariant_dim(
    lam: DominantWeight, subgroup: BlockSubgroup, cache: Optional[LRCache] = None
) -> int:
    """Multiplicity of the trivial representation of the block subgroup.

    Computed by iterated restriction, splitting blocks off left to right.
    With c = -lam_n this equals the multiplicity of the c-th determinant
    power on every block inside the shifted (polynomial) representation.
    """
    if subgroup.n != lam.n:
        raise RankError(f"subgroup rank {subgroup.n} != weight rank {lam.n}")
    c = -lam.entries[-1]
    shifted = Partition(tuple(e + c for e in lam.entries))
    return _det_power_multiplicity(shifted, subgroup.blocks, c, cache)


def _det_power_multiplicity(
    lam: Partition, blocks: tuple[int, ...], c: int, cache: Optional[LRCache]
) -> int:
    n = sum(blocks)
    rectangle = Partition([c] * blocks[0]) if c > 0 else Partition()
    if len(blocks) == 1:
        return 1 if (c >= 0 and lam == rectangle) else 0
    if c < 0:
        return 0
    k = blocks[0]
    if lam.length > n:
        return 0
    total = 0
    target = lam.weight - c * k
    if target < 0:
        return 0
    for nu in _sub_partitions(lam, n - k):
        if nu.weight != target:
            continue
        mult = lr_coefficient(rectangle, nu, lam, cache=cache)
        if mult:
            total += mult * _det_power_multiplicity(nu, blocks[1:], c, cache)
    return total


def power_word_subgroup(n: int, ell: int) -> BlockSubgroup:
    """The block subgroup whose invariants give the Fourier coefficient of x^ell:
    j = n mod ell blocks of size floor(n/ell)+1 and ell-j of size floor(n/ell),
    zero-size blocks dropped."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    q, j = divmod(n, ell)
    blocks = [q + 1] * j + [q] * (ell - j)
    blocks = tuple(b for b in blocks if b > 0)
    return BlockSubgroup(n=n, blocks=blocks)


def power_word_fourier_exact(
    lam: DominantWeight, ell: int, cache: Optional[LRCache] = None
) -> int:
    """Exact expectation of the character at an ell-th power of a Haar unitary:
    the dimension of the invariants under the associated block subgroup."""
    return invariant_dim(lam, power_word_subgroup(lam.n, ell), cache=cache)
