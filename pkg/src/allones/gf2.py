"""Bit-packed dense linear algebra over GF(2).

Vectors and matrix rows are stored as Python ints (bit i = coordinate i),
so a row update is a single word-parallel XOR no matter how wide the row
is.  Everything is immutable from the caller's point of view: operations
return fresh values and never touch their inputs.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


class BitVec:
    """Immutable GF(2) vector of fixed length packed into one int.

    Bit i of ``bits`` is coordinate i; bits at positions >= n are zero.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0) -> None:
        if n < 0:
            raise ValueError(f"negative length {n}")
        if bits < 0 or bits >> n:
            raise ValueError(f"bits 0x{bits:x} do not fit in length {n}")
        self.n = n
        self.bits = bits

    @classmethod
    def zeros(cls, n: int) -> "BitVec":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVec":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitVec":
        """Build from an iterable of 0/1 values, first value = coordinate 0."""
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"bit value {v!r} is not 0 or 1")
            bits |= v << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVec":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for length {n}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def from01(cls, text: str) -> "BitVec":
        """Parse a string like '0110', leftmost character = coordinate 0."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"character {ch!r} is not '0' or '1'")
        return cls(len(text), bits)

    @property
    def weight(self) -> int:
        """Number of set bits (Hamming weight)."""
        return self.bits.bit_count()

    def indices(self) -> list[int]:
        """Ascending list of set-bit positions."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"bit index {i} out of range for length {self.n}")
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return BitVec(self.n, self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVec)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"BitVec({self.n}, 0b{self.bits:0{max(self.n, 1)}b})"


class BitMat:
    """Immutable GF(2) matrix stored as one packed int per row."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, row_bits: Sequence[int]) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        if len(row_bits) != rows:
            raise ValueError(f"expected {rows} rows, got {len(row_bits)}")
        for rb in row_bits:
            if rb < 0 or rb >> cols:
                raise ValueError(f"row 0x{rb:x} does not fit in {cols} columns")
        self.rows = rows
        self.cols = cols
        self._rows = tuple(row_bits)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMat":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMat":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, vecs: Sequence[BitVec]) -> "BitMat":
        if not vecs:
            raise ValueError("cannot infer width from an empty row list")
        cols = vecs[0].n
        if any(v.n != cols for v in vecs):
            raise ValueError("rows have mixed lengths")
        return cls(len(vecs), cols, [v.bits for v in vecs])

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMat":
        return cls.from_rows([BitVec.from_bits(row) for row in entries])

    @property
    def packed_rows(self) -> tuple[int, ...]:
        return self._rows

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self._rows[i])

    def column(self, j: int) -> BitVec:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range")
        mask = 1 << j
        bits = 0
        for i, rb in enumerate(self._rows):
            if rb & mask:
                bits |= 1 << i
        return BitVec(self.rows, bits)

    def transpose(self) -> "BitMat":
        out = [0] * self.cols
        for i, rb in enumerate(self._rows):
            while rb:
                low = rb & -rb
                out[low.bit_length() - 1] |= 1 << i
                rb ^= low
        return BitMat(self.cols, self.rows, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._rows))

    def __repr__(self) -> str:
        return f"BitMat({self.rows}x{self.cols})"


class RowPermutation:
    """Bijection on row indices; ``forward[i]`` is where row i moves to."""

    __slots__ = ("forward", "_inverse")

    def __init__(self, forward: Sequence[int]) -> None:
        fwd = tuple(forward)
        inv = [-1] * len(fwd)
        for i, f in enumerate(fwd):
            if not 0 <= f < len(fwd) or inv[f] != -1:
                raise ValueError("forward map is not a permutation")
            inv[f] = i
        self.forward = fwd
        self._inverse = tuple(inv)

    @classmethod
    def identity(cls, n: int) -> "RowPermutation":
        return cls(range(n))

    def apply(self, v: BitVec) -> BitVec:
        """Reorder coordinates: result[forward[i]] = v[i]."""
        if v.n != len(self.forward):
            raise ValueError(f"length mismatch: {v.n} vs {len(self.forward)}")
        out = 0
        bits = v.bits
        while bits:
            low = bits & -bits
            out |= 1 << self.forward[low.bit_length() - 1]
            bits ^= low
        return BitVec(v.n, out)

    def unapply(self, v: BitVec) -> BitVec:
        """Inverse of :meth:`apply`."""
        if v.n != len(self.forward):
            raise ValueError(f"length mismatch: {v.n} vs {len(self.forward)}")
        out = 0
        bits = v.bits
        while bits:
            low = bits & -bits
            out |= 1 << self._inverse[low.bit_length() - 1]
            bits ^= low
        return BitVec(v.n, out)

    def __len__(self) -> int:
        return len(self.forward)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RowPermutation) and self.forward == other.forward

    def __hash__(self) -> int:
        return hash(self.forward)

    def __repr__(self) -> str:
        return f"RowPermutation({list(self.forward)})"


class EchelonDecomposition:
    """Column echelon form with rows grouped by last nonzero column.

    ``epsilon`` is n x m; ``parts[i]`` is the end (exclusive) of part i in
    grouped row order.  Part 0 (rows [0, parts[0])) is all-zero; every row
    of part i >= 1 has bit i-1 set and bits i..m-1 clear, so parts[m] == n.
    ``perm`` maps original row indices to grouped positions and
    ``gamma_permuted`` is the particular solution in grouped order.
    """

    __slots__ = ("epsilon", "perm", "parts", "gamma_permuted")

    def __init__(
        self,
        epsilon: BitMat,
        perm: RowPermutation,
        parts: Sequence[int],
        gamma_permuted: BitVec,
    ) -> None:
        parts = tuple(parts)
        n, m = epsilon.rows, epsilon.cols
        if len(perm) != n or gamma_permuted.n != n:
            raise ValueError("permutation/gamma length does not match epsilon rows")
        if len(parts) != m + 1 or (parts and parts[-1] != n):
            raise ValueError("parts must list m+1 end indices with the last == n")
        if any(parts[i] > parts[i + 1] for i in range(m)):
            raise ValueError("part boundaries must be nondecreasing")
        self.epsilon = epsilon
        self.perm = perm
        self.parts = parts
        self.gamma_permuted = gamma_permuted

    @property
    def n(self) -> int:
        return self.epsilon.rows

    @property
    def m(self) -> int:
        return self.epsilon.cols

    def part_range(self, i: int) -> range:
        """Grouped row indices of part i (0 = the all-zero part)."""
        start = 0 if i == 0 else self.parts[i - 1]
        return range(start, self.parts[i])

    def check(self) -> None:
        """Raise AssertionError unless the grouped-echelon shape holds."""
        rows = self.epsilon.packed_rows
        for i in range(self.m + 1):
            for j in self.part_range(i):
                # bit_length == i <=> bit i-1 set and all higher bits clear
                assert rows[j].bit_length() == i, (
                    f"row {j} (part {i}) has last nonzero column "
                    f"{rows[j].bit_length()}"
                )
            if i >= 1:
                assert len(self.part_range(i)) >= 1, f"part {i} is empty"

    def __repr__(self) -> str:
        return (
            f"EchelonDecomposition(n={self.n}, m={self.m}, parts={list(self.parts)})"
        )


def rank(m: BitMat) -> int:
    """GF(2) rank via row echelon elimination; the input is not mutated."""
    rows = list(m.packed_rows)
    nrows = len(rows)
    rk = 0
    for c in range(m.cols):
        mask = 1 << c
        piv = -1
        for i in range(rk, nrows):
            if rows[i] & mask:
                piv = i
                break
        if piv < 0:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        for i in range(rk + 1, nrows):
            if rows[i] & mask:
                rows[i] ^= prow
        rk += 1
        if rk == nrows:
            break
    return rk


def mat_vec(m: BitMat, v: BitVec) -> BitVec:
    """Matrix-vector product over GF(2)."""
    if m.cols != v.n:
        raise ValueError(f"matrix has {m.cols} columns but vector length is {v.n}")
    out = 0
    vb = v.bits
    for i, rb in enumerate(m.packed_rows):
        if (rb & vb).bit_count() & 1:
            out |= 1 << i
    return BitVec(m.rows, out)


def solve(a: BitMat, b: BitVec) -> Optional[tuple[BitVec, BitMat]]:
    """Solve a.u = b over GF(2).

    Returns (gamma, null_basis) for a consistent system, None otherwise.
    gamma is the particular solution with every free variable set to zero;
    null_basis is cols x m, its k-th column obtained by setting the k-th
    free variable (ascending column order) to one and back-substituting.
    A dimension mismatch raises ValueError; that is a contract violation,
    not infeasibility.
    """
    if a.rows != b.n:
        raise ValueError(f"matrix has {a.rows} rows but vector length is {b.n}")
    cols = a.cols
    bmask = 1 << cols
    bbits = b.bits
    rows = [rb | (bmask if (bbits >> i) & 1 else 0) for i, rb in enumerate(a.packed_rows)]
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        mask = 1 << c
        piv = -1
        for i in range(r, nrows):
            if rows[i] & mask:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i] & mask:
                rows[i] ^= prow
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    # a surviving row can only be all-zero or "0 = 1"
    for i in range(r, nrows):
        if rows[i]:
            return None
    gamma = 0
    for i, c in enumerate(pivots):
        if rows[i] & bmask:
            gamma |= 1 << c
    pivot_set = set(pivots)
    basis_rows = [0] * cols
    k = 0
    for f in range(cols):
        if f in pivot_set:
            continue
        basis_rows[f] |= 1 << k
        fmask = 1 << f
        for i, c in enumerate(pivots):
            if rows[i] & fmask:
                basis_rows[c] |= 1 << k
        k += 1
    return BitVec(cols, gamma), BitMat(cols, k, basis_rows)


def column_echelon_grouped(
    null_basis: BitMat, gamma: BitVec
) -> EchelonDecomposition:
    """Column-reduce a full-column-rank matrix and group rows by their last
    nonzero column.

    The result spans the same column space as the row-permuted input (the
    reduction is a right-multiplication by an invertible matrix, the
    grouping a stable row sort), so the affine solution sets
    {epsilon.z + gamma_permuted} and {input.x + gamma} coincide up to the
    recorded row permutation.
    """
    n, m = null_basis.rows, null_basis.cols
    if gamma.n != n:
        raise ValueError(f"gamma length {gamma.n} does not match {n} rows")
    # row echelon on the transpose == column transformation of the input
    tcols = [0] * m
    for i, rb in enumerate(null_basis.packed_rows):
        while rb:
            low = rb & -rb
            tcols[low.bit_length() - 1] |= 1 << i
            rb ^= low
    rk = 0
    for c in range(n):
        mask = 1 << c
        piv = -1
        for j in range(rk, m):
            if tcols[j] & mask:
                piv = j
                break
        if piv < 0:
            continue
        tcols[rk], tcols[piv] = tcols[piv], tcols[rk]
        prow = tcols[rk]
        for j in range(rk + 1, m):
            if tcols[j] & mask:
                tcols[j] ^= prow
        rk += 1
        if rk == m:
            break
    if rk != m:
        raise ValueError("null basis does not have full column rank")
    eps_rows = [0] * n
    for j, cb in enumerate(tcols):
        while cb:
            low = cb & -cb
            eps_rows[low.bit_length() - 1] |= 1 << j
            cb ^= low
    # stable sort by last nonzero column; bit_length is exactly that
    # column's 1-based index (0 for all-zero rows, which form part 0)
    order = sorted(range(n), key=lambda i: eps_rows[i].bit_length())
    forward = [0] * n
    for pos, orig in enumerate(order):
        forward[orig] = pos
    counts = [0] * (m + 1)
    for rb in eps_rows:
        counts[rb.bit_length()] += 1
    parts = [0] * (m + 1)
    acc = 0
    for i in range(m + 1):
        acc += counts[i]
        parts[i] = acc
    perm = RowPermutation(forward)
    epsilon = BitMat(n, m, [eps_rows[orig] for orig in order])
    return EchelonDecomposition(epsilon, perm, parts, perm.apply(gamma))
