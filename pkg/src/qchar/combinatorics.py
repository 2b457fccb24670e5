"""Partitions, signed multi-partitions, pyramid tableaux, readings, weights,
and the partial orders that index every basis in the package.

A pyramid is a left-justified upside-down Young diagram: for a partition of
length l, rows are numbered 1..l from top to bottom and the i-th row from the
top has length parts[l-i] (shortest row on top).  All tableau conditions for
sign "-" are the reverses of the sign "+" conditions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

Sign = str  # "+" or "-"

# ---------------------------------------------------------------------------
# Weight vectors: finite mappings a -> coefficient of delta_a, no stored zeros.
# ---------------------------------------------------------------------------


def wv_trim(nu: dict[int, int]) -> dict[int, int]:
    return {a: c for a, c in nu.items() if c}


def wv_add(nu: dict[int, int], mu: dict[int, int]) -> dict[int, int]:
    out = dict(nu)
    for a, c in mu.items():
        s = out.get(a, 0) + c
        if s:
            out[a] = s
        else:
            out.pop(a, None)
    return out


def wv_scale(nu: dict[int, int], c: int) -> dict[int, int]:
    if c == 0:
        return {}
    return {a: c * v for a, v in nu.items()}


def wv_sub(nu: dict[int, int], mu: dict[int, int]) -> dict[int, int]:
    return wv_add(nu, wv_scale(mu, -1))


def in_P_plus(nu: dict[int, int]) -> bool:
    """Membership of the cone spanned by delta_a - delta_{a+1} over N.

    Characterized by total coefficient sum zero together with nonnegative
    prefix sums over increasing a.
    """
    if sum(nu.values()) != 0:
        return False
    prefix = 0
    for a in sorted(nu):
        prefix += nu[a]
        if prefix < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Partitions and signed multi-partitions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {self.parts}")

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def num_cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def transpose(self) -> tuple[int, ...]:
        """Column lengths, leftmost first."""
        return tuple(sum(1 for p in self.parts if p > j) for j in range(self.num_cols))

    def row_lengths(self) -> tuple[int, ...]:
        """Row lengths top to bottom: row i from the top has length parts[l-i]."""
        return tuple(reversed(self.parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class SignedMultiPartition:
    """A sequence of (partition, sign) pieces; the global configuration object."""

    pieces: tuple[tuple[Partition, Sign], ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("signed multi-partition needs at least one piece")
        if any(s not in "+-" for _, s in self.pieces):
            raise ValueError("signs must be '+' or '-'")

    @property
    def r(self) -> int:
        return len(self.pieces)

    @property
    def n(self) -> int:
        return sum(p.size for p, s in self.pieces if s == "+")

    @property
    def m(self) -> int:
        return sum(p.size for p, s in self.pieces if s == "-")

    def sign_sequence(self) -> tuple[Sign, ...]:
        """The (n|m)-sign sequence with each piece's sign repeated per box."""
        return tuple(s for p, s in self.pieces for _ in range(p.size))

    def __str__(self) -> str:
        return " / ".join(f"{p}:{s}" for p, s in self.pieces)


class Refinement(NamedTuple):
    """The one-row-pieces refinement of a signed multi-partition."""

    ulam: "SignedMultiPartition"
    uep: tuple[Sign, ...]
    s: tuple[Sign, ...]
    lam: tuple[int, ...]
    lam_plus: tuple[int, ...]
    lam_minus: tuple[int, ...]


def refine(mp: SignedMultiPartition) -> Refinement:
    """Split every piece into one-row pieces, keeping piece order.

    Returns the refined signed multi-partition together with its sign
    sequence per part, the sign sequence per box, and the compositions made
    of all parts / the plus parts / the minus parts in piece order.
    """
    ulam_pieces = []
    uep = []
    lam, lam_plus, lam_minus = [], [], []
    for p, s in mp.pieces:
        for part in p.parts:
            ulam_pieces.append((Partition((part,)), s))
            uep.append(s)
            lam.append(part)
            (lam_plus if s == "+" else lam_minus).append(part)
    return Refinement(
        SignedMultiPartition(tuple(ulam_pieces)),
        tuple(uep),
        mp.sign_sequence(),
        tuple(lam),
        tuple(lam_plus),
        tuple(lam_minus),
    )


# ---------------------------------------------------------------------------
# Tableaux.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """An integer filling of a signed pyramid, rows stored top to bottom."""

    shape: Partition
    sign: Sign
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != self.shape.row_lengths():
            raise ValueError(f"filling {self.rows} does not fit shape {self.shape}")

    @property
    def length(self) -> int:
        return self.shape.length

    def entry(self, i: int, j: int) -> int:
        """The entry in row i (1-based, from the top) and column j (1-based)."""
        return self.rows[i - 1][j - 1]

    def columns(self) -> list[tuple[int, ...]]:
        """Column contents top to bottom, leftmost column first."""
        cols = []
        for j in range(self.shape.num_cols):
            cols.append(tuple(row[j] for row in self.rows if len(row) > j))
        return cols

    def column_reading(self) -> tuple[int, ...]:
        """Entries read down the columns, leftmost column first."""
        return tuple(x for col in self.columns() for x in col)

    def row_reading(self) -> tuple[int, ...]:
        """Entries read along the rows, top row first, left to right."""
        return tuple(x for row in self.rows for x in row)

    def weight(self) -> dict[int, int]:
        nu: dict[int, int] = {}
        for x in self.row_reading():
            nu[x] = nu.get(x, 0) + 1
        return nu

    def truncate(self, r: int) -> "Tableau":
        """Delete all boxes in rows higher than the r-th row (keep rows r..l)."""
        kept = self.rows[r - 1 :]
        return Tableau(Partition(tuple(sorted((len(x) for x in kept), reverse=True))), self.sign, kept)

    def is_row(self) -> bool:
        inc = self.sign == "+"
        for row in self.rows:
            for a, b in zip(row, row[1:]):
                if (a > b) if inc else (a < b):
                    return False
        return True

    def is_col(self) -> bool:
        # Strictly increasing up each column from bottom to top for sign "+",
        # i.e. strictly decreasing when read top-down; reversed for sign "-".
        inc = self.sign == "+"
        for col in self.columns():
            for a, b in zip(col, col[1:]):
                if (a <= b) if inc else (a >= b):
                    return False
        return True

    def is_std(self) -> bool:
        return self.is_row() and self.is_col()

    def __str__(self) -> str:
        return "|".join(",".join(str(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class MultiTableau:
    """A sequence of tableaux matching a signed multi-partition."""

    components: tuple[Tableau, ...]

    @property
    def shape(self) -> SignedMultiPartition:
        return SignedMultiPartition(tuple((t.shape, t.sign) for t in self.components))

    def row_reading(self) -> tuple[int, ...]:
        return tuple(x for t in self.components for x in t.row_reading())

    def column_reading(self) -> tuple[int, ...]:
        return tuple(x for t in self.components for x in t.column_reading())

    def weight(self) -> dict[int, int]:
        nu: dict[int, int] = {}
        for t in self.components:
            nu = wv_add(nu, t.weight())
        return nu

    def weight_signed(self) -> dict[int, int]:
        return self.partial_weight(1)

    def partial_weight(self, j: int) -> dict[int, int]:
        """Signed weight of the components from the j-th one on (1-based)."""
        if not 1 <= j <= len(self.components):
            raise ValueError(f"component index {j} out of range")
        nu: dict[int, int] = {}
        for t in self.components[j - 1 :]:
            nu = wv_add(nu, wv_scale(t.weight(), 1 if t.sign == "+" else -1))
        return nu

    def is_row(self) -> bool:
        return all(t.is_row() for t in self.components)

    def is_col(self) -> bool:
        return all(t.is_col() for t in self.components)

    def is_std(self) -> bool:
        return all(t.is_std() for t in self.components)

    def __str__(self) -> str:
        return " / ".join(str(t) for t in self.components)


def weight(obj: Tableau | MultiTableau) -> dict[int, int]:
    return obj.weight()


def column_reading(obj: Tableau | MultiTableau) -> tuple[int, ...]:
    return obj.column_reading()


def row_reading(obj: Tableau | MultiTableau) -> tuple[int, ...]:
    return obj.row_reading()


def partial_weight(mt: MultiTableau, j: int) -> dict[int, int]:
    return mt.partial_weight(j)


def tableau_from_row_reading(shape: Partition, sign: Sign, values: Sequence[int]) -> Tableau:
    """Rebuild a tableau from its row reading."""
    rows, pos = [], 0
    for length in shape.row_lengths():
        rows.append(tuple(values[pos : pos + length]))
        pos += length
    if pos != len(values):
        raise ValueError("row reading length does not match the shape")
    return Tableau(shape, sign, tuple(rows))


def multi_tableau_from_row_reading(
    mp: SignedMultiPartition, values: Sequence[int]
) -> MultiTableau:
    comps, pos = [], 0
    for p, s in mp.pieces:
        comps.append(tableau_from_row_reading(p, s, values[pos : pos + p.size]))
        pos += p.size
    if pos != len(values):
        raise ValueError("row reading length does not match the shape")
    return MultiTableau(tuple(comps))


# ---------------------------------------------------------------------------
# Enumeration.
# ---------------------------------------------------------------------------


def _rows_bottom_up(
    lengths: list[int],
    below: tuple[int, ...] | None,
    lo: int,
    hi: int,
    sign: Sign,
    kind: str,
) -> Iterator[list[tuple[int, ...]]]:
    """Yield lists of rows ordered bottom to top, extending the row `below`."""
    if not lengths:
        yield []
        return
    length = lengths[0]
    row_monotone = kind in ("row", "std")
    col_strict = kind in ("col", "std")

    def cells(prefix: list[int]) -> Iterator[list[int]]:
        if len(prefix) == length:
            yield prefix
            return
        j = len(prefix)
        for v in range(lo, hi + 1):
            if row_monotone and prefix:
                if (prefix[-1] > v) if sign == "+" else (prefix[-1] < v):
                    continue
            if col_strict and below is not None:
                if (v <= below[j]) if sign == "+" else (v >= below[j]):
                    continue
            yield from cells(prefix + [v])

    for row_list in cells([]):
        row = tuple(row_list)
        for rest in _rows_bottom_up(lengths[1:], row, lo, hi, sign, kind):
            yield [row] + rest


def enumerate_component(
    lam: Partition, sign: Sign, kind: str, window: tuple[int, int]
) -> list[Tableau]:
    """All Row/Col/Std tableaux of one piece with entries inside the window."""
    if kind not in ("row", "col", "std"):
        raise ValueError(f"unknown tableau kind: {kind}")
    lo, hi = window
    if lo > hi:
        return []
    lengths = list(lam.parts)  # bottom row (longest) first
    out = []
    for rows in _rows_bottom_up(lengths, None, lo, hi, sign, kind):
        out.append(Tableau(lam, sign, tuple(reversed(rows))))
    out.sort(key=lambda t: t.row_reading())
    return out


def enumerate_tableaux(
    shape: SignedMultiPartition | tuple[Partition, Sign],
    kind: str,
    window: tuple[int, int],
) -> list[MultiTableau]:
    """All Row/Col/Std multi-tableaux with entries inside the window.

    Output order is lexicographic on the row reading, which keeps listings
    and golden files deterministic.
    """
    if isinstance(shape, tuple):
        shape = SignedMultiPartition((shape,))
    per_piece = [enumerate_component(p, s, kind, window) for p, s in shape.pieces]
    out = [MultiTableau(combo) for combo in itertools.product(*per_piece)]
    out.sort(key=lambda mt: mt.row_reading())
    return out


# ---------------------------------------------------------------------------
# Bruhat and tableau orders.
# ---------------------------------------------------------------------------


class IntVector(NamedTuple):
    """An integer vector together with its ambient (n|m)-sign sequence."""

    values: tuple[int, ...]
    signs: tuple[Sign, ...]


def suffix_weights(f: IntVector) -> list[dict[int, int]]:
    """wt^j for j = 1..k, computed from the tail inward; index j-1 holds wt^j."""
    k = len(f.values)
    out: list[dict[int, int]] = [dict() for _ in range(k)]
    acc: dict[int, int] = {}
    for j in range(k, 0, -1):
        acc = wv_add(acc, {f.values[j - 1]: 1 if f.signs[j - 1] == "+" else -1})
        out[j - 1] = acc
    return out


def bruhat_leq(g: IntVector, f: IntVector) -> bool:
    """g precedes f iff the total weights agree and every suffix-weight
    difference wt^j(f) - wt^j(g) lies in the dominance cone."""
    if g.signs != f.signs or len(g.values) != len(f.values):
        raise ValueError("vectors must share length and sign sequence")
    wg, wf = suffix_weights(g), suffix_weights(f)
    if wg[0] != wf[0]:
        return False
    return all(in_P_plus(wv_sub(wf[j], wg[j])) for j in range(1, len(f.values)))


def tableau_leq_T(A2: Tableau, A1: Tableau, ep: Sign) -> bool:
    """A2 <= A1 iff the weights agree and every bottom-truncation weight
    difference ep*(wt(A1, rows r..l) - wt(A2, rows r..l)) is dominant."""
    if A2.shape != A1.shape or A2.sign != A1.sign:
        raise ValueError("tableaux must share shape and sign")
    if A1.weight() != A2.weight():
        return False
    sgn = 1 if ep == "+" else -1
    for r in range(2, A1.length + 1):
        diff = wv_sub(A1.truncate(r).weight(), A2.truncate(r).weight())
        if not in_P_plus(wv_scale(diff, sgn)):
            return False
    return True


def multi_leq_T(bfA2: MultiTableau, bfA1: MultiTableau) -> bool:
    """The multi-tableau order: equal total signed weight, dominant partial
    weight differences, and componentwise comparison when every partial
    weight agrees."""
    if bfA2.shape != bfA1.shape:
        raise ValueError("multi-tableaux must share the signed multi-partition")
    r = len(bfA1.components)
    partials1 = [bfA1.partial_weight(j) for j in range(1, r + 1)]
    partials2 = [bfA2.partial_weight(j) for j in range(1, r + 1)]
    if partials1[0] != partials2[0]:
        return False
    for w1, w2 in zip(partials1, partials2):
        if not in_P_plus(wv_sub(w1, w2)):
            return False
    if partials1 == partials2:
        return all(
            tableau_leq_T(t2, t1, t1.sign)
            for t2, t1 in zip(bfA2.components, bfA1.components)
        )
    return True


# ---------------------------------------------------------------------------
# Column stabilizers.
# ---------------------------------------------------------------------------


def _inversions(perm: tuple[int, ...]) -> int:
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def column_stabilizer(bfA: MultiTableau) -> Iterator[tuple[MultiTableau, int]]:
    """Iterate over all column permutations of a multi-tableau.

    Yields the permuted multi-tableau together with the total length (sum of
    per-column inversion counts).  Entries must be pairwise distinct inside
    every column, which holds for standard multi-tableaux.
    """
    column_sets = []  # (component index, column index, contents)
    for ci, t in enumerate(bfA.components):
        for j, col in enumerate(t.columns()):
            if len(set(col)) != len(col):
                raise ValueError(f"repeated entry in column {j + 1} of component {ci + 1}")
            column_sets.append((ci, j, col))
    perm_choices = [
        [(p, _inversions(p)) for p in itertools.permutations(range(len(col)))]
        for _, _, col in column_sets
    ]
    for choice in itertools.product(*perm_choices):
        new_rows = [[list(row) for row in t.rows] for t in bfA.components]
        total = 0
        for (ci, j, col), (perm, inv) in zip(column_sets, choice):
            total += inv
            rows_with_col = [
                i for i, row in enumerate(bfA.components[ci].rows) if len(row) > j
            ]
            for pos, i in enumerate(rows_with_col):
                new_rows[ci][i][j] = col[perm[pos]]
        comps = tuple(
            Tableau(t.shape, t.sign, tuple(tuple(row) for row in rows))
            for t, rows in zip(bfA.components, new_rows)
        )
        yield MultiTableau(comps), total


# ---------------------------------------------------------------------------
# Pyramid bookkeeping.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PyramidReport:
    """Column lengths, Levi data, nilpotent support, and the refinement of a
    signed multi-pyramid."""

    shape: SignedMultiPartition
    column_lengths: tuple[tuple[int, ...], ...]  # q_j^(k) per piece
    q_plus: tuple[int, ...]
    q_minus: tuple[int, ...]
    g0: tuple[str, ...]
    levi_blocks: tuple[int, ...]
    jordan_type: tuple[tuple[int, ...], tuple[int, ...]]
    e_support: tuple[tuple[str, str], ...]
    theta: tuple[int, ...]
    theta_ok: bool
    refinement: Refinement

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "column_lengths": [list(c) for c in self.column_lengths],
            "q_plus": list(self.q_plus),
            "q_minus": list(self.q_minus),
            "g0": list(self.g0),
            "levi_blocks": list(self.levi_blocks),
            "jordan_type": [list(self.jordan_type[0]), list(self.jordan_type[1])],
            "e_support": [list(p) for p in self.e_support],
            "theta": list(self.theta),
            "refined_ulam": [list(p.parts) for p, _ in self.refinement.ulam.pieces],
            "refined_uep": "".join(self.refinement.uep),
            "sign_sequence": "".join(self.refinement.s),
        }


def box_labels(mp: SignedMultiPartition) -> dict[tuple[int, int, int], str]:
    """Label every box (piece k, row i, column j; all 1-based) column-wise in
    a color-block-wise fashion: plus pieces get "1".."n" and minus pieces get
    "bar1".."barm", each piece's boxes numbered down its columns, left to
    right, in piece order."""
    labels: dict[tuple[int, int, int], str] = {}
    counters = {"+": 0, "-": 0}
    for k, (p, s) in enumerate(mp.pieces, start=1):
        lengths = p.row_lengths()
        for j in range(1, p.num_cols + 1):
            for i in range(1, p.length + 1):
                if lengths[i - 1] >= j:
                    counters[s] += 1
                    labels[(k, i, j)] = (
                        str(counters[s]) if s == "+" else f"bar{counters[s]}"
                    )
    return labels


def pyramid_report(
    mp: SignedMultiPartition, theta: tuple[int, ...] | None = None
) -> PyramidReport:
    """Assemble the pyramid statistics of a signed multi-partition.

    `theta` takes one integer per piece (constant on rows of the same color);
    monotonicity requires strictly decreasing values in piece order, and a
    violating assignment is rejected.  The default assignment r-1, ..., 1, 0
    always passes.
    """
    r = mp.r
    if theta is None:
        theta = tuple(range(r - 1, -1, -1))
    if len(theta) != r:
        raise ValueError(f"theta needs one integer per piece, got {theta}")
    if any(theta[i] <= theta[i + 1] for i in range(r - 1)):
        raise ValueError(f"theta must strictly decrease in piece order: {theta}")

    column_lengths = tuple(p.transpose() for p, _ in mp.pieces)
    num_cols = max(p.num_cols for p, _ in mp.pieces)
    q = {"+": [0] * num_cols, "-": [0] * num_cols}
    for (p, s), cols in zip(mp.pieces, column_lengths):
        for j, h in enumerate(cols):
            q[s][j] += h
    g0 = []
    for a, b in zip(q["+"], q["-"]):
        g0.append(f"gl_{{{a}|{b}}}" if a and b else f"gl_{a or b}")

    labels = box_labels(mp)
    e_support = []
    for k, (p, _) in enumerate(mp.pieces, start=1):
        lengths = p.row_lengths()
        for i in range(1, p.length + 1):
            for j in range(1, lengths[i - 1]):
                e_support.append((labels[(k, i, j)], labels[(k, i, j + 1)]))

    ref = refine(mp)
    return PyramidReport(
        shape=mp,
        column_lengths=column_lengths,
        q_plus=tuple(q["+"]),
        q_minus=tuple(q["-"]),
        g0=tuple(g0),
        levi_blocks=tuple(p.size for p, _ in mp.pieces),
        jordan_type=(ref.lam_plus, ref.lam_minus),
        e_support=tuple(e_support),
        theta=theta,
        theta_ok=True,
        refinement=ref,
    )
