"""Standard and dual canonical bases of the row-symmetric and polynomial
tensor modules.

S^(lambda,epsilon)(V) is the quotient of the tensor module by the row
symmetrizer kernels; its monomial basis Pi_A is indexed by Row multi-tableaux
and `straighten` computes the quotient map in those coordinates.
P^(lambda,epsilon)(V) sits inside S via the per-piece intertwiner `xi_V`
applied to exterior monomials; its standard basis Delta_A is indexed by Std
multi-tableaux.  The generic triangular solver `dcb_solve` produces every
dual canonical basis in the package, and the two cross-check oracles
(`sym_ideal_dcb` for the symmetrizer-ideal identification of S, the (a)/(b)
route comparison inside `dcb_P`) tie the layers together.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import (
    MultiTableau,
    SignedMultiPartition,
    enumerate_tableaux,
    multi_tableau_from_row_reading,
)
from .laurent import (
    LaurentPoly,
    ONE,
    ZERO,
    antisym_solve,
    bar as bar_q,
    exact_divide,
    mirror,
    q_power,
)
from .tensor_space import (
    TensorElement,
    antisymmetrize,
    bar_involution,
    hecke_act_word,
    hecke_act_word_inverse,
    linear_extension,
    reduced_word,
    symmetrize,
    weight_block,
    wt_key,
)

#: The frozen realization of the braiding word in `xi_V`: "direct" applies
#: H_{sigma_lambda} along a reduced word of the column-to-row shuffle, "alt"
#: applies the inverse word of the inverse shuffle.  "direct" passes the full
#: validation suite (Std-nonvanishing, classical-limit identity, route
#: agreement) and is the active convention.
BRAIDING_CONVENTION = "direct"


class RouteDisagreement(RuntimeError):
    """The two dcb_P computation routes produced different matrices."""


# ---------------------------------------------------------------------------
# Module elements.
# ---------------------------------------------------------------------------


def _merged(a: dict, b: dict, scale: LaurentPoly = ONE) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, ZERO) + v * scale
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


@dataclass(frozen=True)
class SElement:
    """A finite Laurent-linear combination of Pi_A, A in Row(lambda,epsilon)."""

    shape: SignedMultiPartition
    window: tuple[int, int]
    coeffs: dict[MultiTableau, LaurentPoly]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {k: c for k, c in self.coeffs.items() if c}
        )
        for k in self.coeffs:
            if not k.is_row():
                raise ValueError(f"SElement key is not a Row multi-tableau: {k}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "SElement") -> "SElement":
        return SElement(self.shape, self.window, _merged(self.coeffs, other.coeffs))

    def scale(self, c: LaurentPoly) -> "SElement":
        return SElement(self.shape, self.window, {k: v * c for k, v in self.coeffs.items()})

    def map_coeffs(self, fn) -> "SElement":
        return SElement(self.shape, self.window, {k: fn(c) for k, c in self.coeffs.items()})

    def to_tensor(self) -> TensorElement:
        """Lift through the monomial section A -> M_{rho(A)}."""
        signs = self.shape.sign_sequence()
        out = TensorElement(signs, self.window)
        for mt, c in self.coeffs.items():
            out = out + TensorElement.monomial(signs, self.window, mt.row_reading(), c)
        return out

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "window": list(self.window),
            "terms": [
                {"tableau": tableau_json(mt), "coeff": self.coeffs[mt].to_json()}
                for mt in sorted(self.coeffs, key=lambda m: m.row_reading())
            ],
        }


@dataclass(frozen=True)
class PElement:
    """A finite Laurent-linear combination of Delta_A, A in Std(lambda,epsilon)."""

    shape: SignedMultiPartition
    window: tuple[int, int]
    coeffs: dict[MultiTableau, LaurentPoly]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {k: c for k, c in self.coeffs.items() if c}
        )
        for k in self.coeffs:
            if not k.is_std():
                raise ValueError(f"PElement key is not a Std multi-tableau: {k}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "PElement") -> "PElement":
        return PElement(self.shape, self.window, _merged(self.coeffs, other.coeffs))

    def scale(self, c: LaurentPoly) -> "PElement":
        return PElement(self.shape, self.window, {k: v * c for k, v in self.coeffs.items()})

    def to_s(self) -> SElement:
        """Expand through the standard basis into Pi-coordinates."""
        out = SElement(self.shape, self.window, {})
        for mt, c in self.coeffs.items():
            out = out + delta(mt, self.window).scale(c)
        return out

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "window": list(self.window),
            "terms": [
                {"tableau": tableau_json(mt), "coeff": self.coeffs[mt].to_json()}
                for mt in sorted(self.coeffs, key=lambda m: m.row_reading())
            ],
        }


def tableau_json(mt: MultiTableau) -> list:
    """Serialize a multi-tableau as row lists per component."""
    return [[list(row) for row in t.rows] for t in mt.components]


def _label_json(label) -> list:
    if isinstance(label, MultiTableau):
        return tableau_json(label)
    return list(label)


# ---------------------------------------------------------------------------
# The triangular block and the dual-canonical-basis solver.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangularBlock:
    """One weight block of a standard basis with its bar and canonical data.

    `order` is a fixed linear extension of the block's partial order,
    increasing left to right.  `bar_rows[t]` expands the bar image of the
    standard basis element at t over the standard basis; `canon[t]` holds
    the solved dual canonical element, populated by `dcb_solve`.
    """

    space: str  # "t", "s", "p", or "wedge"
    order: tuple
    bar_rows: dict
    canon: dict = field(default_factory=dict)

    def is_solved(self) -> bool:
        return bool(self.canon) or not self.order

    def matrix(self) -> list[list[LaurentPoly]]:
        """The canonical matrix with entry [i][j] = coefficient of basis
        element order[i] inside the canonical element at order[j]."""
        return [
            [self.canon[t].get(g, ZERO) for t in self.order] for g in self.order
        ]

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "order": [_label_json(t) for t in self.order],
            "bar": _sparse_json(self.order, self.bar_rows),
            "canonical": _sparse_json(self.order, self.canon),
        }

    def to_latex(self) -> str:
        """The canonical matrix as a LaTeX tabular, rows and columns in order."""
        cols = "l|" + "r" * len(self.order)
        lines = [f"\\begin{{tabular}}{{{cols}}}"]
        header = " & ".join(str(t) for t in self.order)
        lines.append(f" & {header} \\\\ \\hline")
        for g in self.order:
            cells = " & ".join(
                f"${self.canon[t].get(g, ZERO)}$" for t in self.order
            )
            lines.append(f"{g} & {cells} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)


def _sparse_json(order, rows) -> list:
    pos = {t: i for i, t in enumerate(order)}
    out = []
    for j, t in enumerate(order):
        for g, c in sorted(rows.get(t, {}).items(), key=lambda kv: pos[kv[0]]):
            out.append([pos[g], j, c.to_json()])
    return out


def dcb_solve(block: TriangularBlock) -> TriangularBlock:
    """Solve for the dual canonical basis of a triangular block.

    For each index t in increasing order, start from the standard basis
    element, repeatedly cancel the maximal term of bar(X) - X with an
    `antisym_solve` correction, and stop at the unique bar-invariant element
    with unitriangular, strictly-lower q^-1-lattice coordinates.
    """
    pos = {t: i for i, t in enumerate(block.order)}
    canon: dict = {}
    for t in block.order:
        x = {t: ONE}
        while True:
            d: dict = {}
            for g, c in x.items():
                d = _merged(d, block.bar_rows[g], bar_q(c))
            d = _merged(d, x, -ONE)
            if not d:
                break
            g = max(d, key=lambda k: pos[k])
            if pos[g] >= pos[t]:
                raise RuntimeError(
                    f"bar matrix is not unitriangular at {t}: defect at {g}"
                )
            x = _merged(x, {g: antisym_solve(d[g])})
        canon[t] = x
    return TriangularBlock(block.space, block.order, block.bar_rows, canon)


# ---------------------------------------------------------------------------
# Straightening onto S and its bar involution.
# ---------------------------------------------------------------------------


def row_segments(shape: SignedMultiPartition) -> list[tuple[int, int, str]]:
    """(start offset, length, sign) for every pyramid row in reading order."""
    segs, pos = [], 0
    for p, s in shape.pieces:
        for length in p.row_lengths():
            segs.append((pos, length, s))
            pos += length
    return segs


def row_ranges(shape: SignedMultiPartition) -> list[tuple[int, int]]:
    """1-based (start, length) symmetrizer ranges for rows of length > 1."""
    return [(pos + 1, length) for pos, length, _ in row_segments(shape) if length > 1]


def straighten(x: TensorElement, shape: SignedMultiPartition) -> SElement:
    """The quotient map pi onto S^(lambda,epsilon)(V) in Pi-coordinates.

    Each monomial index is sorted to the row normal form (weakly increasing
    on + rows, weakly decreasing on - rows) and picks up q to the number of
    strict within-row inversions, matching pi(x H_i) = q^-1 pi(x) under the
    frozen Hecke action.
    """
    if x.signs != shape.sign_sequence():
        raise ValueError("sign sequence of the element does not match the shape")
    segs = row_segments(shape)
    out: dict[MultiTableau, LaurentPoly] = {}
    for f, c in x.coeffs.items():
        inv = 0
        sorted_f = list(f)
        for start, length, s in segs:
            seg = list(f[start : start + length])
            for i in range(length):
                for j in range(i + 1, length):
                    if (seg[i] > seg[j]) if s == "+" else (seg[i] < seg[j]):
                        inv += 1
            sorted_f[start : start + length] = sorted(seg, reverse=(s == "-"))
        key = multi_tableau_from_row_reading(shape, tuple(sorted_f))
        coeff = out.get(key, ZERO) + c * q_power(inv)
        if coeff:
            out[key] = coeff
        else:
            out.pop(key, None)
    return SElement(shape, x.window, out)


def bar_S(x: SElement) -> SElement:
    """The bar involution of S: lift through the monomial section, apply the
    tensor bar involution, and straighten back."""
    return straighten(bar_involution(x.to_tensor()), x.shape)


# ---------------------------------------------------------------------------
# Weight blocks and dual canonical bases of T and S.
# ---------------------------------------------------------------------------


def signed_weight_key(values: tuple[int, ...], signs: tuple[str, ...]):
    return wt_key(values, signs)


def weight_blocks(
    shape: SignedMultiPartition, window: tuple[int, int], kind: str
) -> list[tuple[dict[int, int], list[MultiTableau]]]:
    """Split the tableaux of a kind into signed-weight blocks, each ordered
    by the fixed linear extension of the Bruhat order on readings."""
    signs = shape.sign_sequence()
    tabs = enumerate_tableaux(shape, kind, window)
    reading = (
        (lambda mt: mt.column_reading()) if kind == "col" else (lambda mt: mt.row_reading())
    )
    buckets: dict[tuple, list[MultiTableau]] = {}
    for mt in tabs:
        buckets.setdefault(wt_key(reading(mt), signs), []).append(mt)
    out = []
    for key in sorted(buckets):
        block = buckets[key]
        ext = linear_extension([reading(mt) for mt in block], signs)
        block.sort(key=lambda mt: ext.index(reading(mt)))
        out.append((dict(key), block))
    return out


def dcb_T(
    signs: tuple[str, ...], window: tuple[int, int], mu: dict[int, int]
) -> TriangularBlock:
    """The dual canonical basis of one weight block of the tensor module."""
    order = weight_block(signs, window, mu)
    bar_rows = {
        f: dict(bar_involution(TensorElement.monomial(signs, window, f)).coeffs)
        for f in order
    }
    return dcb_solve(TriangularBlock("t", tuple(order), bar_rows))


def dcb_S(
    shape: SignedMultiPartition, window: tuple[int, int], mu: dict[int, int]
) -> TriangularBlock:
    """The dual canonical basis {L_A} of one weight block of S, over Row
    multi-tableaux in Pi-coordinates."""
    signs = shape.sign_sequence()
    target = tuple(sorted((a, c) for a, c in mu.items() if c))
    block = [
        mt
        for mt in enumerate_tableaux(shape, "row", window)
        if wt_key(mt.row_reading(), signs) == target
    ]
    ext = linear_extension([mt.row_reading() for mt in block], signs)
    block.sort(key=lambda mt: ext.index(mt.row_reading()))
    bar_rows = {mt: bar_S(pi_monomial(shape, window, mt)).coeffs for mt in block}
    return dcb_solve(TriangularBlock("s", tuple(block), bar_rows))


def pi_monomial(
    shape: SignedMultiPartition, window: tuple[int, int], mt: MultiTableau
) -> SElement:
    """The basis element Pi_A as an SElement."""
    return SElement(shape, window, {mt: ONE})


def sym_ideal_dcb(
    shape: SignedMultiPartition, window: tuple[int, int], mu: dict[int, int]
) -> TriangularBlock:
    """The dual canonical basis of the same block computed entirely inside
    the symmetrizer right ideal of the tensor module.

    Basis elements are M_{rho(A)} Sym; their bar images are expanded back in
    that basis by leading-coset elimination in raw tensor coordinates, with
    no use of `straighten`.  Under the identification Pi_A = M_{rho(A)} Sym
    the result must coincide with `dcb_S`, which is the identification
    oracle for the quotient construction.
    """
    signs = shape.sign_sequence()
    ranges = row_ranges(shape)
    target = tuple(sorted((a, c) for a, c in mu.items() if c))
    block = [
        mt
        for mt in enumerate_tableaux(shape, "row", window)
        if wt_key(mt.row_reading(), signs) == target
    ]
    ext = linear_extension([mt.row_reading() for mt in block], signs)
    block.sort(key=lambda mt: ext.index(mt.row_reading()))
    ideal = {
        mt: symmetrize(
            TensorElement.monomial(signs, window, mt.row_reading()), ranges
        )
        for mt in block
    }

    def coords(x: TensorElement) -> dict[MultiTableau, LaurentPoly]:
        y = dict(x.coeffs)
        out: dict[MultiTableau, LaurentPoly] = {}
        for mt in reversed(block):
            c = y.get(mt.row_reading())
            if not c:
                continue
            co = exact_divide(c, ideal[mt].coeffs[mt.row_reading()])
            out[mt] = co
            for f, v in ideal[mt].coeffs.items():
                s = y.get(f, ZERO) - v * co
                if s:
                    y[f] = s
                else:
                    y.pop(f, None)
        if y:
            raise RuntimeError(f"element does not lie in the symmetrizer ideal: {y}")
        return out

    bar_rows = {mt: coords(bar_involution(ideal[mt])) for mt in block}
    return dcb_solve(TriangularBlock("s", tuple(block), bar_rows))


# ---------------------------------------------------------------------------
# The polynomial side: kappa, xi_V, Delta.
# ---------------------------------------------------------------------------


def kappa(bfA: MultiTableau, window: tuple[int, int]) -> TensorElement:
    """The exterior monomial K_A = M_{c(A) w} Ant over the column ranges,
    with w the longest element of the column Young subgroup."""
    if not bfA.is_col():
        raise ValueError(f"kappa requires a Col multi-tableau, got {bfA}")
    signs = bfA.shape.sign_sequence()
    base, ranges, pos = [], [], 0
    for t in bfA.components:
        for col in t.columns():
            seg = list(col)[::-1]
            base.extend(seg)
            if len(seg) > 1:
                ranges.append((pos + 1, len(seg)))
            pos += len(seg)
    return antisymmetrize(
        TensorElement.monomial(signs, window, tuple(base)), ranges
    )


def shuffle_permutation(shape_piece) -> tuple[int, ...]:
    """One-line permutation whose j-th row-reading position holds the j-th
    column-reading box of the pyramid."""
    lengths = shape_piece.row_lengths()
    ids, k = {}, 0
    for j in range(shape_piece.num_cols):
        for i in range(shape_piece.length):
            if lengths[i] > j:
                k += 1
                ids[(i, j)] = k
    return tuple(
        ids[(i, j)] for i in range(shape_piece.length) for j in range(lengths[i])
    )


def _braiding_word_apply(bfA: MultiTableau, x: TensorElement, convention: str) -> TensorElement:
    pos = 0
    for t in bfA.components:
        perm = shuffle_permutation(t.shape)
        if convention == "direct":
            word = [pos + g for g in reduced_word(perm)]
            x = hecke_act_word(word, x)
        elif convention == "alt":
            inverse = tuple(perm.index(v) + 1 for v in range(1, len(perm) + 1))
            word = [pos + g for g in reduced_word(inverse)]
            x = hecke_act_word_inverse(word, x)
        else:
            raise ValueError(f"unknown braiding convention: {convention}")
        pos += t.shape.size
    return x


def xi_raw(
    bfA: MultiTableau,
    window: tuple[int, int],
    convention: str = BRAIDING_CONVENTION,
) -> SElement:
    """The unnormalized intertwiner image: straighten the braiding word
    applied to kappa(A).  Coefficients live in the q-lattice; `xi_V` rescales
    them through the mirror involution."""
    return straighten(
        _braiding_word_apply(bfA, kappa(bfA, window), convention), bfA.shape
    )


def xi_V(
    bfA: MultiTableau,
    window: tuple[int, int],
    convention: str = BRAIDING_CONVENTION,
) -> SElement:
    """V_A for a Col multi-tableau: the braided image of K_A in S, with every
    Pi-coordinate rewritten by the mirror involution q -> -q^-1.

    The mirror rewrite normalizes V_A to a unitriangular q^-1-lattice
    element over Std leading terms; the classical specialization of the
    alternating-sum identity then sits at q = -1.
    """
    return xi_raw(bfA, window, convention).map_coeffs(mirror)


def delta(
    bfA: MultiTableau,
    window: tuple[int, int],
    convention: str = BRAIDING_CONVENTION,
) -> SElement:
    """The standard basis element Delta_A of P in Pi-coordinates: the tensor
    product of the per-piece V images, computed as one joint pipeline."""
    if not bfA.is_std():
        raise ValueError(f"delta requires a Std multi-tableau, got {bfA}")
    return xi_V(bfA, window, convention)


def delta_block(
    shape: SignedMultiPartition,
    window: tuple[int, int],
    mu: dict[int, int],
    convention: str = BRAIDING_CONVENTION,
) -> tuple[list[MultiTableau], dict[MultiTableau, SElement]]:
    """The Std labels of one signed-weight block in linear-extension order,
    with their Delta expansions."""
    signs = shape.sign_sequence()
    target = tuple(sorted((a, c) for a, c in mu.items() if c))
    block = [
        mt
        for mt in enumerate_tableaux(shape, "std", window)
        if wt_key(mt.row_reading(), signs) == target
    ]
    ext = linear_extension([mt.row_reading() for mt in block], signs)
    block.sort(key=lambda mt: ext.index(mt.row_reading()))
    return block, {mt: delta(mt, window, convention) for mt in block}


def delta_coords(
    x: SElement,
    deltas: dict[MultiTableau, SElement],
    order: list[MultiTableau],
) -> dict[MultiTableau, LaurentPoly]:
    """Delta-coordinates of an S element by triangular elimination on the
    Std leading terms, in decreasing block order.

    The Std coordinates determine the element of P uniquely; support left
    outside the Std pivots after elimination is the completion tail of the
    finite window and carries no Delta-coordinate, so it is dropped.  A
    non-divisible pivot signals a broken braiding convention.
    """
    y = dict(x.coeffs)
    coords: dict[MultiTableau, LaurentPoly] = {}
    for t in reversed(order):
        c = y.get(t)
        if not c:
            continue
        co = exact_divide(c, deltas[t].coeffs[t])
        coords[t] = co
        y = _merged(y, deltas[t].coeffs, -ONE * co)
    return coords


def dcb_P(
    shape: SignedMultiPartition,
    window: tuple[int, int],
    mu: dict[int, int],
    convention: str = BRAIDING_CONVENTION,
) -> TriangularBlock:
    """The dual canonical basis {L_A} of one weight block of P, over Std
    multi-tableaux in Delta-coordinates.

    Route (a) pushes bar_S through the Delta expansion and solves the
    triangular system; route (b) re-expresses the dcb_S elements at Std
    labels.  Both are computed and compared; a mismatch raises
    `RouteDisagreement`.
    """
    order, deltas = delta_block(shape, window, mu, convention)
    bar_rows = {
        mt: delta_coords(bar_S(deltas[mt]), deltas, order) for mt in order
    }
    solved = dcb_solve(TriangularBlock("p", tuple(order), bar_rows))
    ls = dcb_S(shape, window, mu)
    for mt in order:
        s_elem = SElement(shape, window, dict(ls.canon[mt]))
        route_b = delta_coords(s_elem, deltas, order)
        if route_b != solved.canon[mt]:
            raise RouteDisagreement(
                f"dcb_P routes disagree at {mt}: "
                f"(a) {solved.canon[mt]} vs (b) {route_b}"
            )
    return solved


# ---------------------------------------------------------------------------
# The exterior-side dual canonical basis and the nonvanishing theorem.
# ---------------------------------------------------------------------------


def dcb_wedge(
    shape: SignedMultiPartition, window: tuple[int, int], mu: dict[int, int]
) -> TriangularBlock:
    """The dual canonical basis of one weight block of the exterior module,
    over Col multi-tableaux in K-coordinates.

    Bar images of the kappa basis are expanded by leading-term elimination
    at the column readings; the resulting matrix is rewritten entrywise by
    the mirror involution, which keeps it involutive and unitriangular and
    matches the normalization of `xi_V`.
    """
    signs = shape.sign_sequence()
    target = tuple(sorted((a, c) for a, c in mu.items() if c))
    block = [
        mt
        for mt in enumerate_tableaux(shape, "col", window)
        if wt_key(mt.column_reading(), signs) == target
    ]
    ext = linear_extension([mt.column_reading() for mt in block], signs)
    block.sort(key=lambda mt: ext.index(mt.column_reading()))
    kap = {mt: kappa(mt, window) for mt in block}

    def coords(x: TensorElement) -> dict[MultiTableau, LaurentPoly]:
        y = dict(x.coeffs)
        out: dict[MultiTableau, LaurentPoly] = {}
        for mt in reversed(block):
            c = y.get(mt.column_reading())
            if not c:
                continue
            co = exact_divide(c, kap[mt].coeffs[mt.column_reading()])
            out[mt] = co
            for f, v in kap[mt].coeffs.items():
                s = y.get(f, ZERO) - v * co
                if s:
                    y[f] = s
                else:
                    y.pop(f, None)
        if y:
            raise RuntimeError(f"bar image leaves the kappa span: {y}")
        return out

    bar_rows = {
        mt: {g: mirror(c) for g, c in coords(bar_involution(kap[mt])).items()}
        for mt in block
    }
    return dcb_solve(TriangularBlock("wedge", tuple(block), bar_rows))


def xi_wedge_images(
    shape: SignedMultiPartition,
    window: tuple[int, int],
    convention: str = BRAIDING_CONVENTION,
) -> dict[MultiTableau, SElement]:
    """The xi image of every exterior dual canonical basis element.

    The image at label A vanishes exactly when A is not Std; the surviving
    images form the dual canonical basis of P inside S.
    """
    out: dict[MultiTableau, SElement] = {}
    for mu, block in weight_blocks(shape, window, "col"):
        solved = dcb_wedge(shape, window, mu)
        images = {mt: xi_V(mt, window, convention) for mt in block}
        for mt in block:
            acc = SElement(shape, window, {})
            for g, c in solved.canon[mt].items():
                acc = acc + images[g].scale(c)
            out[mt] = acc
    return out
