"""The mixed tensor module at a finite entry window.

Elements are sparse Laurent-coefficient combinations of monomials M_f indexed
by integer vectors; the sign sequence fixes which tensor factors are natural
and which are dual.  Quantum-group generators act through the iterated
comultiplication, the Hecke algebra acts on the right within same-sign runs,
and the bar involution is assembled recursively from pairwise quasi-R-matrix
operators whose scalar constants are derived (not assumed) at import time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from .combinatorics import IntVector, bruhat_leq
from .laurent import (
    LaurentPoly,
    ONE,
    ZERO,
    bar,
    exact_divide,
    q_power,
    quantum_factorial,
)


class WindowEscapeError(ValueError):
    """A generator action produced an entry outside the window."""


class TensorElement:
    """A finite Laurent-linear combination of monomials with a fixed sign
    sequence and entry window.  Zero coefficients are never stored."""

    __slots__ = ("signs", "window", "coeffs")

    def __init__(
        self,
        signs: tuple[str, ...],
        window: tuple[int, int],
        coeffs: dict[tuple[int, ...], LaurentPoly] | None = None,
    ):
        self.signs = signs
        self.window = window
        self.coeffs = {f: c for f, c in (coeffs or {}).items() if c}
        lo, hi = window
        for f in self.coeffs:
            if len(f) != len(signs):
                raise ValueError(f"vector {f} does not match sign sequence {signs}")
            if any(not lo <= v <= hi for v in f):
                raise WindowEscapeError(f"vector {f} leaves window {window}")

    @classmethod
    def monomial(
        cls,
        signs: tuple[str, ...],
        window: tuple[int, int],
        f: tuple[int, ...],
        coeff: LaurentPoly = ONE,
    ) -> "TensorElement":
        return cls(signs, window, {f: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.signs == other.signs
            and self.window == other.window
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.coeffs)
        for f, c in other.coeffs.items():
            s = out.get(f, ZERO) + c
            if s:
                out[f] = s
            else:
                out.pop(f, None)
        return TensorElement(self.signs, self.window, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(LaurentPoly({0: -1}))

    def scale(self, c: LaurentPoly) -> "TensorElement":
        if not c:
            return TensorElement(self.signs, self.window)
        return TensorElement(self.signs, self.window, {f: p * c for f, p in self.coeffs.items()})

    def map_coeffs(self, fn) -> "TensorElement":
        return TensorElement(self.signs, self.window, {f: fn(c) for f, c in self.coeffs.items()})

    def weight(self) -> dict[int, int]:
        if self.is_zero():
            raise ValueError("the zero element has no single weight")
        weights = {wt_key(f, self.signs) for f in self.coeffs}
        if len(weights) > 1:
            raise ValueError("element is not weight-homogeneous")
        return dict(weights.pop())

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*M{f}" for f, c in sorted(self.coeffs.items()))
        return body or "0"

    def to_json(self) -> dict:
        return {
            "signs": "".join(self.signs),
            "window": list(self.window),
            "terms": [
                {"f": list(f), "coeff": self.coeffs[f].to_json()}
                for f in sorted(self.coeffs)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "TensorElement":
        return cls(
            tuple(data["signs"]),
            tuple(data["window"]),
            {
                tuple(t["f"]): LaurentPoly.from_json(t["coeff"])
                for t in data["terms"]
            },
        )


@dataclass(frozen=True)
class HeckeWord:
    """A word in the Hecke generators, each index acting inside a same-sign run."""

    generators: tuple[int, ...]

    def validate(self, signs: tuple[str, ...]) -> None:
        for i in self.generators:
            if not 1 <= i <= len(signs) - 1 or signs[i - 1] != signs[i]:
                raise ValueError(f"generator {i} is not valid for signs {signs}")


def wt_key(f: tuple[int, ...], signs: tuple[str, ...]) -> tuple[tuple[int, int], ...]:
    """Hashable form of the signed weight of a monomial."""
    nu: dict[int, int] = {}
    for v, s in zip(f, signs):
        nu[v] = nu.get(v, 0) + (1 if s == "+" else -1)
    return tuple(sorted((a, c) for a, c in nu.items() if c))


# ---------------------------------------------------------------------------
# Quantum-group generator actions (iterated comultiplication).
# ---------------------------------------------------------------------------


def _k_pair_exponent(value: int, sign: str, up: int, down: int) -> int:
    """Eigenvalue exponent of K_up K_down^{-1} on a single factor."""
    e = (value == up) - (value == down)
    return e if sign == "+" else -e


def act_K(a: int, x: TensorElement) -> TensorElement:
    out: dict = {}
    for f, c in x.coeffs.items():
        e = sum((v == a) * (1 if s == "+" else -1) for v, s in zip(f, x.signs))
        out[f] = c * q_power(e)
    return TensorElement(x.signs, x.window, out)


def act_K_inv(a: int, x: TensorElement) -> TensorElement:
    out: dict = {}
    for f, c in x.coeffs.items():
        e = sum((v == a) * (1 if s == "+" else -1) for v, s in zip(f, x.signs))
        out[f] = c * q_power(-e)
    return TensorElement(x.signs, x.window, out)


def act_K_pair(a: int, x: TensorElement) -> TensorElement:
    """K_{a,a+1} = K_a K_{a+1}^{-1}."""
    out: dict = {}
    for f, c in x.coeffs.items():
        e = sum(_k_pair_exponent(v, s, a, a + 1) for v, s in zip(f, x.signs))
        out[f] = c * q_power(e)
    return TensorElement(x.signs, x.window, out)


def _act_raise_lower(a: int, x: TensorElement, kind: str, conjugate: bool) -> TensorElement:
    """Shared body of act_E / act_F.

    The comultiplication puts K_{a,a+1} on the factors to the right of an
    acting E_a and K_{a+1,a} on the factors to the left of an acting F_a.
    `conjugate` swaps those diagonal corrections (the bar of the coproduct),
    which is only needed by the constant-derivation procedure.
    """
    lo, hi = x.window
    acc = TensorElement(x.signs, x.window)
    for f, c in x.coeffs.items():
        for i, (v, s) in enumerate(zip(f, x.signs)):
            if kind == "E":
                src, dst = (a + 1, a) if s == "+" else (a, a + 1)
            else:
                src, dst = (a, a + 1) if s == "+" else (a + 1, a)
            if v != src:
                continue
            if not lo <= dst <= hi:
                raise WindowEscapeError(
                    f"acting on entry {v} at position {i + 1} escapes window {x.window}"
                )
            if kind == "E":
                others, up, down = f[i + 1 :], a, a + 1
                other_signs = x.signs[i + 1 :]
            else:
                others, up, down = f[:i], a + 1, a
                other_signs = x.signs[:i]
            if conjugate:
                up, down = down, up
            e = sum(
                _k_pair_exponent(w, sw, up, down) for w, sw in zip(others, other_signs)
            )
            g = f[:i] + (dst,) + f[i + 1 :]
            acc = acc + TensorElement.monomial(x.signs, x.window, g, c * q_power(e))
    return acc


def act_E(a: int, x: TensorElement) -> TensorElement:
    return _act_raise_lower(a, x, "E", conjugate=False)


def act_F(a: int, x: TensorElement) -> TensorElement:
    return _act_raise_lower(a, x, "F", conjugate=False)


def act_E_divided(a: int, r: int, x: TensorElement) -> TensorElement:
    """E_a^{(r)} = E_a^r / [r]!; non-exact division signals an integrality bug."""
    for _ in range(r):
        x = act_E(a, x)
    fact = quantum_factorial(r)
    return x.map_coeffs(lambda c: exact_divide(c, fact))


def act_F_divided(a: int, r: int, x: TensorElement) -> TensorElement:
    for _ in range(r):
        x = act_F(a, x)
    fact = quantum_factorial(r)
    return x.map_coeffs(lambda c: exact_divide(c, fact))


# ---------------------------------------------------------------------------
# Hecke action.
# ---------------------------------------------------------------------------

Q_MINUS_QINV = LaurentPoly({1: 1, -1: -1})


def hecke_act(i: int, x: TensorElement) -> TensorElement:
    """Right action of H_i; positions i and i+1 must carry the same sign.

    With f' = f*s_i: M_f H_i is q^{-1} M_f on the diagonal, the plain swap
    M_{f'} when f(i) > f(i+1) on a "+" block, and M_{f'} - (q - q^{-1}) M_f
    otherwise; dual blocks use the flipped comparison.  The case assignment
    is the one compatible with the bar involution below (bar(x H_i) =
    bar(x) H_i^{-1}) and with its descent to the q-symmetric quotients.
    """
    if not 1 <= i <= len(x.signs) - 1:
        raise ValueError(f"generator index {i} out of range")
    sign = x.signs[i - 1]
    if sign != x.signs[i]:
        raise ValueError(f"H_{i} straddles a sign change in {x.signs}")
    out = TensorElement(x.signs, x.window)
    for f, c in x.coeffs.items():
        u, v = f[i - 1], f[i]
        g = f[: i - 1] + (v, u) + f[i + 1 :]
        if u == v:
            out = out + TensorElement.monomial(x.signs, x.window, f, c * q_power(-1))
        elif (u > v) == (sign == "+"):
            out = out + TensorElement.monomial(x.signs, x.window, g, c)
        else:
            out = out + TensorElement(
                x.signs, x.window, {g: c, f: -(c * Q_MINUS_QINV)}
            )
    return out


def hecke_act_inverse(i: int, x: TensorElement) -> TensorElement:
    """H_i^{-1} = H_i + (q - q^{-1}), forced by (H_i - q^{-1})(H_i + q) = 0."""
    return hecke_act(i, x) + x.scale(Q_MINUS_QINV)


def hecke_act_word(word, x: TensorElement) -> TensorElement:
    generators = word.generators if isinstance(word, HeckeWord) else tuple(word)
    for i in generators:
        x = hecke_act(i, x)
    return x


def hecke_act_word_inverse(word, x: TensorElement) -> TensorElement:
    """Right action of (H_{i_1} ... H_{i_t})^{-1} = H_{i_t}^{-1} ... H_{i_1}^{-1}."""
    generators = word.generators if isinstance(word, HeckeWord) else tuple(word)
    for i in reversed(generators):
        x = hecke_act_inverse(i, x)
    return x


def inversions(perm: tuple[int, ...]) -> int:
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def reduced_word(perm: tuple[int, ...]) -> tuple[int, ...]:
    """A reduced word (s_{i_1}, ..., s_{i_t}) with s_{i_1}...s_{i_t} = perm.

    `perm` is one-line notation on 1..k.  Sorting the word's target back to
    the identity with adjacent swaps and reversing gives a word of length
    equal to the inversion number, hence reduced.
    """
    arr = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i + 1)
                changed = True
    return tuple(reversed(word))


@cache
def symmetric_group(k: int) -> tuple[tuple[tuple[int, ...], int, tuple[int, ...]], ...]:
    """All permutations of 1..k with inversion number and a reduced word."""
    return tuple(
        (p, inversions(p), reduced_word(p))
        for p in itertools.permutations(range(1, k + 1))
    )


def _symmetrizer_act(x: TensorElement, start: int, k: int, anti: bool) -> TensorElement:
    """Right-multiply by Sym_k (or Ant_k) on positions start..start+k-1."""
    if k == 1:
        return x
    longest = k * (k - 1) // 2
    out = TensorElement(x.signs, x.window)
    for _, length, word in symmetric_group(k):
        shifted = [start - 1 + i for i in word]
        if anti:
            coeff = q_power(length - longest, (-1) ** ((length - longest) % 2))
        else:
            coeff = q_power(longest - length)
        out = out + hecke_act_word(shifted, x).scale(coeff)
    return out


def symmetrize(x: TensorElement, ranges) -> TensorElement:
    """Apply Sym over each (start, size) range; ranges must sit inside
    same-sign blocks and be pairwise disjoint."""
    for start, k in ranges:
        x = _symmetrizer_act(x, start, k, anti=False)
    return x


def antisymmetrize(x: TensorElement, ranges) -> TensorElement:
    for start, k in ranges:
        x = _symmetrizer_act(x, start, k, anti=True)
    return x


# ---------------------------------------------------------------------------
# Bar involution via pairwise quasi-R-matrix operators.
# ---------------------------------------------------------------------------


def _theta_candidates():
    return (Q_MINUS_QINV, -Q_MINUS_QINV)


def _pairwise_theta_terms(
    f: tuple[int, ...],
    i: int,
    j: int,
    signs: tuple[str, ...],
    window: tuple[int, int],
    zeta: dict,
) -> list[tuple[tuple[int, ...], LaurentPoly]]:
    """The correction terms of the pairwise operator on positions i < j
    (0-based) applied to M_f.

    The operator is 1 + sum_{a<b} zeta_{a,b} * (raising of weight
    delta_a-delta_b on factor i) x (matching lowering on factor j); on these
    modules each root acts at most once, and the entries of f determine which
    roots apply.  Because the raising operator reaches factor i through the
    iterated comultiplication, each term also carries the K_a K_b^{-1}
    eigenvalue of every factor strictly between i and j.  For same-sign pairs
    only the root with b - a forced by the entries contributes and
    zeta_{a,b} is the derived simple-root constant;
    for mixed-sign pairs every gap contributes and the constant scales by
    (-q)^{b-a-1} (the non-simple root vectors act through products on these
    modules), which the intertwining relation forces and which makes the
    recursion square to the identity.
    """
    si, sj = signs[i], signs[j]
    z = zeta[(si, sj)]
    vi, vj = f[i], f[j]
    lo, hi = window

    def between(a: int, b: int) -> LaurentPoly:
        e = sum(
            _k_pair_exponent(f[p], signs[p], a, b) for p in range(i + 1, j)
        )
        return q_power(e)

    out = []
    if si == "+" and sj == "+":
        # raise i: b -> a, lower j: a -> b, with a = f(j) < b = f(i).
        if vj < vi:
            g = list(f)
            g[i], g[j] = vj, vi
            out.append((tuple(g), z * between(vj, vi)))
    elif si == "-" and sj == "-":
        # raise i: a -> b, lower j: b -> a, with a = f(i) < b = f(j).
        if vi < vj:
            g = list(f)
            g[i], g[j] = vj, vi
            out.append((tuple(g), z * between(vi, vj)))
    elif si == "+" and sj == "-":
        # raise i: b -> a, lower j: b -> a, with b = f(i) = f(j), any a < b.
        if vi == vj:
            for a in range(lo, vi):
                gap = vi - a
                g = list(f)
                g[i] = g[j] = a
                coeff = z * q_power(gap - 1, (-1) ** (gap - 1)) * between(a, vi)
                out.append((tuple(g), coeff))
    else:
        # raise i: a -> b, lower j: a -> b, with a = f(i) = f(j), any b > a.
        if vi == vj:
            for b in range(vi + 1, hi + 1):
                gap = b - vi
                g = list(f)
                g[i] = g[j] = b
                coeff = z * q_power(gap - 1, (-1) ** (gap - 1)) * between(vi, b)
                out.append((tuple(g), coeff))
    return out


def _check_zeta(si: str, sj: str, z: LaurentPoly) -> bool:
    """Rank-one intertwining check on the two-factor module with entries {0, 1}.

    Demands E_0 Theta = Theta E_0-bar and the F_0 analogue as exact matrix
    identities, where the barred coproduct swaps the diagonal corrections;
    this orientation is the one making the assembled involution commute with
    the quantum-group action.
    """
    signs = (si, sj)
    window = (0, 1)
    zeta = {(si, sj): z}

    def theta(x: TensorElement) -> TensorElement:
        out = dict(x.coeffs)
        for f, c in x.coeffs.items():
            for g, w in _pairwise_theta_terms(f, 0, 1, signs, window, zeta):
                s = out.get(g, ZERO) + c * w
                if s:
                    out[g] = s
                else:
                    out.pop(g, None)
        return TensorElement(signs, window, out)

    for f in itertools.product((0, 1), repeat=2):
        x = TensorElement.monomial(signs, window, f)
        for kind in ("E", "F"):
            try:
                lhs = _act_raise_lower(0, theta(x), kind, conjugate=False)
                rhs = theta(_act_raise_lower(0, x, kind, conjugate=True))
            except WindowEscapeError:
                return False
            if lhs != rhs:
                return False
    return True


@cache
def zeta_constants() -> dict[tuple[str, str], LaurentPoly]:
    """Derive the pairwise quasi-R constants, one per ordered sign pair.

    Exactly one candidate in {q - q^-1, -(q - q^-1)} passes the rank-one
    intertwining check for each pair; ambiguity or no survivor means the
    module actions themselves are broken.
    """
    table = {}
    for si, sj in itertools.product("+-", repeat=2):
        passing = [z for z in _theta_candidates() if _check_zeta(si, sj, z)]
        if len(passing) != 1:
            raise RuntimeError(
                f"constant derivation for sign pair ({si},{sj}) found {len(passing)} candidates"
            )
        table[(si, sj)] = passing[0]
    return table


_psi_cache: dict = {}


def _psi_monomial(
    f: tuple[int, ...], signs: tuple[str, ...], window: tuple[int, int]
) -> dict[tuple[int, ...], LaurentPoly]:
    """The bar image of M_f (factorwise bar is the identity on monomials),
    built one factor at a time: extend by the next factor, then apply the
    pairwise operators against it from the farthest factor inward (the
    ordering, like the constants, is validated rather than assumed: the
    opposite ordering fails bar^2 = id on three mixed-sign factors)."""
    key = (f, signs, window)
    cached = _psi_cache.get(key)
    if cached is not None:
        return cached
    zeta = zeta_constants()
    cur: dict[tuple[int, ...], LaurentPoly] = {(f[0],): ONE}
    for t in range(1, len(f)):
        cur = {key_ + (f[t],): c for key_, c in cur.items()}
        sub_signs = signs[: t + 1]
        for i in range(t):
            nxt = dict(cur)
            for g, c in cur.items():
                for h, w in _pairwise_theta_terms(g, i, t, sub_signs, window, zeta):
                    s = nxt.get(h, ZERO) + c * w
                    if s:
                        nxt[h] = s
                    else:
                        nxt.pop(h, None)
            cur = nxt
    _psi_cache[key] = cur
    return cur


def bar_involution(x: TensorElement) -> TensorElement:
    """The bar involution: anti-linear, involutive, and triangular with
    respect to the Bruhat order on monomial indices."""
    out: dict[tuple[int, ...], LaurentPoly] = {}
    for f, c in x.coeffs.items():
        cbar = bar(c)
        for g, w in _psi_monomial(f, x.signs, x.window).items():
            s = out.get(g, ZERO) + cbar * w
            if s:
                out[g] = s
            else:
                out.pop(g, None)
    return TensorElement(x.signs, x.window, out)


# ---------------------------------------------------------------------------
# Weight blocks.
# ---------------------------------------------------------------------------


def linear_extension(
    vectors: list[tuple[int, ...]], signs: tuple[str, ...]
) -> list[tuple[int, ...]]:
    """A deterministic linear extension of the Bruhat order: repeatedly emit
    the lexicographically smallest remaining minimal element."""
    remaining = sorted(vectors)
    out = []
    while remaining:
        for idx, f in enumerate(remaining):
            fv = IntVector(f, signs)
            if not any(
                g != f and bruhat_leq(IntVector(g, signs), fv) for g in remaining
            ):
                out.append(f)
                del remaining[idx]
                break
    return out


def weight_block(
    signs: tuple[str, ...], window: tuple[int, int], mu: dict[int, int]
) -> list[tuple[int, ...]]:
    """All monomial indices in the window of signed weight mu, sorted by a
    fixed linear extension of the Bruhat order."""
    lo, hi = window
    target = tuple(sorted((a, c) for a, c in mu.items() if c))
    hits = [
        f
        for f in itertools.product(range(lo, hi + 1), repeat=len(signs))
        if wt_key(f, signs) == target
    ]
    return linear_extension(hits, signs)
