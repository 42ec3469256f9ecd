"""Root sequences and curve/divisor arithmetic for one minuscule Schubert variety.

From a reduced, coset-minimal word (g_1, ..., g_n) for a minuscule quotient
W / W_P we form the twisted letters b_i = invol(g_i) and the root sequence

    a_1 = b_1,   a_i = s_{b_1} ... s_{b_{i-1}}(b_i),

and read every intersection number of the resolution tower off the two
pairing tables <a_i^vee, a_j> and <b_i^vee, b_j>.  Curve classes are integer
vectors in the [C_1..C_n] basis, divisor-side vectors are intersection
numbers against the xi_1..xi_n basis.  All operation indices are 1-based.

Identities that are theorems under the preconditions (positivity, the <= 2
bound, the forced last letter, the reconstruction symmetry, the delta
duality of the hat classes) are checked eagerly and raise InvariantViolation
on failure: a violation means a bug or a precondition slipped past
validation, never a legitimate state.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvariantViolation
from .root_system import Root, RootSystem, Weight, classify_minuscule
from .weyl import (
    Word,
    _column_negative,
    _identity,
    _mat_mul,
    _simple_matrices,
    coset_length,
    element_of,
    length,
    minuscule_parabolic,
    weyl_involution,
)

CurveClass = tuple[int, ...]
DivisorVector = tuple[int, ...]


def alpha_sequence(rs: RootSystem, beta: Word) -> tuple[Root, ...]:
    """Roots a_i = s_{b_1} ... s_{b_{i-1}}(b_i) for any letter sequence."""
    mats = _simple_matrices(rs)
    prefix = _identity(rs.rank)
    out = []
    for b in beta:
        rs._check_index(b)
        out.append(tuple(row[b - 1] for row in prefix))
        prefix = _mat_mul(prefix, mats[b - 1])
    return tuple(out)


@dataclass(frozen=True)
class BottSamelsonData:
    """Everything the curve computations need for one resolution tower."""

    rs: RootSystem
    weight_index: int
    gamma: Word
    beta: Word
    alpha: tuple[Root, ...]
    pair_alpha: tuple[tuple[int, ...], ...]
    pair_beta: tuple[tuple[int, ...], ...]
    special_root: int
    contracted: frozenset[int]

    @property
    def n(self) -> int:
        return len(self.gamma)

    def _check_pos(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range [1, {self.n}]")

    # -- intersection numbers ------------------------------------------------

    def c_dot_xi(self, i: int, j: int) -> int:
        """[C_i] . xi_j: zero below the diagonal, one on it, <b_i^vee, b_j> above."""
        self._check_pos(i)
        self._check_pos(j)
        if i > j:
            return 0
        if i == j:
            return 1
        return self.pair_beta[i - 1][j - 1]

    def chow_pairing_oracle(self, i: int, j: int, max_window: int = 20) -> int:
        """[C_i] . xi_j for i < j by brute-force chain summation.

        Enumerates every strictly increasing index chain i = i_0 < ... < i_k = j
        and sums (-1)^k times the product of consecutive <a^vee, a> pairings,
        independently of the closed form in :meth:`c_dot_xi`.
        """
        self._check_pos(i)
        self._check_pos(j)
        if i >= j:
            raise ValueError(f"oracle needs i < j, got ({i}, {j})")
        if j - i > max_window:
            raise ValueError(
                f"chain window {j - i} exceeds the bound {max_window}; "
                f"2^{j - i - 1} chains would be enumerated"
            )
        pa = self.pair_alpha
        interior = range(i + 1, j)
        total = 0
        for size in range(0, j - i):
            sign = -1 if size % 2 == 0 else 1  # k = size + 1 links
            for mids in combinations(interior, size):
                chain = (i, *mids, j)
                prod = 1
                for u, v in zip(chain, chain[1:]):
                    prod *= pa[u - 1][v - 1]
                    if not prod:
                        break
                total += sign * prod
        return total

    def tangent_class(self, j: int) -> DivisorVector:
        """Class of the j-th relative tangent sheaf in the xi basis."""
        self._check_pos(j)
        return tuple(
            self.pair_alpha[k][j - 1] if k < j else 0 for k in range(self.n)
        )

    def c_dot_tangent(self, i: int, j: int) -> int:
        """[C_i] . T_j: zero below the diagonal, <b_i^vee, b_j> on and above."""
        self._check_pos(i)
        self._check_pos(j)
        if i > j:
            return 0
        return self.pair_beta[i - 1][j - 1]

    def line_bundle_class(self, lam: Weight) -> DivisorVector:
        """Expansion of the weight-lam line bundle over the xi basis."""
        if len(lam) != self.rs.rank:
            raise ValueError(f"weight has length {len(lam)}, expected {self.rs.rank}")
        return tuple(self.rs.weight_pairing(a, lam) for a in self.alpha)

    # -- curve classes -------------------------------------------------------

    def next_same_beta(self, j: int) -> int | None:
        """Smallest index > j carrying the same letter b, if any."""
        self._check_pos(j)
        for k in range(j + 1, self.n + 1):
            if self.beta[k - 1] == self.beta[j - 1]:
                return k
        return None

    def prev_same_beta(self, j: int) -> int | None:
        """Largest index < j carrying the same letter b, if any."""
        self._check_pos(j)
        for k in range(j - 1, 0, -1):
            if self.beta[k - 1] == self.beta[j - 1]:
                return k
        return None

    def tilde_curve(self, j: int) -> CurveClass:
        """[C_j] - [C_{n(j)}] when a later equal letter exists, else [C_j].

        These classes generate the cone of effective curves of the tower.
        """
        self._check_pos(j)
        a = [0] * self.n
        a[j - 1] = 1
        nj = self.next_same_beta(j)
        if nj is not None:
            a[nj - 1] = -1
        return tuple(a)

    def hat_curve(self, i: int) -> CurveClass:
        """The xi-dual basis class: 1 at i and <a_i^vee, a_k> for k > i."""
        self._check_pos(i)
        a = [0] * self.n
        a[i - 1] = 1
        for k in range(i + 1, self.n + 1):
            a[k - 1] = self.pair_alpha[i - 1][k - 1]
        c = tuple(a)
        for j in range(1, self.n + 1):
            got = self.class_dot_xi(c, j)
            want = 1 if j == i else 0
            if got != want:
                raise InvariantViolation(
                    f"hat class {i} pairs with xi_{j} to {got}, expected {want}"
                )
        return c

    def gamma_curve(self, x: int, i: int) -> CurveClass:
        """Difference of hat classes covering the contracted divisor at x.

        Requires x contracted and <a_i^vee, a_x> = 1; the result pairs with
        xi_x to -1, with the other xi_j to delta_{ij}, and has image degree 0.
        """
        self._check_pos(x)
        self._check_pos(i)
        if x not in self.contracted:
            raise ValueError(f"index {x} is not a contracted divisor")
        p = self.pair_alpha[i - 1][x - 1]
        if p != 1:
            raise ValueError(f"<a_{i}^vee, a_{x}> = {p}, expected 1")
        hat_i = self.hat_curve(i)
        hat_x = self.hat_curve(x)
        c = tuple(u - v for u, v in zip(hat_i, hat_x))
        for j in range(1, self.n + 1):
            got = self.class_dot_xi(c, j)
            want = (1 if j == i else 0) - (1 if j == x else 0)
            if got != want:
                raise InvariantViolation(
                    f"gamma class ({x}, {i}) pairs with xi_{j} to {got}, expected {want}"
                )
        if self.curve_degree(c) != 0:
            raise InvariantViolation(
                f"gamma class ({x}, {i}) has nonzero image degree {self.curve_degree(c)}"
            )
        return c

    def curve_degree(self, c: CurveClass) -> int:
        """Image degree of a curve class: the surviving coefficient sum.

        Only the curves whose letter equals the forced last letter survive
        the resolution, and they all map onto the same degree-one line.
        """
        if len(c) != self.n:
            raise ValueError(f"class has length {len(c)}, expected {self.n}")
        return sum(
            a for a, b in zip(c, self.beta) if b == self.special_root
        )

    def class_dot_xi(self, c: CurveClass, j: int) -> int:
        """Pair an arbitrary curve class against xi_j."""
        if len(c) != self.n:
            raise ValueError(f"class has length {len(c)}, expected {self.n}")
        self._check_pos(j)
        return sum(a * self.c_dot_xi(k, j) for k, a in enumerate(c, start=1) if a)

    def class_dot_tangent(self, c: CurveClass, j: int) -> int:
        """Pair an arbitrary curve class against T_j."""
        if len(c) != self.n:
            raise ValueError(f"class has length {len(c)}, expected {self.n}")
        self._check_pos(j)
        return sum(a * self.c_dot_tangent(k, j) for k, a in enumerate(c, start=1) if a)

    def to_dict(self) -> dict:
        """The documented JSON shape: plain ints and lists only."""
        return {
            "family": self.rs.family,
            "rank": self.rs.rank,
            "weight": self.weight_index,
            "gamma": list(self.gamma),
            "beta": list(self.beta),
            "alpha": [list(a) for a in self.alpha],
            "pair_alpha": [list(r) for r in self.pair_alpha],
            "pair_beta": [list(r) for r in self.pair_beta],
            "special_root": self.special_root,
            "contracted": sorted(self.contracted),
        }


def _validate_word(rs: RootSystem, k: int, gamma: Word) -> None:
    flags = {idx: m for idx, m, _ in classify_minuscule(rs)}
    if not flags[k]:
        raise ValueError(f"weight {k} of {rs.family}{rs.rank} is not minuscule")
    for g in gamma:
        rs._check_index(g)
    for p in range(1, len(gamma) + 1):
        got = length(rs, gamma[:p])
        if got != p:
            raise ValueError(
                f"word is not reduced: prefix {gamma[:p]} has length {got} < {p}"
            )
    m, _ = element_of(rs, gamma)
    for j in sorted(minuscule_parabolic(rs, k)):
        if _column_negative(m, j - 1):
            raise ValueError(
                f"word is not minimal in its coset: the element sends alpha_{j} "
                f"negative although s_{j} generates the parabolic"
            )


def build(rs: RootSystem, weight_index: int, gamma: Word) -> BottSamelsonData:
    """Validate the word, build both root sequences and all pairing tables.

    >>> from minuscule.root_system import build_root_system
    >>> bs = build(build_root_system("A", 2), 1, (2, 1))
    >>> bs.beta, bs.alpha, bs.special_root
    ((1, 2), ((1, 0), (1, 1)), 2)
    """
    rs._check_index(weight_index)
    gamma = tuple(gamma)
    _validate_word(rs, weight_index, gamma)
    n = len(gamma)

    beta = tuple(weyl_involution(rs, g) for g in gamma)
    alpha = alpha_sequence(rs, beta)
    pair_alpha = tuple(
        tuple(rs.pairing(ai, aj) for aj in alpha) for ai in alpha
    )
    pair_beta = tuple(
        tuple(rs.cartan[bi - 1][bj - 1] for bj in beta) for bi in beta
    )
    special = weyl_involution(rs, weight_index)

    for i, a in enumerate(alpha):
        if not rs.is_positive_root(a):
            raise InvariantViolation(f"sequence root {i + 1} = {a} is not a positive root")
    if len(set(alpha)) != n:
        raise InvariantViolation("sequence roots are not pairwise distinct")
    for i in range(n):
        for j in range(n):
            v = pair_alpha[i][j]
            if v < 0:
                raise InvariantViolation(
                    f"positivity fails at ({i + 1}, {j + 1}): <a^vee, a> = {v}"
                )
            if v > 2 or (v == 2) != (alpha[i] == alpha[j]):
                raise InvariantViolation(
                    f"pairing bound fails at ({i + 1}, {j + 1}): <a^vee, a> = {v}"
                )
    if n and beta[-1] != special:
        raise InvariantViolation(
            f"last letter {beta[-1]} differs from the forced letter {special}"
        )
    for i in range(n):
        v = alpha[i]
        for t in range(i - 1, -1, -1):
            v = rs.reflect_along(alpha[t], v)
        if v != rs.simple_root(beta[i]):
            raise InvariantViolation(
                f"reconstruction symmetry fails at {i + 1}: got {v}"
            )

    gens = minuscule_parabolic(rs, weight_index)
    contracted = frozenset(
        x
        for x in range(1, n + 1)
        if coset_length(rs, gamma[: x - 1] + gamma[x:], gens) < n - 1
    )

    return BottSamelsonData(
        rs=rs,
        weight_index=weight_index,
        gamma=gamma,
        beta=beta,
        alpha=alpha,
        pair_alpha=pair_alpha,
        pair_beta=pair_beta,
        special_root=special,
        contracted=contracted,
    )
