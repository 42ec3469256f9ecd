"""Weyl group words: lengths, reduced words, coset minima, enumeration.

Group elements are represented by the integer matrices they induce on the
root lattice (columns = images of the simple roots), composed by exact
matrix product.  Words are tuples of 1-based simple indices and act as
s_{g_1} s_{g_2} ... s_{g_m}, rightmost reflection first.
"""

from __future__ import annotations

from itertools import islice

from .errors import InvariantViolation
from .root_system import Matrix, Root, RootSystem, Weight, classify_minuscule

Word = tuple[int, ...]


def _identity(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rng = range(len(a))
    return tuple(
        tuple(sum(arow[k] * b[k][j] for k in rng) for j in rng) for arow in a
    )


def _simple_matrices(rs: RootSystem) -> tuple[Matrix, ...]:
    mats = rs._cache.get("simple_matrices")
    if mats is None:
        rank = rs.rank
        out = []
        for i in range(rank):
            rows = [[1 if r == c else 0 for c in range(rank)] for r in range(rank)]
            for c in range(rank):
                rows[i][c] -= rs.cartan[i][c]
            out.append(tuple(tuple(r) for r in rows))
        mats = tuple(out)
        rs._cache["simple_matrices"] = mats
    return mats


def matrix_of(rs: RootSystem, word: Word) -> Matrix:
    """Matrix of the group element of a word."""
    return element_of(rs, word)[0]


def element_of(rs: RootSystem, word: Word) -> tuple[Matrix, Matrix]:
    """(matrix, inverse matrix) of the group element of a word."""
    mats = _simple_matrices(rs)
    m = minv = _identity(rs.rank)
    for g in word:
        rs._check_index(g)
        m = _mat_mul(m, mats[g - 1])
        minv = _mat_mul(mats[g - 1], minv)
    return m, minv


def _column_negative(m: Matrix, j: int) -> bool:
    # columns are images of simple roots, hence all-nonneg or all-nonpos
    return any(row[j] < 0 for row in m)


def act_on(rs: RootSystem, word: Word, y: Root) -> Root:
    """Apply the word to a root, rightmost reflection first.

    >>> from minuscule.root_system import build_root_system
    >>> act_on(build_root_system("A", 2), (1, 2), (1, 0))
    (0, 1)
    """
    for g in reversed(word):
        y = rs.reflect(g, y)
    return y


def act_on_weight(rs: RootSystem, word: Word, lam: Weight) -> Weight:
    """Apply the word to a weight, rightmost reflection first."""
    for g in reversed(word):
        lam = rs.reflect_weight(g, lam)
    return lam


def _inversions(rs: RootSystem, m: Matrix) -> int:
    count = 0
    for r in rs.positive_roots:
        img0 = None
        for row in m:
            v = sum(row[j] * rj for j, rj in enumerate(r) if rj)
            if v:
                img0 = v
                break
        if img0 is not None and img0 < 0:
            count += 1
    return count


def length(rs: RootSystem, word: Word) -> int:
    """Coxeter length: positive roots sent negative by the word's element.

    >>> from minuscule.root_system import build_root_system
    >>> rs = build_root_system("A", 2)
    >>> length(rs, (1, 2, 1)), length(rs, (1, 1))
    (3, 0)
    """
    return _inversions(rs, matrix_of(rs, word))


def is_reduced(rs: RootSystem, word: Word) -> bool:
    return length(rs, word) == len(word)


def _parabolic_positive_count(rs: RootSystem, generators: frozenset[int]) -> int:
    gens0 = {g - 1 for g in generators}
    return sum(
        1
        for r in rs.positive_roots
        if all(j in gens0 for j, c in enumerate(r) if c)
    )


def longest_element(rs: RootSystem, generators: frozenset[int] | None = None) -> Word:
    """Reduced word for the longest element of W (or of a standard parabolic).

    Greedy: repeatedly prepend the smallest simple reflection that increases
    length until none does.
    """
    if generators is None:
        generators = frozenset(range(1, rs.rank + 1))
    mats = _simple_matrices(rs)
    m = minv = _identity(rs.rank)
    word: list[int] = []
    while True:
        for i in sorted(generators):
            if not _column_negative(minv, i - 1):  # l(s_i w) = l(w) + 1
                m = _mat_mul(mats[i - 1], m)
                minv = _mat_mul(minv, mats[i - 1])
                word.insert(0, i)
                break
        else:
            break
    if len(word) != _parabolic_positive_count(rs, generators):
        raise InvariantViolation("longest element has wrong length")
    return tuple(word)


def weyl_involution(rs: RootSystem, i: int) -> int:
    """Index j with alpha_j = -w_0(alpha_i).

    >>> from minuscule.root_system import build_root_system
    >>> rs = build_root_system("A", 3)
    >>> [weyl_involution(rs, i) for i in (1, 2, 3)]
    [3, 2, 1]
    """
    rs._check_index(i)
    table = rs._cache.get("weyl_involution")
    if table is None:
        w0 = matrix_of(rs, longest_element(rs))
        out = []
        for c in range(rs.rank):
            img = tuple(-row[c] for row in w0)
            if sum(img) != 1 or any(x not in (0, 1) for x in img):
                raise InvariantViolation(f"-w_0(alpha_{c + 1}) is not a simple root: {img}")
            out.append(img.index(1) + 1)
        table = tuple(out)
        rs._cache["weyl_involution"] = table
    return table[i - 1]


def minuscule_parabolic(rs: RootSystem, k: int) -> frozenset[int]:
    """Generators of W_P for the parabolic of the fundamental weight k."""
    rs._check_index(k)
    return frozenset(range(1, rs.rank + 1)) - {k}


def is_minimal_rep(rs: RootSystem, word: Word, generators: frozenset[int]) -> bool:
    """Whether the word is reduced and minimal in its coset w * W_P.

    Minimality is the standard test: the element must send alpha_j to a
    positive root for every generator j of W_P.
    """
    if not is_reduced(rs, word):
        return False
    m, _ = element_of(rs, word)
    return all(not _column_negative(m, j - 1) for j in generators)


def _lex_least_word(rs: RootSystem, m: Matrix, minv: Matrix) -> Word:
    mats = _simple_matrices(rs)
    ident = _identity(rs.rank)
    word: list[int] = []
    while m != ident:
        for i in range(rs.rank):
            if _column_negative(minv, i):  # smallest left descent
                m = _mat_mul(mats[i], m)
                minv = _mat_mul(minv, mats[i])
                word.append(i + 1)
                break
        else:
            raise InvariantViolation("non-identity element without a left descent")
    return tuple(word)


def minimal_coset_rep(rs: RootSystem, word: Word, generators: frozenset[int]) -> Word:
    """Lexicographically least reduced word of the minimal element of w * W_P."""
    mats = _simple_matrices(rs)
    m, minv = element_of(rs, word)
    changed = True
    while changed:
        changed = False
        for j in sorted(generators):
            if _column_negative(m, j - 1):  # l(w s_j) = l(w) - 1
                m = _mat_mul(m, mats[j - 1])
                minv = _mat_mul(mats[j - 1], minv)
                changed = True
    return _lex_least_word(rs, m, minv)


def coset_length(rs: RootSystem, word: Word, generators: frozenset[int]) -> int:
    """Length of the minimal representative of the coset w * W_P."""
    return len(minimal_coset_rep(rs, word, generators))


def enumerate_minuscule_cosets(
    rs: RootSystem, k: int, max_length: int | None = None
) -> list[Word]:
    """All minimal coset words of W / W_P for a minuscule weight k.

    One canonical (lexicographically least) reduced word per coset, every
    coset of length <= max_length (all of them when max_length is None),
    found by breadth-first extension filtered by the minimality test.
    """
    flags = {idx: m for idx, m, _ in classify_minuscule(rs)}
    if not flags[k]:
        raise ValueError(f"weight {k} of {rs.family}{rs.rank} is not minuscule")
    gens = minuscule_parabolic(rs, k)
    mats = _simple_matrices(rs)
    ident = _identity(rs.rank)
    frontier: dict[Matrix, Matrix] = {ident: ident}
    seen: set[Matrix] = {ident}
    words: list[Word] = [()]
    depth = 0
    while frontier and (max_length is None or depth < max_length):
        depth += 1
        nxt: dict[Matrix, Matrix] = {}
        for m, minv in frontier.items():
            for i in range(rs.rank):
                if _column_negative(minv, i):
                    continue  # length would drop
                m2 = _mat_mul(mats[i], m)
                if m2 in seen or m2 in nxt:
                    continue
                if any(_column_negative(m2, j - 1) for j in gens):
                    continue  # not minimal in its coset
                nxt[m2] = _mat_mul(minv, mats[i])
        for m2, minv2 in nxt.items():
            seen.add(m2)
            words.append(_lex_least_word(rs, m2, minv2))
        frontier = nxt
    return sorted(words, key=lambda w: (len(w), w))


def _reduced_words_iter(rs: RootSystem, m: Matrix, minv: Matrix):
    ident = _identity(rs.rank)
    if m == ident:
        yield ()
        return
    mats = _simple_matrices(rs)
    for i in range(rs.rank):
        if _column_negative(minv, i):
            for rest in _reduced_words_iter(rs, _mat_mul(mats[i], m), _mat_mul(minv, mats[i])):
                yield (i + 1,) + rest


def reduced_words(rs: RootSystem, word: Word, cap: int | None = None) -> list[Word]:
    """Reduced words of the element of `word`, in lexicographic order.

    With a cap, returns the lexicographically first `cap` of them; this is
    the deterministic sampling used by the audit sweeps.
    """
    m, minv = element_of(rs, word)
    it = _reduced_words_iter(rs, m, minv)
    return list(it) if cap is None else list(islice(it, cap))
