"""Enveloping group of a conjugation quandle: presentation and invariants.

The enveloping group of the conjugation quandle of a finite group G is the
group E(G) generated by one symbol x_g per element g of G subject to the
relations x_g x_h x_g^{-1} = x_{g h g^{-1}}. It is infinite whenever G is
nontrivial (the total exponent map onto the integers is surjective), so it
is studied here through finite shadows:

* its abelianization, which is free abelian on the conjugacy classes of G;
* the finite quotients K_N = E(G) / <<x_g^N>> for N a multiple of the
  exponent of G, enumerated independently by Todd–Coxeter coset counting
  and compared against the closed-form order prediction
  |K_N| = |G| * N^{c} * |H| / |G^{ab}|, where c is the number of conjugacy
  classes and H the scalar-class group realized at the exponent;
* explicit surjectivity witnesses for perfect G: words in the x_g that map
  onto each basis vector of the abelianization while evaluating to the
  identity of G.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import ComputationError, ResourceLimitError, ValidationError
from .groups import FiniteGroup
from .snf import smith_normal_form

__all__ = [
    "Presentation",
    "free_reduce",
    "enveloping_presentation",
    "PresentationAbelianization",
    "presentation_abelianization",
    "pi_times_ab_check",
    "perfect_surjectivity_witness",
    "todd_coxeter_order",
    "expected_KN_order",
    "presentation_to_text",
    "presentation_from_text",
]

DEFAULT_COSET_CAP = 1_000_000


def free_reduce(word) -> tuple[int, ...]:
    """Freely reduce a word over signed 1-based generator letters.

    A word is a sequence of nonzero integers; letter ``k`` (k > 0) is the
    k-th generator and ``-k`` its inverse. Adjacent cancelling pairs are
    removed until none remain.
    """
    out: list[int] = []
    for letter in word:
        letter = int(letter)
        if letter == 0:
            raise ValidationError("word letters must be nonzero integers")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    """A finite group presentation with signed 1-based letter words."""

    generator_count: int
    relators: tuple[tuple[int, ...], ...]
    name: str = "presentation"

    def __post_init__(self):
        if self.generator_count < 0:
            raise ValidationError("generator count must be nonnegative")
        for rel in self.relators:
            for letter in rel:
                if letter == 0 or abs(letter) > self.generator_count:
                    raise ValidationError(
                        f"relator letter {letter} out of range for "
                        f"{self.generator_count} generators")

    @property
    def relator_count(self) -> int:
        return len(self.relators)


def enveloping_presentation(G: FiniteGroup) -> Presentation:
    """Presentation of the enveloping group of the conjugation quandle of G.

    One generator per group element (including the identity); one relator
    x_g x_h x_g^{-1} x_{ghg^{-1}}^{-1} per ordered pair (g, h), freely
    reduced, with empty relators dropped and exact duplicates removed
    (preserving first-occurrence order).
    """
    n = G.order
    mul = G.mul
    inv = G.inv
    seen: set[tuple[int, ...]] = set()
    relators: list[tuple[int, ...]] = []
    for g in range(n):
        for h in range(n):
            k = mul[mul[g, h], inv[g]]
            rel = free_reduce((g + 1, h + 1, -(g + 1), -(int(k) + 1)))
            if rel and rel not in seen:
                seen.add(rel)
                relators.append(rel)
    return Presentation(n, tuple(relators), name=f"E({G.name})")


@dataclass(frozen=True)
class PresentationAbelianization:
    """Abelianization of a finitely presented group.

    ``rank`` free summands plus torsion with the listed invariant factors;
    ``generator_images`` maps each presentation generator to its image,
    as integer coordinates (free coordinates first, then one coordinate
    per torsion factor, reduced mod that factor).
    """

    rank: int
    torsion: tuple[int, ...]
    generator_images: tuple[tuple[int, ...], ...]

    @property
    def coordinate_count(self) -> int:
        return self.rank + len(self.torsion)


def presentation_abelianization(P: Presentation) -> PresentationAbelianization:
    """Abelianization of a presented group via exact Smith reduction.

    Writes the relator exponent vectors as columns of an integer matrix L
    and computes Z^g / col(L). When the result is free and the distinct
    generator images form a basis, coordinates are changed so that the
    images are standard basis vectors in first-occurrence order.
    """
    g = P.generator_count
    r = P.relator_count
    L = np.zeros((g, max(r, 1)), dtype=np.int64)
    for j, rel in enumerate(P.relators):
        for letter in rel:
            L[abs(letter) - 1, j] += 1 if letter > 0 else -1
    sf = smith_normal_form(L, chain=True, want_u=True)
    diag = sf.diag
    U = sf.U.astype(object)
    # in y = U x coordinates the quotient is  ⊕ Z/diag[i]  ⊕  Z^{free}
    torsion_idx = [i for i, d in enumerate(diag) if d > 1]
    free_idx = [i for i in range(g) if i >= len(diag) or diag[i] == 0]
    torsion = tuple(int(diag[i]) for i in torsion_idx)
    rank = len(free_idx)

    def image_of(gen: int) -> tuple[int, ...]:
        col = U[:, gen]
        free_part = [int(col[i]) for i in free_idx]
        tors_part = [int(col[i]) % torsion[t] for t, i in enumerate(torsion_idx)]
        return tuple(free_part + tors_part)

    images = [image_of(i) for i in range(g)]

    if not torsion and rank > 0:
        # canonicalize: if the distinct images (in first-occurrence order)
        # form a basis of Z^rank, change coordinates so they become the
        # standard basis.
        distinct: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        for img in images:
            if img not in seen:
                seen.add(img)
                distinct.append(img)
        if len(distinct) == rank:
            B = np.array(distinct, dtype=np.int64).T  # rank x rank
            bs = smith_normal_form(B, chain=True)
            if len(bs.diag) == rank and all(d == 1 for d in bs.diag):
                Binv = _integer_inverse(B)
                images = [tuple(int(v) for v in Binv @ np.array(img, dtype=object))
                          for img in images]

    return PresentationAbelianization(rank, torsion, tuple(images))


def _integer_inverse(B: np.ndarray) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix."""
    sf = smith_normal_form(B, chain=True, want_u=True, want_v=True)
    if len(sf.diag) != B.shape[0] or any(d != 1 for d in sf.diag):
        raise ComputationError("matrix is not unimodular")
    # U B V = I  =>  B^{-1} = V U
    return sf.V.astype(object) @ sf.U.astype(object)


def pi_times_ab_check(G: FiniteGroup, hs2_order: int | None = None):
    """Check that (projection to G, abelianization) is defined on E(G).

    Evaluates every presentation relator in the product G x Z^c, where the
    second factor records the conjugacy class multiset of a word. Returns a
    report with any failing relators and a verdict on injectivity informed
    by the order of the symmetric scalar-class subgroup when supplied:
    the combined map is injective exactly when that subgroup is trivial.
    """
    P = enveloping_presentation(G)
    class_of = np.zeros(G.order, dtype=np.int64)
    for ci, cls in enumerate(G.conjugacy_classes):
        for x in cls:
            class_of[x] = ci
    c = len(G.conjugacy_classes)

    failures: list[tuple[int, ...]] = []
    for rel in P.relators:
        g_val = G.identity
        vec = np.zeros(c, dtype=np.int64)
        for letter in rel:
            idx = abs(letter) - 1
            if letter > 0:
                g_val = int(G.mul[g_val, idx])
                vec[class_of[idx]] += 1
            else:
                g_val = int(G.mul[g_val, G.inv[idx]])
                vec[class_of[idx]] -= 1
        if g_val != G.identity or vec.any():
            failures.append(rel)

    well_defined = not failures
    if hs2_order is None:
        verdict = "undetermined (symmetric scalar-class order not supplied)"
    elif hs2_order == 1:
        verdict = ("injective on scalar-rescaling classes: the symmetric "
                   "scalar-class subgroup is trivial")
    else:
        verdict = ("not injective on scalar-rescaling classes: the symmetric "
                   f"scalar-class subgroup has order {hs2_order}")
    return PiAbReport(well_defined=well_defined, failures=tuple(failures),
                      verdict=verdict)


@dataclass(frozen=True)
class PiAbReport:
    well_defined: bool
    failures: tuple[tuple[int, ...], ...]
    verdict: str


@dataclass(frozen=True)
class SurjectivityWitness:
    """Per conjugacy class: a word in the x_g of total class-degree e_i
    that evaluates to the identity of G."""

    class_index: int
    word: tuple[int, ...]


def perfect_surjectivity_witness(G: FiniteGroup) -> tuple[SurjectivityWitness, ...]:
    """Words proving E(G) -> G x Z^c hits a generating set when G is perfect.

    For perfect G every element is a product of commutators; a commutator
    word [x_a, x_b] evaluates into G with zero class-degree everywhere.
    Composing a commutator word for r^{-1} with the letter x_r (r a class
    representative) gives a word mapping to (identity, e_i). Words are found
    by breadth-first search over commutator multiplications, scanning pairs
    (a, b) in lexicographic order, so the output is deterministic.
    """
    n = G.order
    if len(G.commutator_subgroup) != n:
        raise ValidationError("group is not perfect")
    if n == 1:
        return ()
    mul = G.mul
    inv = G.inv

    # BFS from the identity: multiply by single commutators [a, b]
    words: dict[int, tuple[int, ...]] = {G.identity: ()}
    frontier = [G.identity]
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    while len(words) < n and frontier:
        new_frontier = []
        for x in frontier:
            for a, b in pairs:
                comm = int(mul[mul[a, b], mul[inv[a], inv[b]]])
                y = int(mul[x, comm])
                if y not in words:
                    words[y] = words[x] + (a + 1, b + 1, -(a + 1), -(b + 1))
                    new_frontier.append(y)
        frontier = new_frontier
    if len(words) < n:
        raise ComputationError("commutator search failed to reach all elements")

    witnesses = []
    for ci, cls in enumerate(G.conjugacy_classes):
        r = min(cls)
        w_rinv = words[int(inv[r])]
        word = free_reduce((r + 1,) + w_rinv)
        # verify: evaluates to identity in G, class degree = e_ci
        g_val = G.identity
        class_of = _class_index_array(G)
        c = len(G.conjugacy_classes)
        vec = np.zeros(c, dtype=np.int64)
        for letter in word:
            idx = abs(letter) - 1
            if letter > 0:
                g_val = int(mul[g_val, idx])
                vec[class_of[idx]] += 1
            else:
                g_val = int(mul[g_val, inv[idx]])
                vec[class_of[idx]] -= 1
        expected = np.zeros(c, dtype=np.int64)
        expected[ci] = 1
        if g_val != G.identity or (vec != expected).any():
            raise ComputationError(
                f"witness word for class {ci} failed verification")
        witnesses.append(SurjectivityWitness(ci, word))
    return tuple(witnesses)


def _class_index_array(G: FiniteGroup) -> np.ndarray:
    class_of = np.zeros(G.order, dtype=np.int64)
    for ci, cls in enumerate(G.conjugacy_classes):
        for x in cls:
            class_of[x] = ci
    return class_of


# --------------------------------------------------------------------------
# Todd-Coxeter coset enumeration (HLT strategy with coincidence handling)
# --------------------------------------------------------------------------


def _canonical_relator(rel: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form under cyclic rotation and inversion, for dedup."""
    cands = []
    k = len(rel)
    inv_rel = tuple(-x for x in reversed(rel))
    for w in (rel, inv_rel):
        for i in range(k):
            cands.append(w[i:] + w[:i])
    return min(cands)


def todd_coxeter_order(P: Presentation, extra_power: int | None = None,
                       cap: int | None = None) -> int:
    """Number of elements of the presented group, by coset enumeration.

    Enumerates cosets of the trivial subgroup with the HLT strategy:
    scan every relator at every live coset, defining new cosets to fill
    gaps and merging cosets (union-find with path compression) when a scan
    closes inconsistently. With ``extra_power=N`` the relators x_i^N are
    appended for every generator; this is how the finite shadows K_N are
    enumerated. Raises :class:`ResourceLimitError` when more than ``cap``
    cosets would be allocated (default from the QREP_COSET_CAP environment
    variable, else one million).
    """
    if cap is None:
        cap = int(os.environ.get("QREP_COSET_CAP", DEFAULT_COSET_CAP))
    ngens = P.generator_count
    relators = list(P.relators)
    if extra_power is not None:
        if extra_power < 1:
            raise ValidationError("extra_power must be a positive integer")
        for i in range(ngens):
            relators.append(free_reduce((i + 1,) * extra_power))
    # dedup up to rotation/inversion, scan short relators first
    seen: set[tuple[int, ...]] = set()
    rels: list[tuple[int, ...]] = []
    for rel in relators:
        rel = free_reduce(rel)
        if not rel:
            continue
        canon = _canonical_relator(rel)
        if canon not in seen:
            seen.add(canon)
            rels.append(rel)
    rels.sort(key=lambda r: (len(r), r))
    if ngens == 0 or not rels:
        # free group on ngens generators: finite only when ngens == 0
        if ngens == 0:
            return 1
        raise ComputationError("free group of positive rank is infinite")

    # column layout: letter k>0 -> column 2(k-1); letter -k -> 2(k-1)+1.
    # plain Python lists beat numpy here: the loops are scalar-access-heavy.
    ncols = 2 * ngens

    def col_of(letter: int) -> int:
        return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1

    rel_cols = [tuple(col_of(x) for x in rel) for rel in rels]

    table: list[list[int]] = [[-1] * ncols]
    parent: list[int] = [0]
    alive: list[bool] = [True]
    n_live = 1

    def rep(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def define(f: int, c: int) -> int:
        nonlocal n_live
        new = len(table)
        if new >= cap:
            raise ResourceLimitError(
                f"coset enumeration exceeded the cap of {cap} cosets; "
                "raise QREP_COSET_CAP to allow more")
        table.append([-1] * ncols)
        parent.append(new)
        alive.append(True)
        n_live += 1
        table[f][c] = new
        table[new][c ^ 1] = f
        return new

    def merge(a: int, b: int):
        """Union the coset classes of a and b, reconciling table rows."""
        nonlocal n_live
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            x, y = rep(x), rep(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            parent[y] = x
            alive[y] = False
            n_live -= 1
            row_y = table[y]
            row_x = table[x]
            for c in range(ncols):
                t = row_y[c]
                if t < 0:
                    continue
                row_y[c] = -1
                t = rep(t)
                # detach the reverse edge from t if it points at dead y
                if table[t][c ^ 1] == y:
                    table[t][c ^ 1] = -1
                cur = row_x[c]
                if cur < 0:
                    row_x[c] = t
                    back = table[t][c ^ 1]
                    if back < 0:
                        table[t][c ^ 1] = x
                    elif rep(back) != x:
                        queue.append((back, x))
                elif rep(cur) != t:
                    queue.append((cur, t))
                else:
                    # consistent; make sure the reverse edge exists
                    if table[t][c ^ 1] < 0:
                        table[t][c ^ 1] = x

    def scan(start: int, cols: tuple[int, ...]) -> bool:
        """Scan one relator at one coset; returns False if a coincidence
        occurred (caller should restart from the representative)."""
        k = len(cols)
        while True:
            # forward
            f = start
            i = 0
            while i < k:
                t = table[f][cols[i]]
                if t < 0:
                    break
                f = t if parent[t] == t else rep(t)
                i += 1
            if i == k:
                if f != start:
                    merge(f, start)
                    return False
                return True
            # backward
            b = start
            j = k
            while j > i:
                t = table[b][cols[j - 1] ^ 1]
                if t < 0:
                    break
                b = t if parent[t] == t else rep(t)
                j -= 1
            if j == i:
                if f != b:
                    merge(f, b)
                    return False
                return True
            if j == i + 1:
                # deduction: the single gap is forced
                c = cols[i]
                table[f][c] = b
                back = table[b][c ^ 1]
                if back < 0:
                    table[b][c ^ 1] = f
                elif rep(back) != f:
                    merge(back, f)
                    return False
                return True
            # gap of length > 1: define one new coset, then rescan
            define(f, cols[i])

    idx = 0
    while idx < len(table):
        if not alive[idx] or rep(idx) != idx:
            idx += 1
            continue
        c = idx
        restart = True
        while restart:
            restart = False
            for cols in rel_cols:
                if not scan(c, cols):
                    c = rep(c)
                    restart = True
                    break
            if not alive[c] or rep(c) != c:
                break
        if not alive[idx] or rep(idx) != idx:
            idx += 1
            continue
        # fill any remaining undefined entries so the row is complete
        row = table[idx]
        for col in range(ncols):
            if row[col] < 0:
                define(idx, col)
        idx += 1

    return sum(1 for i in range(len(table)) if alive[i] and rep(i) == i)


def expected_KN_order(G: FiniteGroup, N: int, hs2_order: int) -> int:
    """Closed-form order of K_N = E(G)/<<x_g^N>> for N a multiple of exp(G).

    |K_N| = |G| * N^{c} * hs2_order / |G^{ab}| with c the number of
    conjugacy classes; the division is exact (verified).
    """
    # exponent of G = lcm of element orders
    e = 1
    for x in range(G.order):
        o = 1
        y = x
        while y != G.identity:
            y = int(G.mul[y, x])
            o += 1
        e = math.lcm(e, o)
    if N % e != 0:
        raise ValidationError(
            f"N = {N} must be a multiple of the group exponent {e}")
    c = len(G.conjugacy_classes)
    ab_order = G.abelianization.order
    num = G.order * (N ** c) * hs2_order
    if num % ab_order != 0:
        raise ComputationError(
            "closed-form order is not an integer; inputs are inconsistent")
    return num // ab_order


# --------------------------------------------------------------------------
# Plain-text export/import of presentations
# --------------------------------------------------------------------------


def presentation_to_text(P: Presentation) -> str:
    """Serialize: first line ``gens <n>``, then one relator per line as
    space-separated signed 1-based generator indices."""
    lines = [f"gens {P.generator_count}"]
    for rel in P.relators:
        lines.append(" ".join(str(x) for x in rel))
    return "\n".join(lines) + "\n"


def presentation_from_text(text: str, name: str = "presentation") -> Presentation:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("gens "):
        raise ValidationError("first line must be 'gens <count>'")
    try:
        g = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValidationError("first line must be 'gens <count>'") from exc
    relators = []
    for ln in lines[1:]:
        try:
            rel = tuple(int(tok) for tok in ln.split())
        except ValueError as exc:
            raise ValidationError(f"bad relator line: {ln!r}") from exc
        relators.append(free_reduce(rel))
    return Presentation(g, tuple(r for r in relators if r), name=name)
