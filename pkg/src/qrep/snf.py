"""Integer matrix diagonalization (Smith normal form) and modular linear algebra.

The central routine, :func:`smith_normal_form`, factors an integer matrix ``A``
as ``D = U @ A @ V`` with ``U`` and ``V`` unimodular and ``D`` diagonal.  When a
``modulus`` is supplied, the working matrix is reduced modulo it after every
elementary operation, which keeps coefficients bounded.  In that mode the
returned data is an exact factorization of *some* integer matrix congruent to
``A`` modulo ``m``.  Every consumer in this package depends only on objects
that are identical for all such matrices — the solution set of
``A x = 0 (mod m)``, the solution sets of ``A x = b (mod m)``, and the subgroup
``col(A) + m*Z^r`` of ``Z^r`` — so modular reduction loses nothing for those
purposes.

Transform matrices can be tracked under their own moduli
(``transform_modulus`` for ``U``/``V``, ``inverse_transform_modulus`` for
``Uinv``/``Vinv``).  With ``chain=True`` the diagonal is brought into a
divisibility chain ``d_1 | d_2 | ...``; in modular mode the chain holds for the
stored representatives, which forces the induced torsion values
``gcd(d_i, m)`` into a divisibility chain as well.

Also provided here:

- :class:`ModSolver` — repeated solving of ``A x = b (mod m)``.
- :class:`KernelModM` — the group ``{x in (Z/m)^c : A x = 0 (mod m)}`` with an
  explicit direct-sum-of-cyclics coordinate system.
- :class:`ModQuotient` — ``(Z/m)^k`` modulo a column span, with invariant
  factors, coordinates and representatives.
- small number-theoretic helpers shared by the rest of the package.

Arithmetic uses NumPy ``int64`` vectorized operations and transparently
escalates to exact Python-integer (object dtype) arrays if coefficients in an
unreduced matrix grow beyond a safe bound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ComputationError, ValidationError

__all__ = [
    "SmithForm",
    "smith_normal_form",
    "ModSolver",
    "KernelModM",
    "ModQuotient",
    "modinv",
    "solve_mod",
    "factorize",
    "invariant_factors_from_cyclic_orders",
]

# Escalate int64 -> object when an unreduced coefficient passes this bound.
# Keeping unreduced values below 2**24 bounds every intermediate product by
# 2**48, so even sums over an 8192-long batch stay far below 2**63.
_ESCALATE_LIMIT = 2**24
_MAX_BATCH_FOR_INT64 = 8192


def modinv(a: int, m: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``m`` (requires gcd(a, m) == 1)."""
    return pow(a % m, -1, m)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValidationError(f"cannot factorize non-positive integer {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors_from_cyclic_orders(orders) -> list[int]:
    """Invariant factors of a direct sum of cyclic groups of the given orders.

    Returns an ascending divisor chain ``[f_1, ..., f_r]`` with
    ``f_1 | f_2 | ...`` and all factors > 1.
    """
    per_prime: dict[int, list[int]] = {}
    for o in orders:
        if o < 1:
            raise ValidationError(f"invalid cyclic order {o}")
        for p, e in factorize(o).items():
            per_prime.setdefault(p, []).append(e)
    for exps in per_prime.values():
        exps.sort(reverse=True)
    rank = max((len(v) for v in per_prime.values()), default=0)
    factors = []
    for i in range(rank):
        f = 1
        for p, exps in per_prime.items():
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    factors.reverse()
    return factors


@dataclass
class SmithForm:
    """Result of a Smith normal form computation: ``D = U @ A @ V``.

    ``diag`` holds the diagonal of ``D`` (length ``min(shape)``, non-negative).
    Transform matrices are present only if requested, reduced by their
    respective moduli when those were given.
    """

    diag: list[int]
    shape: tuple[int, int]
    modulus: int | None
    U: np.ndarray | None = None
    Uinv: np.ndarray | None = None
    V: np.ndarray | None = None
    Vinv: np.ndarray | None = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


class _NeedObjectDtype(Exception):
    """Internal signal: int64 coefficients grew beyond the safe range."""


def _divides(a: int, b: int) -> bool:
    if a == 0:
        return b == 0
    return b % a == 0


def _sort_key(v: int) -> tuple[int, int]:
    # Zeros sort last; otherwise ascending magnitude.
    return (1, 0) if v == 0 else (0, abs(v))


class _Worker:
    """Mutable state for one Smith normal form run."""

    def __init__(self, arr, modulus, want_u, want_uinv, want_v, want_vinv,
                 tmod, itmod, use_object):
        self.use_object = use_object
        if use_object:
            A = np.asarray(arr).astype(object)
        else:
            A = np.array(arr, dtype=np.int64, copy=True)
        self.A = A
        self.R, self.C = A.shape
        self.m = modulus
        self.tmod = tmod
        self.itmod = itmod
        if modulus is not None:
            self.A %= modulus

        def identity(n):
            eye = np.eye(n, dtype=np.int64)
            return eye.astype(object) if use_object else eye

        self.U = identity(self.R) if want_u else None
        self.Uinv = identity(self.R) if want_uinv else None
        self.V = identity(self.C) if want_v else None
        self.Vinv = identity(self.C) if want_vinv else None

    # -- primitive helpers -------------------------------------------------

    def _chk(self, x) -> None:
        """Overflow guard for a just-modified unreduced int64 region."""
        if not self.use_object and x.size:
            if int(np.abs(x).max()) > _ESCALATE_LIMIT:
                raise _NeedObjectDtype

    def _vec(self, values) -> np.ndarray:
        dtype = object if self.use_object else np.int64
        return np.array(list(values), dtype=dtype)

    # -- elementary operations (all keep D = U A V consistent) -------------

    def row_batch_sub(self, t, rows, q) -> None:
        """Row operation ``row[rows[j]] -= q[j] * row[t]`` for all j."""
        self.A[rows] -= q[:, None] * self.A[t]
        if self.m is not None:
            self.A[rows] %= self.m
        else:
            self._chk(self.A[rows])
        if self.U is not None:
            self.U[rows] -= q[:, None] * self.U[t]
            if self.tmod is not None:
                self.U[rows] %= self.tmod
            else:
                self._chk(self.U[rows])
        if self.Uinv is not None:
            self.Uinv[:, t] += (self.Uinv[:, rows] * q[None, :]).sum(axis=1)
            if self.itmod is not None:
                self.Uinv[:, t] %= self.itmod
            else:
                self._chk(self.Uinv[:, t])

    def col_batch_sub(self, t, cols, q) -> None:
        """Column operation ``col[cols[j]] -= q[j] * col[t]`` for all j."""
        self.A[:, cols] -= self.A[:, t][:, None] * q[None, :]
        if self.m is not None:
            self.A[:, cols] %= self.m
        else:
            self._chk(self.A[:, cols])
        if self.V is not None:
            self.V[:, cols] -= self.V[:, t][:, None] * q[None, :]
            if self.tmod is not None:
                self.V[:, cols] %= self.tmod
            else:
                self._chk(self.V[:, cols])
        if self.Vinv is not None:
            self.Vinv[t] += (q[:, None] * self.Vinv[cols]).sum(axis=0)
            if self.itmod is not None:
                self.Vinv[t] %= self.itmod
            else:
                self._chk(self.Vinv[t])

    def swap_rows(self, p, r) -> None:
        self.A[[p, r]] = self.A[[r, p]]
        if self.U is not None:
            self.U[[p, r]] = self.U[[r, p]]
        if self.Uinv is not None:
            self.Uinv[:, [p, r]] = self.Uinv[:, [r, p]]

    def swap_cols(self, p, r) -> None:
        self.A[:, [p, r]] = self.A[:, [r, p]]
        if self.V is not None:
            self.V[:, [p, r]] = self.V[:, [r, p]]
        if self.Vinv is not None:
            self.Vinv[[p, r]] = self.Vinv[[r, p]]

    def negate_row(self, p) -> None:
        self.A[p] = -self.A[p]
        if self.m is not None:
            self.A[p] %= self.m
        if self.U is not None:
            self.U[p] = -self.U[p]
            if self.tmod is not None:
                self.U[p] %= self.tmod
        if self.Uinv is not None:
            self.Uinv[:, p] = -self.Uinv[:, p]
            if self.itmod is not None:
                self.Uinv[:, p] %= self.itmod

    # -- pivoting ----------------------------------------------------------

    def find_pivot(self, t):
        """First entry of magnitude 1 in A[t:, t:], else first minimal-magnitude
        nonzero entry (row-major); None if the submatrix is zero."""
        sub = self.A[t:, t:]
        if sub.size == 0:
            return None
        if not self.use_object:
            absA = np.abs(sub)
            if not absA.any():
                return None
            ones = absA == 1
            if ones.any():
                flat = int(ones.argmax())
            else:
                masked = np.where(absA == 0, np.iinfo(np.int64).max, absA)
                flat = int(masked.argmin())
            di, dj = divmod(flat, sub.shape[1])
            return t + di, t + dj
        best = None
        best_val = None
        for di, dj in zip(*np.nonzero(sub)):
            v = abs(sub[di, dj])
            if v == 1:
                return t + int(di), t + int(dj)
            if best_val is None or v < best_val:
                best_val, best = v, (t + int(di), t + int(dj))
        return best

    def clear_position(self, t) -> None:
        """Zero out row t and column t beyond the pivot at (t, t)."""
        while True:
            if self.A[t, t] < 0:
                self.negate_row(t)
            p = int(self.A[t, t])
            col = self.A[t + 1:, t]
            nz = np.nonzero(col)[0]
            if nz.size:
                rows = nz + t + 1
                q = self.A[rows, t] // p
                act = np.nonzero(q)[0]
                if act.size:
                    self.row_batch_sub(t, rows[act], q[act])
                rem = self.A[t + 1:, t]
                rnz = np.nonzero(rem)[0]
                if rnz.size:
                    # a remainder in [1, p) becomes the new, smaller pivot
                    vals = rem[rnz]
                    if self.use_object:
                        k = min(range(len(vals)), key=lambda i: vals[i])
                    else:
                        k = int(np.argmin(vals))
                    self.swap_rows(t, t + 1 + int(rnz[k]))
                    continue
            row = self.A[t, t + 1:]
            nz = np.nonzero(row)[0]
            if nz.size:
                cols = nz + t + 1
                q = self.A[t, cols] // p
                act = np.nonzero(q)[0]
                if act.size:
                    self.col_batch_sub(t, cols[act], q[act])
                rem = self.A[t, t + 1:]
                rnz = np.nonzero(rem)[0]
                if rnz.size:
                    vals = rem[rnz]
                    if self.use_object:
                        k = min(range(len(vals)), key=lambda i: vals[i])
                    else:
                        k = int(np.argmin(vals))
                    self.swap_cols(t, t + 1 + int(rnz[k]))
                    continue
            return

    # -- divisibility chain ------------------------------------------------

    def swap_diag(self, p, r) -> None:
        self.swap_rows(p, r)
        self.swap_cols(p, r)

    def _clear_window(self, i, j) -> None:
        """Re-diagonalize the 2x2 block at rows/cols {i, j}.

        All other entries in these two rows/columns are zero before and after.
        """
        for _ in range(100000):
            ents = [(r, c) for (r, c) in ((i, i), (i, j), (j, i), (j, j))
                    if self.A[r, c] != 0]
            if not ents:
                return
            r0, c0 = min(ents, key=lambda rc: abs(int(self.A[rc[0], rc[1]])))
            if r0 == j:
                self.swap_rows(i, j)
            if c0 == j:
                self.swap_cols(i, j)
            if self.A[i, i] < 0:
                self.negate_row(i)
            p = int(self.A[i, i])
            done = True
            b = int(self.A[j, i])
            if b:
                q = b // p
                if q:
                    self.row_batch_sub(i, np.array([j]), self._vec([q]))
                if self.A[j, i] != 0:
                    done = False
            b = int(self.A[i, j])
            if b:
                q = b // p
                if q:
                    self.col_batch_sub(i, np.array([j]), self._vec([q]))
                if self.A[i, j] != 0:
                    done = False
            if done:
                return
        raise ComputationError("2x2 diagonal merge did not converge")

    def _fix_pair(self, i, j) -> None:
        """Merge diagonal positions i < j until A[i,i] divides A[j,j]."""
        for _ in range(200):
            a, b = int(self.A[i, i]), int(self.A[j, j])
            if _divides(a, b):
                return
            # C_i += C_j puts b into position (j, i); then re-diagonalize.
            self.col_batch_sub(j, np.array([i]), self._vec([-1]))
            self._clear_window(i, j)
        raise ComputationError("diagonal divisibility merge did not converge")

    def _normalize_signs(self, k) -> None:
        for i in range(k):
            if self.A[i, i] < 0:
                self.negate_row(i)

    def enforce_chain(self) -> None:
        k = min(self.R, self.C)
        self._normalize_signs(k)
        if k <= 1:
            return
        for _ in range(100000):
            # selection sort (explicit swaps keep transforms consistent)
            for pos in range(k):
                best = pos
                for i2 in range(pos + 1, k):
                    if _sort_key(int(self.A[i2, i2])) < _sort_key(int(self.A[best, best])):
                        best = i2
                if best != pos:
                    self.swap_diag(pos, best)
            merged = False
            for i in range(k - 1):
                if not _divides(int(self.A[i, i]), int(self.A[i + 1, i + 1])):
                    self._fix_pair(i, i + 1)
                    merged = True
            if not merged:
                return
            self._normalize_signs(k)
        raise ComputationError("divisibility chain enforcement did not converge")

    # -- main loop ----------------------------------------------------------

    def run(self, chain: bool) -> None:
        k = min(self.R, self.C)
        t = 0
        while t < k:
            piv = self.find_pivot(t)
            if piv is None:
                break
            i, j = piv
            if i != t:
                self.swap_rows(t, i)
            if j != t:
                self.swap_cols(t, j)
            self.clear_position(t)
            t += 1
        if chain:
            self.enforce_chain()
        else:
            self._normalize_signs(k)


def _to_int64_if_possible(arr):
    if arr is None or arr.dtype != object:
        return arr
    try:
        return arr.astype(np.int64)
    except (OverflowError, TypeError):
        return arr


def smith_normal_form(A, *, modulus: int | None = None, chain: bool = True,
                      want_u: bool = False, want_uinv: bool = False,
                      want_v: bool = False, want_vinv: bool = False,
                      transform_modulus: int | None = None,
                      inverse_transform_modulus: int | None = None) -> SmithForm:
    """Diagonalize an integer matrix: ``D = U @ A @ V`` with unimodular U, V.

    Parameters
    ----------
    A : 2-d integer array-like
    modulus : reduce the working matrix modulo this after every operation.
        The result is then an exact factorization of a matrix congruent to
        ``A`` mod ``modulus`` (see module docstring for why that suffices).
    chain : bring the diagonal into a divisibility chain.
    want_u/want_uinv/want_v/want_vinv : track the requested transforms.
    transform_modulus : reduce U and V modulo this (None = exact).
    inverse_transform_modulus : reduce Uinv and Vinv modulo this (None = exact).
    """
    arr = np.asarray(A)
    if arr.ndim != 2:
        raise ValidationError(f"expected a 2-d matrix, got ndim={arr.ndim}")
    if arr.dtype != object and arr.dtype.kind not in "iu":
        raise ValidationError(f"expected an integer matrix, got dtype {arr.dtype}")
    for name, m in (("modulus", modulus), ("transform_modulus", transform_modulus),
                    ("inverse_transform_modulus", inverse_transform_modulus)):
        if m is not None and m < 1:
            raise ValidationError(f"{name} must be a positive integer, got {m}")

    R, C = arr.shape
    use_object = arr.dtype == object
    if not use_object and modulus is not None:
        # With every array reduced, products are bounded by q * value with
        # q < modulus; sums run over at most max(R, C) terms.
        bound = max(modulus, transform_modulus or 1, inverse_transform_modulus or 1)
        if bound * bound * modulus * (max(R, C, 1) + 1) >= 2**62:
            use_object = True
    if not use_object:
        # Batched inverse-transform updates sum over up to R (resp. C) terms.
        if want_uinv and inverse_transform_modulus is None and R > _MAX_BATCH_FOR_INT64:
            use_object = True
        if want_vinv and inverse_transform_modulus is None and C > _MAX_BATCH_FOR_INT64:
            use_object = True

    while True:
        w = _Worker(arr, modulus, want_u, want_uinv, want_v, want_vinv,
                    transform_modulus, inverse_transform_modulus, use_object)
        try:
            w.run(chain)
            break
        except _NeedObjectDtype:
            use_object = True

    diag = [int(w.A[i, i]) for i in range(min(R, C))]
    return SmithForm(
        diag=diag,
        shape=(R, C),
        modulus=modulus,
        U=_to_int64_if_possible(w.U),
        Uinv=_to_int64_if_possible(w.Uinv),
        V=_to_int64_if_possible(w.V),
        Vinv=_to_int64_if_possible(w.Vinv),
    )


class ModSolver:
    """Solves ``A x = b (mod m)`` for a fixed matrix over many right-hand sides.

    Built on one Smith normal form of ``A`` mod ``m``: with ``D = U A V``,
    the system becomes ``D y = U b`` with ``x = V y``, which splits into
    independent scalar congruences ``d_i y_i = (U b)_i (mod m)``.
    """

    def __init__(self, A, m: int):
        arr = np.asarray(A, dtype=np.int64)
        if arr.ndim != 2:
            raise ValidationError("ModSolver expects a 2-d matrix")
        self.m = int(m)
        self.rows, self.cols = arr.shape
        sf = smith_normal_form(arr, modulus=self.m, chain=False,
                               want_u=True, want_v=True, transform_modulus=self.m)
        self.diag = sf.diag
        self.U = sf.U
        self.V = sf.V

    def solve(self, b) -> np.ndarray | None:
        """One solution ``x`` (entries in [0, m)) or None if unsolvable."""
        m = self.m
        bv = np.asarray(b, dtype=np.int64).reshape(self.rows) % m
        c = (self.U @ bv) % m
        y = np.zeros(self.cols, dtype=np.int64)
        for i in range(self.rows):
            ci = int(c[i])
            d = int(self.diag[i]) if i < len(self.diag) else 0
            g = math.gcd(d, m)
            if ci % g:
                return None
            if i < self.cols and d % m != 0 and m // g > 1:
                y[i] = (ci // g) * modinv(d // g, m // g) % (m // g)
        return (self.V @ y) % m


def solve_mod(A, b, m: int) -> np.ndarray | None:
    """One-shot convenience wrapper around :class:`ModSolver`."""
    return ModSolver(A, m).solve(b)


class KernelModM:
    """The group ``K = {x in (Z/m)^c : A x = 0 (mod m)}`` with coordinates.

    From ``D = U A V`` (working matrix reduced mod m, V tracked mod m, Vinv
    tracked mod m^2): writing ``y = Vinv x``, membership in K is equivalent to
    ``t_i | y_i`` for all i where ``t_i = m / gcd(d_i, m)``.  Hence the columns
    ``b_i = t_i * V[:, i]`` generate K, the i-th generator having order
    ``m / t_i``, and K is the internal direct sum of those cyclic subgroups.

    Tracking Vinv modulo m^2 is enough to recover the coordinate
    ``w_i = (y_i / t_i) mod (m / t_i)`` exactly, because t_i divides m.
    """

    def __init__(self, A, m: int):
        arr = np.asarray(A)
        if arr.ndim != 2:
            raise ValidationError("KernelModM expects a 2-d matrix")
        self.m = int(m)
        self.c = arr.shape[1]
        if m**4 * (self.c + 1) >= 2**62:
            raise ValidationError(f"modulus {m} too large for kernel coordinates")
        sf = smith_normal_form(arr, modulus=self.m, chain=False,
                               want_v=True, want_vinv=True,
                               transform_modulus=self.m,
                               inverse_transform_modulus=self.m * self.m)
        s = sf.diag + [0] * (self.c - len(sf.diag))
        self.t = np.array([self.m // math.gcd(si, self.m) for si in s], dtype=np.int64)
        self.orders = np.array([self.m // ti for ti in self.t], dtype=np.int64)
        self.V = sf.V
        self.Vinv = sf.Vinv
        self.basis = (sf.V * self.t[None, :]) % self.m

    @property
    def group_order(self) -> int:
        return math.prod(int(o) for o in self.orders)

    def coords(self, x) -> np.ndarray:
        """Coordinates of a kernel member (w_i modulo orders[i]).

        Raises ValidationError if x is not in the kernel: divisibility of the
        stored residue y_i mod m^2 by t_i is equivalent to exact divisibility
        since t_i | m^2, and that in turn characterizes membership.
        """
        mm = self.m * self.m
        y = (self.Vinv @ (np.asarray(x, dtype=np.int64) % mm)) % mm
        if np.any(y % self.t):
            raise ValidationError("vector is not in the kernel modulo m")
        return (y // self.t) % self.orders

    def from_coords(self, w) -> np.ndarray:
        wv = np.asarray(w, dtype=np.int64) % self.orders
        return (self.basis @ wv) % self.m


class ModQuotient:
    """The quotient of ``(Z/m)^k`` by the subgroup generated by given columns.

    With ``D = U G V`` (everything mod m), the change of basis ``v -> U v``
    identifies the quotient with the direct sum of ``Z / gcd(d_i, m)``.  The
    stored divisibility chain on ``d_i`` makes the torsion values
    ``gcd(d_i, m)`` a divisor chain, so the entries > 1 are the invariant
    factors of the quotient group.
    """

    def __init__(self, gens, m: int, k: int | None = None):
        G = np.asarray(gens, dtype=np.int64)
        if G.ndim != 2:
            if G.size == 0 and k is not None:
                G = np.zeros((k, 0), dtype=np.int64)
            else:
                raise ValidationError("ModQuotient expects a 2-d generator matrix")
        self.m = int(m)
        self.k = G.shape[0]
        sf = smith_normal_form(G, modulus=self.m, chain=True,
                               want_u=True, want_uinv=True,
                               transform_modulus=self.m,
                               inverse_transform_modulus=self.m)
        d = sf.diag + [0] * (self.k - len(sf.diag))
        self.torsion = np.array([math.gcd(di, self.m) for di in d], dtype=np.int64)
        self.U = sf.U
        self.Uinv = sf.Uinv
        self._nontrivial = np.nonzero(self.torsion > 1)[0]
        self.invariants = [int(t) for t in self.torsion[self._nontrivial]]

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    def coords(self, v) -> np.ndarray:
        u = (self.U @ (np.asarray(v, dtype=np.int64) % self.m)) % self.m
        return u % self.torsion

    def reduced_coords(self, v) -> tuple[int, ...]:
        return tuple(int(x) for x in self.coords(v)[self._nontrivial])

    def is_trivial(self, v) -> bool:
        return not any(self.reduced_coords(v))

    def representative(self, reduced) -> np.ndarray:
        reduced = tuple(reduced)
        if len(reduced) != len(self._nontrivial):
            raise ValidationError("coordinate tuple has wrong length")
        full = np.zeros(self.k, dtype=np.int64)
        full[self._nontrivial] = reduced
        return (self.Uinv @ full) % self.m

    def enumerate_coords(self):
        """All coordinate tuples, in lexicographic order."""
        yield from itertools.product(*(range(t) for t in self.invariants))
