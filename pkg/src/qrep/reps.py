"""Linear and quandle representations of finite groups over ℂ.

A linear representation assigns matrices multiplicatively, ``ρ(g)ρ(h) =
ρ(gh)``. A quandle representation of the conjugation quandle assigns matrices
intertwining conjugation, ``ρ(g h g⁻¹) = ρ(g) ρ(h) ρ(g)⁻¹``; every linear
representation is one, and so is any character twist ``χ·ρ`` of one by a
function χ constant on conjugacy classes.

Irreducible linear representations are found by decomposing the regular
representation: a random Hermitian matrix averaged over the group action
commutes with it, so its eigenspaces are invariant subspaces; recursion plus a
character-norm irreducibility test splits everything, and character matching
removes duplicate copies.

For an irreducible quandle representation, determinant normalization produces
a projective lift whose scalar defects form a 2-cocycle with values in the
d-th roots of unity (d = dimension). That cocycle's class in ``H²(G, ℤ/n)``
and its image in ``H²(G, ℂ×)`` are the obstruction data: the lift rescales to
an honest quandle representation exactly when the class has a symmetric
representative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohomology import Cocycle2, h2_mod_m, schur_multiplier_Cx
from .errors import ComputationError, ResourceLimitError, ValidationError
from .groups import FiniteGroup
from .quandles import Quandle, QuandleChar, conj_quandle, orbits_and_inner

__all__ = [
    "LinearRep",
    "QuandleRep",
    "ProjectiveData",
    "DecompositionResult",
    "regular_rep",
    "irreducible_reps",
    "is_quandle_rep",
    "commutant_dim",
    "linear_as_quandle_rep",
    "char_times_rep",
    "extract_projective_data",
    "lift_by_symmetric_cocycle",
    "decompose_char_times_linear",
    "pauli_fixture",
]

DEFAULT_TOL = 1e-9
# Roots of unity are snapped onto the exact lattice within this distance.
SNAP_TOL = 1e-6
REP_ORDER_CAP = 64


@dataclass
class LinearRep:
    """A multiplicative matrix representation ``g ↦ matrices[g]``."""

    group: FiniteGroup
    matrices: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        M = np.asarray(self.matrices, dtype=np.complex128)
        n = self.group.order
        if M.ndim != 3 or M.shape[0] != n or M.shape[1] != M.shape[2]:
            raise ValidationError("matrices must have shape (|G|, d, d)")
        self.matrices = M

    @property
    def dim(self) -> int:
        return int(self.matrices.shape[1])

    def multiplicativity_error(self) -> float:
        M, mul = self.matrices, self.group.mul
        prod = np.einsum("gij,hjk->ghik", M, M)
        return float(np.abs(prod - M[mul]).max())

    def character(self) -> np.ndarray:
        return np.einsum("gii->g", self.matrices)

    def char_key(self, digits: int = 6) -> tuple:
        """Rounded character tuple: equal keys ⇔ equivalent irreps."""
        ch = self.character()
        return tuple((round(float(z.real), digits), round(float(z.imag), digits))
                     for z in ch)

    def is_irreducible(self) -> bool:
        ch = self.character()
        norm = float(np.vdot(ch, ch).real) / self.group.order
        return abs(norm - 1.0) < 1e-6


@dataclass
class QuandleRep:
    """Matrices indexed by quandle points, expected to intertwine ``▷``."""

    quandle: Quandle
    matrices: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        M = np.asarray(self.matrices, dtype=np.complex128)
        if M.ndim != 3 or M.shape[0] != self.quandle.size or M.shape[1] != M.shape[2]:
            raise ValidationError("matrices must have shape (size, d, d)")
        self.matrices = M

    @property
    def dim(self) -> int:
        return int(self.matrices.shape[1])

    @property
    def group(self) -> FiniteGroup | None:
        return self.quandle.group


def regular_rep(G: FiniteGroup) -> LinearRep:
    """The left regular representation by permutation matrices."""
    n = G.order
    M = np.zeros((n, n, n), dtype=np.complex128)
    for g in range(n):
        M[g, G.mul[g], np.arange(n)] = 1.0
    return LinearRep(G, M)


def is_quandle_rep(rep, quandle: Quandle | None = None, tol: float | None = None):
    """Check ``ρ(x ▷ y) ≈ ρ(x) ρ(y) ρ(x)⁻¹`` for all pairs.

    ``rep`` may be a :class:`QuandleRep` or a raw matrix array (then
    ``quandle`` is required). Returns ``(True, None)`` or ``(False, (x, y))``
    for the first failing pair; the comparison threshold is ``tol · d``.
    """
    if isinstance(rep, QuandleRep):
        Q = rep.quandle
        M = rep.matrices
        tol = rep.tol if tol is None else tol
    else:
        if quandle is None:
            raise ValidationError("raw matrices need an explicit quandle")
        Q = quandle
        M = np.asarray(rep, dtype=np.complex128)
    tol = DEFAULT_TOL if tol is None else tol
    d = M.shape[1]
    inv = np.linalg.inv(M)
    thresh = tol * max(1, d)
    for x in range(Q.size):
        conj = M[x] @ M @ inv[x]                  # conj[y] = ρ(x)ρ(y)ρ(x)⁻¹
        diff = np.abs(conj - M[Q.op[x]])
        errs = diff.reshape(Q.size, -1).max(axis=1)
        bad = np.nonzero(errs > thresh)[0]
        if bad.size:
            return False, (x, int(bad[0]))
    return True, None


def commutant_dim(matrices, tol: float = DEFAULT_TOL) -> int:
    """Dimension of ``{X : X M = M X for every given M}``.

    Computed as the nullity of the stacked Sylvester operators
    ``X ↦ M X − X M`` via singular values. The commutant of the algebra
    generated by the matrices equals the commutant of the set, so passing
    generators is enough.
    """
    M = np.asarray(matrices, dtype=np.complex128)
    if M.ndim != 3 or M.shape[1] != M.shape[2]:
        raise ValidationError("expected a stack of square matrices")
    k, d, _ = M.shape
    if d > 48 or k * d ** 4 > 2 * 10 ** 10:
        raise ResourceLimitError(
            f"commutant computation for {k} matrices of size {d} is over budget")
    eye = np.eye(d)
    blocks = [np.kron(A, eye) - np.kron(eye, A.T) for A in M]
    L = np.vstack(blocks) if blocks else np.zeros((1, d * d))
    s = np.linalg.svd(L, compute_uv=False)
    scale = max(1.0, float(s.max()) if s.size else 1.0)
    return int(d * d - np.count_nonzero(s > tol * scale))


def _default_rng_stream(seed: int, attempt: int):
    return np.random.default_rng([seed, attempt])


def irreducible_reps(G: FiniteGroup, seed: int = 0, tol: float = DEFAULT_TOL,
                     max_attempts: int = 8) -> list[LinearRep]:
    """All irreducible representations up to equivalence, deterministically.

    Decomposes the regular representation with seeded randomness; the output
    is sorted by (dimension, rounded character) and validated to satisfy
    ``Σ dᵢ² = |G|``.
    """
    n = G.order
    if n > REP_ORDER_CAP:
        raise ResourceLimitError(
            f"group order {n} exceeds the representation cap {REP_ORDER_CAP}")
    act = G.mul[G.inv]          # act[g, a] = g^{-1} a; (R(g)B)[a] = B[act[g, a]]

    def subrep(B: np.ndarray) -> np.ndarray:
        # matrices of the action on the column space of B: M(g) = B† R(g) B,
        # using that the regular representation only permutes rows
        return np.stack([B.conj().T @ B[act[g]] for g in range(n)])

    def char_norm(mats: np.ndarray) -> float:
        ch = np.einsum("gii->g", mats)
        return float(np.vdot(ch, ch).real) / n

    def split(B: np.ndarray, rng, depth: int = 0) -> list[np.ndarray]:
        k = B.shape[1]
        if k == 0:
            return []
        mats = subrep(B)
        if char_norm(mats) < 1.0 + 1e-6:
            return [B]
        for _ in range(6):
            A = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
            Hmat = (A + A.conj().T) / 2
            T = np.zeros((k, k), dtype=np.complex128)
            for g in range(n):
                T += mats[g] @ Hmat @ mats[g].conj().T
            T = (T + T.conj().T) / (2 * n)
            evals, evecs = np.linalg.eigh(T)
            atol = 1e-8 * max(1.0, float(np.abs(evals).max()))
            clusters: list[list[int]] = [[0]]
            for i in range(1, k):
                if evals[i] - evals[i - 1] <= atol:
                    clusters[-1].append(i)
                else:
                    clusters.append([i])
            if len(clusters) == 1:
                continue  # unlucky H: T is scalar on a reducible space
            out = []
            for cl in clusters:
                out.extend(split(B @ evecs[:, cl], rng, depth + 1))
            return out
        raise ComputationError("failed to split a reducible invariant subspace")

    last_error: Exception | None = None
    for attempt in range(max_attempts):
        rng = _default_rng_stream(seed, attempt)
        try:
            bases = split(np.eye(n, dtype=np.complex128), rng)
        except ComputationError as exc:
            last_error = exc
            continue
        reps: dict[tuple, LinearRep] = {}
        ok = True
        for B in bases:
            mats = np.stack([B.conj().T @ B[act[g]] for g in range(n)])
            rep = LinearRep(G, mats, tol=tol)
            if rep.multiplicativity_error() > tol * max(1, rep.dim) * 10:
                ok = False
                break
            key = rep.char_key()
            if key not in reps:
                reps[key] = rep
        if not ok:
            last_error = ComputationError("subrepresentation not multiplicative")
            continue
        found = list(reps.values())
        if sum(r.dim ** 2 for r in found) == n:
            found.sort(key=lambda r: (r.dim, r.char_key()))
            return found
        last_error = ComputationError(
            f"irreducible dimensions {sorted(r.dim for r in found)} do not "
            f"satisfy the sum-of-squares identity for |G| = {n}")
    raise last_error if last_error else ComputationError("decomposition failed")


def linear_as_quandle_rep(rho: LinearRep) -> QuandleRep:
    """View a linear representation as a representation of the conjugation
    quandle (multiplicativity implies the intertwining law)."""
    return QuandleRep(conj_quandle(rho.group), rho.matrices.copy(), tol=rho.tol)


def char_times_rep(char: QuandleChar, rep) -> QuandleRep:
    """The pointwise product ``x ↦ χ(x)·ρ(x)``.

    If χ is constant on orbits (it is, by construction) and ρ is a quandle
    representation, the product is again a quandle representation.
    """
    if isinstance(rep, LinearRep):
        rep = linear_as_quandle_rep(rep)
    units = char.units_vector()
    if len(units) != rep.quandle.size:
        raise ValidationError("character and representation sizes differ")
    return QuandleRep(rep.quandle, units[:, None, None] * rep.matrices,
                      tol=rep.tol)


@dataclass
class ProjectiveData:
    """Determinant-normalized lift of an irreducible quandle representation
    and its cocycle obstruction.

    ``lift[g]`` has determinant 1 and satisfies
    ``lift(g) lift(h) = ω(g,h) lift(gh)`` with ω(g,h) a d-th root of unity;
    ``cocycle`` stores ω additively over ℤ/n via the embedding μ_d ⊆ μ_n.
    ``ambient_coords`` are the class coordinates in H²(G, ℤ/n) and
    ``cx_coords`` the image in H²(G, ℂ×); the latter vanishing is equivalent
    to the representation being a character twist of a linear representation.
    """

    group: FiniteGroup
    dim: int
    lift: np.ndarray
    cocycle: Cocycle2
    ambient_coords: tuple[int, ...]
    cx_coords: tuple[int, ...]
    max_residual: float

    @property
    def cx_trivial(self) -> bool:
        return not any(self.cx_coords)


def _principal_root(z: complex, d: int) -> complex:
    """The principal d-th root (argument in (−π/d, π/d])."""
    r = abs(z) ** (1.0 / d)
    return r * np.exp(1j * np.angle(z) / d)


def extract_projective_data(rep, tol: float | None = None) -> ProjectiveData:
    """Extract the projective lift and cocycle class of an irreducible
    quandle (or linear) representation.

    The matrices are rescaled to determinant 1 with the principal root; the
    scalar ``ρ̂(g)ρ̂(h)ρ̂(gh)⁻¹`` is read off via the trace, verified to be
    scalar within ``tol·d``, and snapped to the d-th roots of unity. The
    snapped values form an exact 2-cocycle with values in μ_d ⊆ μ_n.
    """
    if isinstance(rep, LinearRep):
        G = rep.group
        M = rep.matrices
        tol = rep.tol if tol is None else tol
    elif isinstance(rep, QuandleRep):
        if rep.group is None:
            raise ValidationError("quandle representation has no source group")
        G = rep.group
        M = rep.matrices
        tol = rep.tol if tol is None else tol
    else:
        raise ValidationError("expected a LinearRep or QuandleRep")
    tol = DEFAULT_TOL if tol is None else tol
    n = G.order
    d = int(M.shape[1])
    if commutant_dim(M, tol=max(tol, 1e-12)) != 1:
        raise ValidationError("projective extraction requires an irreducible "
                              "representation (trivial commutant)")
    if n % d != 0:
        raise ComputationError(
            f"dimension {d} does not divide |G| = {n}; cannot embed the "
            "cocycle values into the n-th roots of unity")

    dets = np.linalg.det(M)
    if np.any(np.abs(dets) < 1e-12):
        raise ValidationError("matrices must be invertible")
    roots = np.array([_principal_root(z, d) for z in dets])
    lift = M / roots[:, None, None]
    lift_inv = np.linalg.inv(lift)

    add = np.zeros((n, n), dtype=np.int64)
    max_resid = 0.0
    step = n // d
    for g in range(n):
        S = lift[g] @ lift @ lift_inv[G.mul[g]]   # S[h] = ρ̂(g)ρ̂(h)ρ̂(gh)⁻¹
        lam = np.einsum("hii->h", S) / d
        resid = np.abs(S - lam[:, None, None] * np.eye(d)).reshape(n, -1).max(axis=1)
        max_resid = max(max_resid, float(resid.max()))
        if resid.max() > tol * max(1, d) * 10:
            raise ComputationError(
                "matrices are not projective: scalar defect has residual "
                f"{float(resid.max()):.2e}")
        k = np.rint(d * np.angle(lam) / (2 * np.pi)).astype(np.int64) % d
        snapped = np.exp(2j * np.pi * k / d)
        if np.abs(lam - snapped).max() > SNAP_TOL:
            raise ComputationError("cocycle scalar is not a d-th root of unity "
                                   f"within {SNAP_TOL}")
        add[g] = (k * step) % n

    cocycle = Cocycle2(G, n, add)
    if not cocycle.is_cocycle():
        raise ComputationError("extracted scalars do not satisfy the cocycle "
                               "identity exactly after snapping")
    ambient = h2_mod_m(G, n)
    coords = ambient.coordinates(cocycle)
    cx = schur_multiplier_Cx(G)
    return ProjectiveData(
        group=G, dim=d, lift=lift, cocycle=cocycle,
        ambient_coords=coords, cx_coords=cx.project_coords(coords),
        max_residual=max_resid,
    )


def lift_by_symmetric_cocycle(data: ProjectiveData, alpha_sym: Cocycle2,
                              beta, tol: float | None = None) -> QuandleRep:
    """Rescale the projective lift into an honest quandle representation.

    Preconditions (verified): ``alpha_sym`` is a symmetric 2-cocycle at a
    modulus m that is a multiple of the extracted cocycle's modulus n (the
    extracted cocycle embeds as ``(m/n)·values``), and the 1-cochain ``beta``
    (one value per group element) satisfies
    ``δβ ≡ cocycle − alpha_sym (mod m)`` after that embedding. The rescaled
    family ``γ(g) = e^{−2πi β(g)/m} · lift(g)`` then has cocycle
    ``alpha_sym`` (dividing by the coboundary root of unity), which is
    exactly the obstruction equation for the quandle intertwining law; the
    result is verified with :func:`is_quandle_rep` before being returned.
    """
    from .cohomology import is_symmetric

    tol = DEFAULT_TOL if tol is None else tol
    G = data.group
    n = data.cocycle.modulus
    m = alpha_sym.modulus
    if alpha_sym.group is not G:
        raise ValidationError("symmetric cocycle lives on a different group")
    if m % n != 0:
        raise ValidationError(
            f"alpha_sym modulus {m} must be a multiple of the extracted "
            f"cocycle modulus {n}")
    if not alpha_sym.is_cocycle() or not is_symmetric(alpha_sym):
        raise ValidationError("alpha_sym must be a symmetric 2-cocycle")
    embedded = (data.cocycle.values * (m // n)) % m
    b = np.asarray(beta, dtype=np.int64).reshape(G.order) % m
    delta = (b[:, None] + b[None, :] - b[G.mul]) % m
    if ((embedded - alpha_sym.values - delta) % m).any():
        raise ValidationError("beta does not satisfy "
                              "δβ = cocycle − alpha_sym (mod m)")
    scal = np.exp(-2j * np.pi * b / m)
    gamma = scal[:, None, None] * data.lift
    rep = QuandleRep(conj_quandle(G), gamma, tol=tol)
    ok, witness = is_quandle_rep(rep)
    if not ok:
        raise ComputationError(
            f"rescaled lift failed the quandle law at {witness}")
    return rep


@dataclass
class DecompositionResult:
    """A factorization ``ρ = χ·ρ̃`` of a quandle representation into a class
    function times a linear irreducible."""

    character_values: np.ndarray
    linear_rep: LinearRep
    max_error: float

    def reconstruction(self) -> np.ndarray:
        return self.character_values[:, None, None] * self.linear_rep.matrices


def decompose_char_times_linear(rho, candidates,
                                tol: float | None = None) -> DecompositionResult | None:
    """Factor ``ρ`` as ``χ·ρ̃`` with ρ̃ among ``candidates``, or return None.

    For each candidate of matching dimension, the scalars
    ``ρ(g) ρ̃(g)⁻¹`` must be near-scalar matrices; the resulting χ must be
    constant on conjugacy classes. The first candidate that works (in input
    order) is returned, so the output is deterministic. Failure is a value
    (None), not an exception: a nontrivial projective class makes every
    candidate fail.
    """
    if isinstance(rho, LinearRep):
        G = rho.group
        M = rho.matrices
        tol = rho.tol if tol is None else tol
    elif isinstance(rho, QuandleRep):
        if rho.group is None:
            raise ValidationError("quandle representation has no source group")
        G = rho.group
        M = rho.matrices
        tol = rho.tol if tol is None else tol
    else:
        raise ValidationError("expected a LinearRep or QuandleRep")
    tol = DEFAULT_TOL if tol is None else tol
    n = G.order
    d = int(M.shape[1])
    classes = G.conjugacy_classes

    for cand in candidates:
        if cand.dim != d:
            continue
        S = M @ np.linalg.inv(cand.matrices)
        lam = np.einsum("gii->g", S) / d
        resid = np.abs(S - lam[:, None, None] * np.eye(d)).reshape(n, -1).max(axis=1)
        err = float(resid.max())
        if err > tol * max(1, d) * 10:
            continue
        class_ok = True
        for cl in classes:
            vals = lam[list(cl)]
            if np.abs(vals - vals[0]).max() > SNAP_TOL:
                class_ok = False
                break
        if not class_ok:
            continue
        return DecompositionResult(character_values=lam, linear_rep=cand,
                                   max_error=err)
    return None


def pauli_fixture():
    """The Klein four-group with its Pauli projective family.

    Elements of ``klein4()`` are (0,0), (0,1), (1,0), (1,1) in order; the
    returned matrices are I, σ_x, σ_z, σ_x σ_z. They realize conjugation
    projectively but anticommutation makes every scalar rescaling fail the
    quandle law: the extracted class is the nontrivial element of
    ``H²(K4, ℂ×) ≅ ℤ/2``.
    """
    from .catalog import klein4

    G = klein4()
    sx = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    sz = np.array([[1, 0], [0, -1]], dtype=np.complex128)
    mats = np.stack([np.eye(2, dtype=np.complex128), sx, sz, sx @ sz])
    return G, mats
