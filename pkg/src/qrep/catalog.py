"""Constructors for standard finite groups and a name parser.

Tokens accepted by :func:`parse_group_token` (case-insensitive):

- ``Ck``   cyclic of order k
- ``Dk``   dihedral of order 2k (``D1`` and ``D2`` degenerate to C2 and the
           Klein four-group, with the same multiplication rule)
- ``Sk``   symmetric on k letters (k <= 6)
- ``Ak``   alternating on k letters (3 <= k <= 6)
- ``Q8``   quaternion group
- ``K4`` / ``V4`` / ``KLEIN4``  Klein four-group
- ``SL23`` special linear group of 2x2 matrices over F_3
- products joined with ``x``, e.g. ``C2xC6`` or ``S3xC2``
"""

from __future__ import annotations

import itertools
import re

import numpy as np

from .errors import ValidationError
from .groups import FiniteGroup, direct_product, group_from_closure

__all__ = [
    "cyclic",
    "abelian",
    "klein4",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "sl23",
    "group_from_catalog",
    "parse_group_token",
    "CATALOG_TOKENS",
    "catalog_battery",
]


def cyclic(k: int) -> FiniteGroup:
    """Cyclic group of order k (addition modulo k)."""
    if k < 1:
        raise ValidationError(f"cyclic group order must be positive, got {k}")
    idx = np.arange(k)
    mul = (idx[:, None] + idx[None, :]) % k
    return FiniteGroup(mul, labels=[str(i) for i in range(k)], name=f"C{k}",
                       validate=k <= 256)


def abelian(orders) -> FiniteGroup:
    """Direct sum of cyclic groups of the given orders.

    Elements are tuples in ``itertools.product`` order, so e.g. for
    ``orders=[2, 2]`` the element order is (0,0), (0,1), (1,0), (1,1).
    """
    orders = [int(o) for o in orders]
    if not orders or any(o < 1 for o in orders):
        raise ValidationError(f"invalid cyclic order list {orders}")
    elems = list(itertools.product(*(range(o) for o in orders)))
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            mul[i, j] = index[tuple((x + y) % o for x, y, o in zip(a, b, orders))]
    name = "x".join(f"C{o}" for o in orders)
    labels = ["".join(map(str, e)) if max(orders) <= 10 else str(e) for e in elems]
    return FiniteGroup(mul, labels=labels, name=name, validate=n <= 256)


def klein4() -> FiniteGroup:
    G = abelian([2, 2])
    G.name = "K4"
    return G


def dihedral(k: int) -> FiniteGroup:
    """Dihedral group of order 2k: rotations r^i and reflections s r^i."""
    if k < 1:
        raise ValidationError(f"dihedral parameter must be positive, got {k}")
    # element (i, s): rotation by i composed with s reflections;
    # (i, s) * (j, t) = (i + (-1)^s j mod k, s + t mod 2)
    elems = [(i, s) for s in range(2) for i in range(k)]
    index = {e: n for n, e in enumerate(elems)}
    n = 2 * k
    mul = np.zeros((n, n), dtype=np.int64)
    for a, (i, s) in enumerate(elems):
        for b, (j, t) in enumerate(elems):
            mul[a, b] = index[((i + (j if s == 0 else -j)) % k, (s + t) % 2)]
    labels = [("e" if i == 0 else f"r{i}") if s == 0 else ("s" if i == 0 else f"sr{i}")
              for (i, s) in elems]
    return FiniteGroup(mul, labels=labels, name=f"D{k}", validate=n <= 256)


def _perm_label(p) -> str:
    return "".join(str(x) for x in p)


def _perm_group(perms, name: str) -> FiniteGroup:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(perms):
        for j, b in enumerate(perms):
            mul[i, j] = index[tuple(a[x] for x in b)]
    return FiniteGroup(mul, labels=[_perm_label(p) for p in perms], name=name,
                       validate=n <= 256)


def symmetric(k: int) -> FiniteGroup:
    """Symmetric group on k letters (k <= 6)."""
    if not 1 <= k <= 6:
        raise ValidationError(f"symmetric group supported for 1 <= k <= 6, got {k}")
    return _perm_group(itertools.permutations(range(k)), f"S{k}")


def _parity(p) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return inv % 2


def alternating(k: int) -> FiniteGroup:
    """Alternating group on k letters (3 <= k <= 6)."""
    if not 3 <= k <= 6:
        raise ValidationError(f"alternating group supported for 3 <= k <= 6, got {k}")
    evens = [p for p in itertools.permutations(range(k)) if _parity(p) == 0]
    return _perm_group(evens, f"A{k}")


def quaternion8() -> FiniteGroup:
    """Quaternion group {±1, ±i, ±j, ±k}."""
    # element index = 2 * axis + sign, axes ordered (1, i, j, k)
    axis_mul = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    sign_mul = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]]
    mul = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        ax_a, sg_a = divmod(a, 2)
        for b in range(8):
            ax_b, sg_b = divmod(b, 2)
            ax = axis_mul[ax_a][ax_b]
            sg = (sg_a + sg_b + (sign_mul[ax_a][ax_b] < 0)) % 2
            mul[a, b] = 2 * ax + sg
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return FiniteGroup(mul, labels=labels, name="Q8", validate=True)


def sl23() -> FiniteGroup:
    """SL(2, 3): 2x2 matrices over F_3 with determinant 1 (order 24)."""
    def mm(a, b):
        (a11, a12, a21, a22), (b11, b12, b21, b22) = a, b
        return ((a11 * b11 + a12 * b21) % 3, (a11 * b12 + a12 * b22) % 3,
                (a21 * b11 + a22 * b21) % 3, (a21 * b12 + a22 * b22) % 3)

    gens = [(1, 1, 0, 1), (0, 2, 1, 0)]
    G = group_from_closure(gens, mm, (1, 0, 0, 1),
                           labeler=lambda t: "".join(map(str, t)), name="SL23")
    if G.order != 24:
        raise ValidationError("SL(2,3) construction produced the wrong order")
    return G


_ATOM_RE = re.compile(r"^([A-Z]+)(\d*)$")


def _parse_atom(atom: str) -> FiniteGroup:
    m = _ATOM_RE.match(atom)
    if not m:
        raise ValidationError(f"cannot parse group token {atom!r}")
    kind, num = m.group(1), m.group(2)
    if atom in ("K4", "V4", "KLEIN4"):
        return klein4()
    if atom == "Q8":
        return quaternion8()
    if atom == "SL23":
        return sl23()
    if not num:
        raise ValidationError(f"cannot parse group token {atom!r}")
    k = int(num)
    if kind == "C":
        return cyclic(k)
    if kind == "D":
        return dihedral(k)
    if kind == "S":
        return symmetric(k)
    if kind == "A":
        return alternating(k)
    raise ValidationError(f"unknown group family {atom!r}")


def parse_group_token(token: str) -> FiniteGroup:
    """Build a group from a catalog token such as ``S3``, ``Q8`` or ``C2xC6``."""
    text = token.strip().upper().replace(" ", "").replace("*", "X")
    if not text:
        raise ValidationError("empty group token")
    atoms = text.split("X")
    groups = [_parse_atom(a) for a in atoms]
    out = groups[0]
    for h in groups[1:]:
        out = direct_product(out, h)
    if len(groups) > 1:
        out.name = "x".join(g.name for g in groups)
    return out


# Groups exercised by the verification suite and tests: every cyclic group up
# to order 24, every noncyclic abelian group up to order 16, dihedral groups
# up to order 24, and the classical small nonabelian examples.
CATALOG_TOKENS: list[str] = (
    [f"C{k}" for k in range(1, 25)]
    + ["C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6",
       "C2xC8", "C4xC4", "C2xC2xC4", "C2xC2xC2xC2"]
    + [f"D{k}" for k in range(4, 13)]
    + ["S3", "Q8", "A4", "SL23", "S4"]
)


def catalog_battery() -> list[FiniteGroup]:
    """Instantiate every battery group (deterministic order)."""
    return [parse_group_token(tok) for tok in CATALOG_TOKENS]


def group_from_catalog(name: str, params=()) -> FiniteGroup:
    """Build a group from a family name plus integer parameters.

    Families: ``cyclic(k)``, ``dihedral(k)``, ``symmetric(k)``,
    ``alternating(k)``, ``quaternion8``, ``klein4``, ``sl23``, and
    ``direct_product(k1, k2, ...)`` (direct product of cyclic factors).
    """
    key = name.strip().lower()
    params = [int(p) for p in params]

    def need(count: int) -> None:
        if len(params) != count:
            raise ValidationError(
                f"family {key!r} takes {count} parameter(s), got {len(params)}")

    if key == "cyclic":
        need(1)
        return cyclic(params[0])
    if key == "dihedral":
        need(1)
        return dihedral(params[0])
    if key == "symmetric":
        need(1)
        return symmetric(params[0])
    if key == "alternating":
        need(1)
        return alternating(params[0])
    if key == "quaternion8":
        need(0)
        return quaternion8()
    if key == "klein4":
        need(0)
        return klein4()
    if key == "sl23":
        need(0)
        return sl23()
    if key == "direct_product":
        if not params:
            raise ValidationError("direct_product needs at least one cyclic order")
        return abelian(params)
    raise ValidationError(f"unknown catalog family: {name!r}")
