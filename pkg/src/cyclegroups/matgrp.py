"""Projective linear groups as permutation groups.

PGL₂(q), PSL₂(q) and PΓL₂(q) act on the q+1 points of the projective line;
Aut(PSL₃(q)) for tiny q acts on the points and lines of the projective plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import gcd

import numpy as np

from .field import FqField, make_field
from .group import ConcreteGroup, enumerate_from_generators
from .group.automorphism import self_carrier
from .numtheory import prime_power


def _check_q(q: int) -> tuple[int, int]:
    pf = prime_power(q)
    if pf is None:
        raise ValueError(f"{q} is not a prime power")
    if q < 4:
        raise ValueError("projective line groups here need q >= 4")
    return pf


class _Arith:
    """Full addition/multiplication/inverse tables over integer codes."""

    def __init__(self, F: FqField):
        q = F.q
        codes = np.arange(q)
        self.F = F
        self.add = np.stack([F.add_codes(np.full(q, a), codes) for a in range(q)])
        self.mul = np.stack([F.mul_codes(np.full(q, a), codes) for a in range(q)])
        self.neg = F.neg_codes(codes)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = F.inv_code(a)
        self.inv = inv
        self.square = np.array([F.is_square_code(a) for a in range(q)])

    def sub(self, a, b):
        return self.add[a, self.neg[b]]


@dataclass(frozen=True)
class ProjectiveLine:
    """Points of P¹(GF(q)): index 0 is [1:0], index 1+a is [a:1] for the field code a."""

    field: FqField

    @property
    def size(self) -> int:
        return self.field.q + 1

    def point(self, i: int) -> tuple[int, int]:
        return (1, 0) if i == 0 else (i - 1, 1)

    def index(self, x: int, y: int) -> int:
        """Index of the point [x:y] given as field codes (not both zero)."""
        ar = _arith(self.field)
        if y == 0:
            if x == 0:
                raise ValueError("[0:0] is not a point")
            return 0
        return 1 + int(ar.mul[x, ar.inv[y]])

    @cached_property
    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.size
        xs = np.array([self.point(i)[0] for i in range(n)])
        ys = np.array([self.point(i)[1] for i in range(n)])
        return xs, ys

    def mobius(self, a: int, b: int, c: int, d: int) -> np.ndarray:
        """Permutation of the points induced by the matrix [[a, b], [c, d]] on column vectors."""
        ar = _arith(self.field)
        xs, ys = self.vectors
        nx = ar.add[ar.mul[a, xs], ar.mul[b, ys]]
        ny = ar.add[ar.mul[c, xs], ar.mul[d, ys]]
        out = np.where(ny == 0, 0, 1 + ar.mul[nx, ar.inv[ny]])
        if len(np.unique(out)) != self.size:
            raise ValueError("singular matrix")
        return out.astype(np.int32)

    def frobenius_map(self) -> np.ndarray:
        """[x:y] ↦ [x^p:y^p]."""
        F = self.field
        out = [0] + [1 + F.pow_code(a, F.p) for a in range(F.q)]
        return np.array(out, dtype=np.int32)


@lru_cache(maxsize=None)
def _arith(F: FqField) -> _Arith:
    return _Arith(F)


def _lift(line: ProjectiveLine, perm) -> tuple[int, int, int, int] | None:
    """A matrix inducing ``perm``, recovered from the images of ∞, 0, 1; None if no Möbius map does."""
    ar = _arith(line.field)
    A, B, C = (line.point(int(perm[i])) for i in (0, 1, 2))
    D = ar.sub(ar.mul[A[0], B[1]], ar.mul[B[0], A[1]])
    if D == 0:
        return None
    # solve l1·A + l2·B = C
    l1 = ar.mul[ar.sub(ar.mul[C[0], B[1]], ar.mul[B[0], C[1]]), ar.inv[D]]
    l2 = ar.mul[ar.sub(ar.mul[A[0], C[1]], ar.mul[C[0], A[1]]), ar.inv[D]]
    if l1 == 0 or l2 == 0:
        return None
    a, c = int(ar.mul[l1, A[0]]), int(ar.mul[l1, A[1]])
    b, d = int(ar.mul[l2, B[0]]), int(ar.mul[l2, B[1]])
    return a, b, c, d


def is_mobius(line: ProjectiveLine, perm) -> bool:
    """True iff ``perm`` is induced by some invertible 2×2 matrix (i.e. lies in PGL₂(q))."""
    m = _lift(line, perm)
    if m is None:
        return False
    return bool(np.array_equal(line.mobius(*m), np.asarray(perm)))


def in_psl2(line: ProjectiveLine, perm) -> bool:
    """Membership of an element of PGL₂(q) in PSL₂(q): the lifted determinant is a square."""
    m = _lift(line, perm)
    if m is None or not np.array_equal(line.mobius(*m), np.asarray(perm)):
        raise ValueError("not an element of PGL2(q)")
    ar = _arith(line.field)
    a, b, c, d = m
    det = ar.sub(ar.mul[a, d], ar.mul[b, c])
    return bool(ar.square[det])


def _line_and_gens(q: int):
    p, f = _check_q(q)
    F = make_field(p, f)
    line = ProjectiveLine(F)
    z = F.primitive_code
    zi = F.inv_code(z)
    sl_gens = [line.mobius(1, 1, 0, 1), line.mobius(1, 0, 1, 1), line.mobius(z, 0, 0, zi)]
    twist = line.mobius(z, 0, 0, 1)
    return line, sl_gens, twist


def _annotate(G: ConcreteGroup, line: ProjectiveLine, expected: int) -> ConcreteGroup:
    if G.order != expected:
        raise AssertionError(f"{G.name} has order {G.order}, expected {expected}")
    G.line = line
    return G


@lru_cache(maxsize=None)
def build_pgammal2(q: int) -> ConcreteGroup:
    """PΓL₂(q) = Aut(PSL₂(q)) on the projective line; a complete group."""
    line, sl, twist = _line_and_gens(q)
    p, f = prime_power(q)
    gens = sl + [twist]
    if f > 1:
        gens.append(line.frobenius_map())
    G = enumerate_from_generators(
        gens, f"PGammaL2:{q}", tags={"centerless", "indecomposable", "complete"}
    )
    self_carrier(G)
    return _annotate(G, line, f * q * (q * q - 1))


@lru_cache(maxsize=None)
def build_pgl2(q: int) -> ConcreteGroup:
    line, sl, twist = _line_and_gens(q)
    G = enumerate_from_generators(
        sl + [twist],
        f"PGL2:{q}",
        carrier=lambda: build_pgammal2(q),
        tags={"centerless", "indecomposable"},
    )
    return _annotate(G, line, q * (q * q - 1))


@lru_cache(maxsize=None)
def build_psl2(q: int) -> ConcreteGroup:
    line, sl, _ = _line_and_gens(q)
    G = enumerate_from_generators(
        sl,
        f"PSL2:{q}",
        carrier=lambda: build_pgammal2(q),
        tags={"centerless", "indecomposable", "nonabelian_simple"},
    )
    return _annotate(G, line, q * (q * q - 1) // gcd(2, q - 1))


def psl_mask(G: ConcreteGroup) -> np.ndarray:
    """For a group built on the projective line: which elements lie in PSL₂(q)."""
    if "psl_mask" not in G.cache:
        G.cache["psl_mask"] = np.array([in_psl2(G.line, row) for row in G.perms])
    return G.cache["psl_mask"]


def pgl_mask(G: ConcreteGroup) -> np.ndarray:
    """Which elements are Möbius maps (lie in PGL₂(q))."""
    if "pgl_mask" not in G.cache:
        G.cache["pgl_mask"] = np.array([is_mobius(G.line, row) for row in G.perms])
    return G.cache["pgl_mask"]


@dataclass(frozen=True)
class ElementClass:
    tag: str  # identity | unipotent | split-torus | nonsplit-torus
    order: int
    fixed_points: int


def classify_pgl2_element(G: ConcreteGroup, i: int) -> ElementClass:
    """Classify an element of PGL₂(q) by its fixed points on the projective line.

    Unipotent elements fix one point, split-torus elements two, nonsplit-torus
    elements none.  The element order is checked against the class.
    """
    row = G.perms[i]
    q = G.line.field.q
    p = G.line.field.p
    fixed = int((row == np.arange(len(row))).sum())
    order = G.element_order(i)
    if fixed == len(row):
        tag = "identity"
    elif fixed == 1:
        tag = "unipotent"
        ok = order == p
    elif fixed == 2:
        tag = "split-torus"
        ok = (q - 1) % order == 0
    elif fixed == 0:
        tag = "nonsplit-torus"
        ok = (q + 1) % order == 0
    else:
        raise ValueError("not an element of PGL2(q): a nonidentity Möbius map fixes at most 2 points")
    if tag != "identity" and not ok:
        raise AssertionError(f"order {order} inconsistent with class {tag}")
    return ElementClass(tag, order, fixed)


# --- the projective plane ---------------------------------------------------


def _plane_points(F: FqField) -> list[tuple[int, int, int]]:
    """Normalized vectors of GF(q)³ (first nonzero coordinate equal to 1)."""
    out = []
    for v in product(range(F.q), repeat=3):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            out.append(tuple(v))
    return out


def _normalize(ar: _Arith, v) -> tuple[int, int, int]:
    lead = next(c for c in v if c)
    s = ar.inv[lead]
    return tuple(int(ar.mul[s, c]) for c in v)


def _matvec(ar: _Arith, M, v):
    out = []
    for row in M:
        acc = 0
        for m, x in zip(row, v):
            acc = ar.add[acc, ar.mul[m, x]]
        out.append(int(acc))
    return out


def _inverse_transpose(ar: _Arith, M):
    """(M⁻¹)ᵀ via the adjugate: cofactor matrix divided by the determinant."""
    def minor(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        a, b = M[rows[0]][cols[0]], M[rows[0]][cols[1]]
        c, d = M[rows[1]][cols[0]], M[rows[1]][cols[1]]
        return ar.sub(ar.mul[a, d], ar.mul[b, c])

    cof = [[int(minor(i, j)) if (i + j) % 2 == 0 else int(ar.neg[minor(i, j)]) for j in range(3)] for i in range(3)]
    det = 0
    for j in range(3):
        det = ar.add[det, ar.mul[M[0][j], cof[0][j]]]
    if det == 0:
        raise ValueError("singular matrix")
    di = ar.inv[det]
    return [[int(ar.mul[di, cof[i][j]]) for j in range(3)] for i in range(3)]


@lru_cache(maxsize=None)
def build_psl3_with_aut(q: int) -> ConcreteGroup:
    """Aut(PSL₃(q)) on the points and lines of PG(2, q).

    Points occupy indices 0..N-1 and lines N..2N-1 (N = q²+q+1), both listed as
    normalized vectors; a line is the set of points orthogonal to its vector.
    Generated by transvections, a diagonal twist, the Frobenius map on
    coordinates and the polarity swapping point v with line v.
    """
    p, f = prime_power(q) or (0, 0)
    if p == 0 or q > 4:
        raise ValueError("only q in {2, 3, 4} is supported")
    F = make_field(p, f)
    ar = _arith(F)
    pts = _plane_points(F)
    N = len(pts)
    where = {v: i for i, v in enumerate(pts)}

    def action(M):
        Mt = _inverse_transpose(ar, M)
        img = [where[_normalize(ar, _matvec(ar, M, v))] for v in pts]
        img += [N + where[_normalize(ar, _matvec(ar, Mt, v))] for v in pts]
        return np.array(img, dtype=np.int32)

    gens = []
    for i in range(3):
        for j in range(3):
            if i != j:
                M = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
                M[i][j] = 1
                gens.append(action(M))
    z = F.primitive_code
    gens.append(action([[z, 0, 0], [0, 1, 0], [0, 0, 1]]))
    if f > 1:
        frob = [where[tuple(F.pow_code(c, p) for c in v)] for v in pts]
        gens.append(np.array(frob + [N + k for k in frob], dtype=np.int32))
    polarity = np.array([N + k for k in range(N)] + list(range(N)), dtype=np.int32)
    gens.append(polarity)
    G = enumerate_from_generators(gens, f"AutPSL3:{q}", tags={"centerless", "indecomposable", "complete"})
    self_carrier(G)
    G.plane_size = N
    g = gcd(3, q - 1)
    psl_order = q**3 * (q**2 - 1) * (q**3 - 1) // g
    expected = psl_order * g * f * 2
    if G.order != expected:
        raise AssertionError(f"AutPSL3:{q} has order {G.order}, expected {expected}")
    return G


def build_psl3_3_with_aut() -> ConcreteGroup:
    """Aut(PSL₃(3)) of order 11232 on the 13 points and 13 lines of PG(2, 3)."""
    return build_psl3_with_aut(3)


def psl3_socle(A: ConcreteGroup):
    """The socle PSL₃(q) inside :func:`build_psl3_with_aut` (q ∈ {2, 3}).

    For these q, PSL₃(q) = PGL₃(q), which is exactly the set of elements mapping
    points to points.
    """
    N = A.plane_size
    if A.order != 2 * _psl3_order(N):
        raise ValueError("socle shortcut only valid when Aut = PSL3(q):2")
    keep = np.flatnonzero((A.perms[:, :N] < N).all(axis=1))
    return A.subgroup(keep)


def _psl3_order(N: int) -> int:
    q = {7: 2, 13: 3, 21: 4}[N]
    return q**3 * (q**2 - 1) * (q**3 - 1) // gcd(3, q - 1)


@lru_cache(maxsize=None)
def build_psl3(q: int) -> ConcreteGroup:
    """PSL₃(q) for q ∈ {2, 3} as a group on points and lines, with Aut(PSL₃(q)) as carrier."""
    A = build_psl3_with_aut(q)
    S = psl3_socle(A)
    H = S.as_group(f"PSL3:{q}")
    H.carrier_factory = lambda: A
    H.tags = frozenset({"centerless", "indecomposable", "nonabelian_simple"})
    return H
