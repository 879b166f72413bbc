"""Affine maps g ↦ x·α(g) of a finite group, their shifts, orders and cycle lengths.

For an automorphism α of order m, the shift of x is
``sh_α(x) = x·α(x)·α²(x)⋯α^{m-1}(x)`` and the affine map ``A = A_{x,α}`` has
order ``m·ord(sh_α(x))``.  Conjugating A by an automorphism β gives
``A_{β(x), βαβ⁻¹}``, a map with the same cycle type, so maximum cycle lengths
only need α to run over class representatives of Aut(G).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import (
    Automorphism,
    AutomorphismGroup,
    ConcreteGroup,
    GuardExceeded,
    Subgroup,
    automorphism_group,
    centralizer,
    coset_labels,
    is_semisimple,
)
from .numtheory import FactoredInteger
from .perm import batch_cycle_stats, batch_point_cycle_lengths

MAX_AFFINE_SWEEP = 10**7
_CHUNK_ENTRIES = 4_000_000


@dataclass(frozen=True)
class AffineMap:
    group: ConcreteGroup
    x: int
    alpha: Automorphism

    def __call__(self, g):
        return self.group.mul_many(self.x, self.alpha.mapping[g])

    def permutation(self) -> np.ndarray:
        """The map as a permutation of element indices."""
        return self.group.mul_many(self.x, self.alpha.mapping)

    @property
    def order(self) -> int:
        return affine_order(self)


@dataclass(frozen=True)
class AffineWitness:
    """Where a maximum was attained: automorphism (carrier index), translation, starting element."""

    value: int
    alpha: int
    x: int
    start: int | None = None


def shift_n(G: ConcreteGroup, x: int, alpha: Automorphism, n: int) -> int:
    """x·α(x)·…·α^{n-1}(x)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s = cur = int(x)
    for _ in range(n - 1):
        cur = int(alpha.mapping[cur])
        s = G.mul(s, cur)
    return s


def shift(G: ConcreteGroup, x: int, alpha: Automorphism) -> int:
    return shift_n(G, x, alpha, alpha.order)


def shifts_all(G: ConcreteGroup, mapping: np.ndarray, n: int, xs=None) -> np.ndarray:
    """Vectorized ``shift_n`` over many translations (all elements by default)."""
    xs = np.arange(G.order) if xs is None else np.asarray(xs, dtype=np.int64)
    s = cur = xs
    for _ in range(n - 1):
        cur = mapping[cur]
        s = G.mul_many(s, cur)
    return s


def affine_order(A: AffineMap) -> int:
    """ord(A_{x,α}) = ord(α)·ord(sh_α(x))."""
    m = A.alpha.order
    return m * A.group.element_order(shift_n(A.group, A.x, A.alpha, m))


def divisor_LL(G: ConcreteGroup, x: int, alpha: Automorphism) -> int:
    """ord(sh_α(x)) times the full power of each prime of ord(α) that also divides ord(sh_α(x))."""
    m = alpha.order
    o = G.element_order(shift_n(G, x, alpha, m))
    out = o
    if o > 1:
        fa = FactoredInteger.of(m)
        for p in FactoredInteger.of(o).primes():
            out *= p ** fa.valuation(p)
    return out


def _affine_rows(G: ConcreteGroup, xs: np.ndarray, mapping: np.ndarray) -> np.ndarray:
    t = G.table
    if t is not None:
        return t[np.ix_(xs, mapping)]
    return G.mul_many(xs[:, None], mapping[None, :])


def _sweep(G: ConcreteGroup, mapping: np.ndarray):
    """Yield (xs, lam, order) chunks for all translations with a fixed automorphism."""
    n = G.order
    step = max(1, _CHUNK_ENTRIES // n)
    for s in range(0, n, step):
        xs = np.arange(s, min(n, s + step))
        rows = _affine_rows(G, xs, mapping)
        lam, order = batch_cycle_stats(rows)
        yield xs, rows, lam, order


def _aut(G: ConcreteGroup, aut: AutomorphismGroup | None) -> AutomorphismGroup:
    return aut if aut is not None else automorphism_group(G)


def lambda_aff_exact(
    G: ConcreteGroup,
    aut: AutomorphismGroup | None = None,
    max_sweep: int = MAX_AFFINE_SWEEP,
    all_automorphisms: bool = False,
) -> AffineWitness:
    """Maximum cycle length over all affine maps, by full cycle decomposition.

    By default α runs over class representatives of Aut(G) (ascending carrier
    index); ``all_automorphisms=True`` runs the plain double loop.  The witness
    is the first (α, x, start) attaining the maximum in that order.
    """
    aut = _aut(G, aut)
    alphas = np.arange(aut.order) if all_automorphisms else np.sort(aut.class_representatives())
    maps = len(alphas) * G.order
    if maps > max_sweep:
        raise GuardExceeded("max affine sweep", max_sweep, maps)
    best = None
    for a in alphas:
        mapping = aut.mapping(int(a))
        for xs, rows, lam, _ in _sweep(G, mapping):
            k = int(np.argmax(lam))
            if best is None or lam[k] > best.value:
                pts = batch_point_cycle_lengths(rows[k])[0]
                start = int(np.argmax(pts == lam[k]))
                best = AffineWitness(int(lam[k]), int(a), int(xs[k]), start)
    return best


def lambda_aff_semisimple(G: ConcreteGroup, aut: AutomorphismGroup | None = None) -> AffineWitness:
    """Λ_aff of a semisimple group as the maximum of ord(α)·ord(sh_α(x)).

    For semisimple groups every affine map has a cycle as long as its order,
    so the maximum order is the maximum cycle length; no cycle decomposition
    is needed.
    """
    if not is_semisimple(G):
        raise ValueError(f"{G.name} is not semisimple; use lambda_aff_exact")
    aut = _aut(G, aut)
    orders = aut.element_orders
    best = None
    for a in np.sort(aut.class_representatives()):
        m = int(orders[a])
        sh = shifts_all(G, aut.mapping(int(a)), m)
        vals = m * G.orders[sh]
        k = int(np.argmax(vals))
        if best is None or vals[k] > best.value:
            best = AffineWitness(int(vals[k]), int(a), k)
    return best


def lambda_auto(G: ConcreteGroup, aut: AutomorphismGroup | None = None, fast: bool = False) -> int:
    """Maximum cycle length of an automorphism acting on the elements of G.

    ``fast=True`` returns mao(G), valid for semisimple G where every
    automorphism has a regular cycle.
    """
    aut = _aut(G, aut)
    if fast:
        if not is_semisimple(G):
            raise ValueError(f"{G.name} is not semisimple; the fast path does not apply")
        return aut.meo
    reps = np.sort(aut.class_representatives())
    maps = np.stack([aut.mapping(int(a)) for a in reps])
    return int(batch_cycle_stats(maps)[0].max())


@dataclass(frozen=True)
class RegularCycleReport:
    holds: bool
    maps_checked: int
    counterexample: tuple[int, int] | None = None  # (alpha carrier index, x)


def check_regular_cycles(
    G: ConcreteGroup,
    aut: AutomorphismGroup | None = None,
    max_sweep: int = MAX_AFFINE_SWEEP,
) -> RegularCycleReport:
    """Check Λ(A) = ord(A) for every affine map of a semisimple group, by full decomposition."""
    if not is_semisimple(G):
        raise ValueError(f"{G.name} is not semisimple")
    aut = _aut(G, aut)
    maps = aut.order * G.order
    if maps > max_sweep:
        raise GuardExceeded("max affine sweep", max_sweep, maps)
    checked = 0
    for a in range(aut.order):
        for xs, _, lam, order in _sweep(G, aut.mapping(a)):
            checked += len(xs)
            bad = np.flatnonzero(lam != order)
            if bad.size:
                return RegularCycleReport(False, checked, (a, int(xs[bad[0]])))
    return RegularCycleReport(True, checked)


def fixed_subgroup(alpha: Automorphism) -> Subgroup:
    G = alpha.group
    return G.subgroup(np.flatnonzero(alpha.mapping == np.arange(G.order)))


@dataclass(frozen=True)
class FixStructure:
    points: np.ndarray
    representative: int | None
    fix_alpha: Subgroup

    @property
    def empty(self) -> bool:
        return self.representative is None


def fix_structure(A: AffineMap) -> FixStructure:
    """Fixed points of A; when nonempty they form the left coset f·fix(α) for any fixed f."""
    G = A.group
    perm = A.permutation()
    pts = np.flatnonzero(perm == np.arange(G.order))
    fa = fixed_subgroup(A.alpha)
    if pts.size == 0:
        return FixStructure(pts, None, fa)
    f = int(pts[0])
    coset = np.sort(G.mul_many(f, fa.indices))
    if not np.array_equal(coset, pts):
        raise AssertionError("fixed points are not a coset of fix(alpha)")
    return FixStructure(pts, f, fa)


def check_centralizer_lemma(G: ConcreteGroup, r: int, x: int) -> bool:
    """x·r commutes with sh_{τ_r}(x).

    From τ_r(sh) = r·sh·r⁻¹ and α(sh) = x⁻¹·sh·x.  Whether x lies in a
    subgroup containing C_G(sh) is therefore decided by whether r does.
    """
    tau = Automorphism.inner(G, r)
    s = shift(G, x, tau)
    y = G.mul(x, r)
    return G.mul(y, s) == G.mul(s, y)


def check_centquot(G: ConcreteGroup, B: Subgroup, A: AffineMap) -> bool:
    """If A is the identity on the normal subgroup B, then C_G(B) is normal and A induces the identity on G/C_G(B).

    Returns True when the premise fails or the conclusion holds.
    """
    perm = A.permutation()
    if not np.array_equal(perm[B.indices], B.indices):
        return True
    C = centralizer(G, B.indices)
    for s in G.gens:
        conj = G.mul_many(G.mul_many(s, C.indices), G.inv(s))
        if not C.mask[conj].all():
            return False
    labels = coset_labels(G, C)
    return bool(np.array_equal(labels[perm], labels))


# --- lemma checks ----------------------------------------------------------------


@dataclass
class LemmaCheck:
    """How many instances were tested and how many failed."""

    name: str
    checked: int = 0
    failed: int = 0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and self.failed == 0

    def add(self, ok) -> None:
        ok = np.asarray(ok, dtype=bool)
        self.checked += int(ok.size)
        self.failed += int((~ok).sum())


def _alpha_cycle_lengths(mapping: np.ndarray) -> np.ndarray:
    return batch_point_cycle_lengths(mapping)[0]


def check_affine_lemmas(
    G: ConcreteGroup, aut: AutomorphismGroup | None = None, max_sweep: int = MAX_AFFINE_SWEEP
) -> dict[str, LemmaCheck]:
    """Exhaustive checks over every affine map of G.

    order formula, shift identity α(sh) = x⁻¹·sh·x, shift powers through
    intermediate lengths d, divisibility of cycle lengths by LL, and the
    coset structure of fixed points.
    """
    aut = _aut(G, aut)
    maps = aut.order * G.order
    if maps > max_sweep:
        raise GuardExceeded("max affine sweep", max_sweep, maps)
    n = G.order
    allg = np.arange(n)
    inv = G.inverses
    checks = {k: LemmaCheck(k) for k in ("order_formula", "shift_conjugation", "shift_power", "divisor", "fixed_coset")}
    for a in range(aut.order):
        mapping = aut.mapping(a)
        m = int(aut.element_orders[a])
        sh = shifts_all(G, mapping, m)
        formula = m * G.orders[sh]
        rows = _affine_rows(G, allg, mapping)
        lam, perm_order = batch_cycle_stats(rows)
        checks["order_formula"].add(formula == perm_order)
        conj = G.mul_many(G.mul_many(inv, sh), allg)
        checks["shift_conjugation"].add(mapping[sh] == conj)

        cl = _alpha_cycle_lengths(mapping)
        for d in range(1, m + 1):
            if m % d:
                continue
            sel = np.flatnonzero(d % cl == 0)
            if sel.size:
                partial = shifts_all(G, mapping, d, sel)
                checks["shift_power"].add(G.power_many(partial, m // d) == sh[sel])

        pts = batch_point_cycle_lengths(rows)
        LL = np.array([_ll_value(int(G.orders[s]), m) for s in sh], dtype=np.int64)
        checks["divisor"].add((pts % LL[:, None] == 0).all(axis=1) & (n % LL == 0))

        fa = np.flatnonzero(mapping == allg)
        fixed = rows == allg[None, :]
        for x in np.flatnonzero(fixed.any(axis=1)):
            pts_x = np.flatnonzero(fixed[x])
            coset = np.sort(G.mul_many(int(pts_x[0]), fa))
            checks["fixed_coset"].add(np.array_equal(coset, pts_x))
    return checks


def _ll_value(o: int, m: int) -> int:
    out = o
    if o > 1:
        fa = FactoredInteger.of(m)
        for p in FactoredInteger.of(o).primes():
            out *= p ** fa.valuation(p)
    return out


def check_inner_lemmas(G: ConcreteGroup) -> dict[str, LemmaCheck]:
    """Checks on inner automorphisms τ_r over all pairs of elements.

    centralizer: x·r commutes with sh_{τ_r}(x).
    shift_product: with x = s·r⁻¹, sh_{τ_r}(x) = s^k·r^{-k} where k = ord(τ_r).
    lcm_centerless: ord(A_{sr⁻¹,τ_r}) = lcm(ord s, ord r) (only run when G is centerless).
    lcm_coprime: ord(A_{sr⁻¹,τ_r}) = ord(s)·ord(r) when the orders are coprime.
    """
    n = G.order
    allg = np.arange(n)
    inv = G.inverses
    centerless = bool(centralizer(G, G.gens).order == 1)
    checks = {k: LemmaCheck(k) for k in ("centralizer", "shift_product", "lcm_centerless", "lcm_coprime")}
    for r in range(n):
        tau = G.conj_map(G.perms[r])
        k = Automorphism(G, tau, verify=False).order
        # centralizer lemma over all x
        sh = shifts_all(G, tau, k)
        y = G.mul_many(allg, r)
        checks["centralizer"].add(G.mul_many(y, sh) == G.mul_many(sh, y))
        # parametrize by s: x = s r⁻¹
        xs = G.mul_many(allg, inv[r])
        shx = sh[xs]
        expect = G.mul_many(G.power_many(allg, k), G.power(inv[r], k))
        checks["shift_product"].add(shx == expect)
        order = k * G.orders[shx]
        o_r = int(G.orders[r])
        o_s = G.orders
        if centerless:
            checks["lcm_centerless"].add(order == np.lcm(o_s, o_r))
        cop = np.gcd(o_s, o_r) == 1
        checks["lcm_coprime"].add(order[cop] == (o_s * o_r)[cop])
    if not centerless:
        checks.pop("lcm_centerless")
    return checks


def check_cycle_product(perms, rng: np.random.Generator | None = None, samples: int = 200) -> dict[str, LemmaCheck]:
    """Cycle lengths under a product of permutations.

    product_lcm: the cycle of a tuple has length lcm of the component cycle lengths.
    product_lambda: Λ of the product is at most the product of the Λ values.
    product_regular: if every factor has a regular cycle, so does the product.
    """
    from math import lcm

    from .perm import Permutation, has_regular_cycle, lambda_of, product_index, product_permutation

    rng = rng or np.random.default_rng(0)
    perms = [p if isinstance(p, Permutation) else Permutation(p) for p in perms]
    P = product_permutation(perms)
    degrees = [p.degree for p in perms]
    cls = [batch_point_cycle_lengths(p.array())[0] for p in perms]
    pcl = batch_point_cycle_lengths(P.array())[0]
    checks = {k: LemmaCheck(k) for k in ("product_lcm", "product_lambda", "product_regular")}
    if int(np.prod(degrees)) <= samples:
        tuples = np.ndindex(*degrees)
    else:
        tuples = (tuple(int(rng.integers(0, d)) for d in degrees) for _ in range(samples))
    for coords in tuples:
        idx = product_index(coords, degrees)
        checks["product_lcm"].add(pcl[idx] == lcm(*(int(c[i]) for c, i in zip(cls, coords))))
    checks["product_lambda"].add(lambda_of(P) <= int(np.prod([lambda_of(p) for p in perms])))
    if all(has_regular_cycle(p) for p in perms):
        checks["product_regular"].add(has_regular_cycle(P))
    else:
        checks.pop("product_regular")
    return checks


def check_transfer(G: ConcreteGroup, N: Subgroup, max_sweep: int = MAX_AFFINE_SWEEP) -> dict[str, tuple[int, int]]:
    """Λ(G) ≤ Λ_aff(N)·Λ(G/N) and Λ_aff(G) ≤ Λ_aff(N)·Λ_aff(G/N), exact values on both sides.

    N must be characteristic (e.g. the derived subgroup or the center).
    Returns name → (left side, right side).
    """
    from .group import quotient

    NG = N.as_group(f"{G.name}:N")
    Q, _ = quotient(G, N)
    lam_g = lambda_auto(G)
    aff_g = lambda_aff_exact(G, max_sweep=max_sweep).value
    aff_n = lambda_aff_exact(NG, max_sweep=max_sweep).value
    lam_q = lambda_auto(Q)
    aff_q = lambda_aff_exact(Q, max_sweep=max_sweep).value
    return {
        "automorphism": (lam_g, aff_n * lam_q),
        "affine": (aff_g, aff_n * aff_q),
    }
