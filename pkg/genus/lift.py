"""
Generating pairs of D_n lifted from S_n, and the classification of subgroups of B_n onto S_n

A subgroup H of B_n with pi(H) = S_n is pinned down by its kernel
K = {b : [1, b] in H}, an S_n-invariant subspace of GF(2)^n: 0, <(1..1)>,
the even-weight vectors or everything. K is read off a stabilizer chain for
the pi-action whose bottom level collects sign residues as int bitsets.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations as ordered_arrangements
from typing import Dict, List, Optional, Sequence, Tuple

from genus.parallel import first_hit
from genus.triples import TripleSignature
from groups.catalog import GroupSpec, realize
from groups.engine import DEFAULT_THRESHOLD, GroupHandle, build
from groups.permutation import Images, Permutation, compose_images, invert_images, order_of_images, power_images
from groups.signed import SignedPermutation, SignVector, is_in_dn, push_bits
from utils.errors import CapabilityError, InvariantViolation, PreconditionError, StructuralError


logger = logging.getLogger(__name__)

MIN_CLASSIFY_DEGREE = 5


class ExtensionClass(str, Enum):
    TRIVIAL_SECTION = "TrivialSection"
    CENTER_SPLIT = "CenterSplit"
    DEMI_FULL = "DemiFull"
    ALTERNATING_TWISTED = "AlternatingTwisted"
    FULL = "Full"


@lru_cache(maxsize=None)
def _symmetric_handle(n: int, threshold: int = DEFAULT_THRESHOLD) -> GroupHandle:
    return realize(GroupSpec("S", n), threshold=threshold).handle


def _cycle_labels(images: Images) -> List[int]:
    """Index of the cycle containing each point."""
    labels = [-1] * len(images)
    label = 0
    for start in range(len(images)):
        if labels[start] >= 0:
            continue
        point = start
        while labels[point] < 0:
            labels[point] = label
            point = images[point]
        label += 1
    return labels


def recipe_points(sigma: Images, product: Images, need_third: bool) -> Optional[Tuple[int, int, Optional[int]]]:
    """First i < j fixed by sigma in one product cycle, plus a third fixed point k when needed (1-based)."""
    fixed = [p for p, q in enumerate(sigma) if p == q]
    if len(fixed) < (3 if need_third else 2):
        return None
    labels = _cycle_labels(product)
    seen: Dict[int, int] = {}
    for p in fixed:
        label = labels[p]
        if label in seen:
            i, j = seen[label], p
            k = None
            if need_third:
                k = next(f for f in fixed if f not in (i, j))
            return i + 1, j + 1, (k + 1 if k is not None else None)
        seen[label] = p
    return None


@dataclass(frozen=True)
class LiftRecipe:
    """Generators sigma, tau of S_n with the fixed points the lift needs"""

    sigma: Permutation
    tau: Permutation
    i: int
    j: int
    k: Optional[int] = None

    @property
    def n(self) -> int:
        return self.sigma.degree

    @property
    def a(self) -> SignVector:
        return SignVector.unit(self.n, self.i, self.j)

    @property
    def b(self) -> SignVector:
        return SignVector.zeros(self.n)

    @property
    def product(self) -> Permutation:
        return self.sigma * self.tau

    def orders(self) -> Tuple[int, int, int]:
        return self.sigma.order(), self.tau.order(), self.product.order()

    def validate(self, check_generation: bool = True):
        """Raise PreconditionError naming the first violated hypothesis."""
        n = self.n
        if self.tau.degree != n:
            raise PreconditionError("degree-mismatch", f"sigma has degree {n}, tau {self.tau.degree}")
        for point in (self.i, self.j) + ((self.k,) if self.k is not None else ()):
            if not 1 <= point <= n:
                raise PreconditionError("point-out-of-range", f"point {point} is outside 1..{n}")
        if self.i == self.j:
            raise PreconditionError("coincident-points", f"i and j must differ, both are {self.i}")
        if self.sigma(self.i) != self.i or self.sigma(self.j) != self.j:
            raise PreconditionError("no-fixed-points", f"sigma must fix {self.i} and {self.j}")
        if self.j not in self.product.cycle_of(self.i):
            raise PreconditionError("not-same-cycle", f"{self.i} and {self.j} lie in different cycles of sigma*tau")
        if n % 2 == 0:
            if self.k is None or self.k in (self.i, self.j) or self.sigma(self.k) != self.k:
                raise PreconditionError("missing-third-fixed-point", f"n = {n} is even; sigma needs a third fixed point")
        if self.sigma.order() % 2:
            raise PreconditionError("odd-order-sigma", f"sigma has odd order {self.sigma.order()}")
        if self.product.order() % 2:
            raise PreconditionError("odd-order-product", f"sigma*tau has odd order {self.product.order()}")
        if check_generation:
            if not _symmetric_handle(n).generates_images(self.sigma.images, self.tau.images):
                raise PreconditionError("not-generating", f"sigma and tau do not generate S{n}")


def lift(recipe: LiftRecipe) -> Tuple[SignedPermutation, SignedPermutation]:
    """x = [sigma, a], y = [tau, 0]; together they generate D_n with the orders of sigma, tau, sigma*tau."""
    recipe.validate()
    x = SignedPermutation(recipe.sigma, recipe.a)
    y = SignedPermutation(recipe.tau, recipe.b)
    return x, y


def product_cycle_length(recipe: LiftRecipe) -> int:
    """Length of the sigma*tau cycle through i and j."""
    return len(recipe.product.cycle_of(recipe.i))


def annihilating_power(recipe: LiftRecipe) -> SignedPermutation:
    """(xy)^k for the lifted pair and k = product_cycle_length; its sign vector is zero."""
    x, y = lift(recipe)
    return (x * y) ** product_cycle_length(recipe)


class Gf2Span:
    """Subspace of GF(2)^n kept as an echelon basis of int bitsets keyed by leading bit"""

    def __init__(self, n: int):
        self.n = n
        self.basis: Dict[int, int] = {}

    def reduce(self, vector: int) -> int:
        while vector:
            top = vector.bit_length() - 1
            pivot = self.basis.get(top)
            if pivot is None:
                return vector
            vector ^= pivot
        return 0

    def add(self, vector: int) -> bool:
        """Add vector; True when the span grew."""
        residue = self.reduce(vector)
        if not residue:
            return False
        self.basis[residue.bit_length() - 1] = residue
        return True

    def __contains__(self, vector: int) -> bool:
        return self.reduce(vector) == 0

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> List[int]:
        return [self.basis[k] for k in sorted(self.basis)]

    def close_under(self, perms: Sequence[Images]):
        """Smallest invariant subspace containing the current span."""
        queue = self.vectors()
        while queue:
            vector = queue.pop()
            for perm in perms:
                moved = push_bits(vector, perm)
                if self.add(moved):
                    queue.append(moved)


SignedPair = Tuple[Images, int]


def _mul(x: SignedPair, y: SignedPair) -> SignedPair:
    return compose_images(x[0], y[0]), push_bits(x[1], y[0]) ^ y[1]


def _inv(x: SignedPair) -> SignedPair:
    inv = invert_images(x[0])
    return inv, push_bits(x[1], inv)


def _is_identity_perm(images: Images) -> bool:
    return all(i == j for i, j in enumerate(images))


class _SignedLevel:
    """One level of a stabilizer chain for the pi-action; residues fixing every point feed the kernel"""

    def __init__(self, n: int, kernel: Gf2Span):
        self.n = n
        self.kernel = kernel
        self.basepoint: Optional[int] = None
        self.gens: List[SignedPair] = []
        self.transversal: Dict[int, SignedPair] = {}
        self.stab: Optional["_SignedLevel"] = None

    def generators(self) -> List[SignedPair]:
        if self.stab is None:
            return list(self.gens)
        return self.stab.generators() + self.gens

    def orbit_size(self) -> int:
        return len(self.transversal) if self.basepoint is not None else 1

    def permutation_order(self) -> int:
        if self.basepoint is None:
            return 1
        return len(self.transversal) * self.stab.permutation_order()

    def sift(self, g: SignedPair) -> SignedPair:
        if self.basepoint is None:
            return g
        u = self.transversal.get(g[0][self.basepoint])
        if u is None:
            return g
        return self.stab.sift(_mul(g, _inv(u)))

    def add_gen(self, g: SignedPair):
        g = self.sift(g)
        if _is_identity_perm(g[0]):
            if g[1]:
                self.kernel.add(g[1])
            return
        self.add_nonmember_gen(g)

    def add_nonmember_gen(self, g: SignedPair):
        if self.basepoint is None:
            self.basepoint = next(p for p, q in enumerate(g[0]) if p != q)
            self.stab = _SignedLevel(self.n, self.kernel)
        if g[0][self.basepoint] == self.basepoint:
            self.stab.add_nonmember_gen(g)
        else:
            self.gens.append(g)
        self._rebuild_orbit()
        self._add_schreier_gens()

    def _rebuild_orbit(self):
        identity = (tuple(range(self.n)), 0)
        self.transversal = {self.basepoint: identity}
        queue = [self.basepoint]
        gens = self.generators()
        while queue:
            point = queue.pop(0)
            u = self.transversal[point]
            for s in gens:
                image = s[0][point]
                if image not in self.transversal:
                    self.transversal[image] = _mul(u, s)
                    queue.append(image)

    def _add_schreier_gens(self):
        gens = self.generators()
        for point in sorted(self.transversal):
            u = self.transversal[point]
            for s in gens:
                w = _mul(u, s)
                v = self.transversal[w[0][self.basepoint]]
                self.stab.add_gen(_mul(w, _inv(v)))


def _pi_chain(generators: Sequence[SignedPermutation]) -> Tuple[_SignedLevel, Gf2Span]:
    if not generators:
        raise StructuralError("at least one generator is required")
    n = generators[0].degree
    if any(g.degree != n for g in generators):
        raise StructuralError("generators have different degrees")
    kernel = Gf2Span(n)
    chain = _SignedLevel(n, kernel)
    pairs = [(g.perm.images, g.signs.bits) for g in generators]
    for pair in pairs:
        chain.add_gen(pair)
    # K is normal in H, so it must be closed under the coordinate action of pi(H).
    kernel.close_under([images for images, _ in pairs])
    logger.debug("kernel of pi on %d generators of degree %d: dim %d", len(pairs), n, kernel.dim)
    return chain, kernel


def kernel_subspace(generators: Sequence[SignedPermutation]) -> Gf2Span:
    """K = {b : [1, b] in <generators>} as a GF(2) span."""
    return _pi_chain(generators)[1]


def subgroup_order(generators: Sequence[SignedPermutation]) -> int:
    """|<generators>| from the pi-chain and the kernel dimension."""
    chain, kernel = _pi_chain(generators)
    return chain.permutation_order() * 2 ** kernel.dim


def classify(x: SignedPermutation, y: SignedPermutation, *more: SignedPermutation) -> ExtensionClass:
    """Shape of H = <x, y, ...> inside B_n, given pi(H) = S_n."""
    gens = [x, y, *more]
    n = x.degree
    if any(g.degree != n for g in gens):
        raise StructuralError("generators have different degrees")
    if n < MIN_CLASSIFY_DEGREE:
        raise CapabilityError(f"subgroup classification needs n >= {MIN_CLASSIFY_DEGREE}, got {n}")
    pi_group = _symmetric_handle(n)
    if build([g.perm for g in gens]).order != pi_group.order:
        raise PreconditionError("pi-not-surjective", f"pi-images do not generate S{n}")

    dim = kernel_subspace(gens).dim
    if dim == 0:
        return ExtensionClass.TRIVIAL_SECTION
    if dim == 1:
        return ExtensionClass.CENTER_SPLIT
    if dim == n - 1:
        if all(is_in_dn(g) for g in gens):
            return ExtensionClass.DEMI_FULL
        return ExtensionClass.ALTERNATING_TWISTED
    if dim == n:
        return ExtensionClass.FULL
    raise InvariantViolation(f"kernel of dimension {dim} is not S{n}-invariant")


def order_assignments(triple: TripleSignature) -> List[Tuple[int, int, int]]:
    """Distinct (ord sigma, ord tau, ord sigma*tau) arrangements with sigma and the product even."""
    seen = []
    for alpha, beta, gamma in ordered_arrangements(triple.as_tuple()):
        if alpha % 2 == 0 and gamma % 2 == 0 and (alpha, beta, gamma) not in seen:
            seen.append((alpha, beta, gamma))
    return seen


def _sigma_candidates(n: int, triple: TripleSignature, threshold: int) -> List[Tuple[Tuple[int, int, int], Permutation]]:
    need = 3 if n % 2 == 0 else 2
    reps = _symmetric_handle(n, threshold).class_representatives()
    candidates = []
    for orders in order_assignments(triple):
        for rep, _ in reps:
            if rep.order() == orders[0] and len(rep.fixed_points()) >= need:
                candidates.append((orders, rep))
    return candidates


def _recipe_from(sigma: Images, tau: Images, gamma: int, handle: GroupHandle) -> Optional[LiftRecipe]:
    product = compose_images(sigma, tau)
    if order_of_images(product) != gamma:
        return None
    points = recipe_points(sigma, product, need_third=len(sigma) % 2 == 0)
    if points is None:
        return None
    if not handle.generates_images(sigma, tau):
        return None
    i, j, k = points
    return LiftRecipe(Permutation._trusted(sigma), Permutation._trusted(tau), i, j, k)


def _scan_tau(task) -> Optional[Tuple[Images, Images, int, int, Optional[int]]]:
    n, sigma, beta, gamma, threshold = task
    handle = _symmetric_handle(n, threshold)
    for tau in handle.element_images_of_order(beta):
        recipe = _recipe_from(sigma, tau, gamma, handle)
        if recipe is not None:
            return recipe.sigma.images, recipe.tau.images, recipe.i, recipe.j, recipe.k
    return None


def find_liftable_pair(
    n: int,
    triple: TripleSignature,
    mode: str = "exhaustive",
    budget: int = 20000,
    seed: int = 0,
    jobs: int = 1,
    threshold: int = DEFAULT_THRESHOLD,
) -> Optional[LiftRecipe]:
    """An S_n pair realizing triple and meeting the lift hypotheses.

    Exhaustive mode runs sigma over class representatives and tau over all
    elements of the required order; its None is authoritative. Heuristic mode
    samples tau at random and its None says nothing.
    """
    if not triple.satisfies_parity():
        raise PreconditionError("parity", f"{triple} has more than one odd entry")
    if n < 3:
        raise PreconditionError("rank", f"lifting needs n >= 3, got {n}")
    handle = _symmetric_handle(n, threshold)
    if not set(triple.as_tuple()) <= handle.order_spectrum():
        return None
    candidates = _sigma_candidates(n, triple, threshold)
    if not candidates:
        return None

    if mode == "exhaustive":
        if handle.order > threshold:
            raise CapabilityError(f"exhaustive lift search over S{n} exceeds the threshold {threshold}")
        tasks = [(n, rep.images, beta, gamma, threshold) for (_, beta, gamma), rep in candidates]
        hit = first_hit(_scan_tau, tasks, jobs)
        if hit is None:
            logger.info("no liftable %s pair in S%d", triple, n)
            return None
        sigma, tau, i, j, k = hit[1]
        recipe = LiftRecipe(Permutation._trusted(sigma), Permutation._trusted(tau), i, j, k)
    elif mode == "heuristic":
        rng = random.Random(seed)
        recipe = None
        points = list(range(n))
        for _ in range(budget):
            (_, beta, gamma), rep = candidates[rng.randrange(len(candidates))]
            rng.shuffle(points)
            tau = tuple(points)
            t = order_of_images(tau)
            if t % beta:
                continue
            tau = power_images(tau, t // beta)
            recipe = _recipe_from(rep.images, tau, gamma, handle)
            if recipe is not None:
                break
        if recipe is None:
            logger.info("heuristic lift search for %s in S%d: no hit in %d trials", triple, n, budget)
            return None
    else:
        raise PreconditionError("mode", f"unknown search mode {mode!r}")

    recipe.validate()
    logger.info("liftable %s pair in S%d: sigma=%s tau=%s", triple, n, recipe.sigma, recipe.tau)
    return recipe


def sample_recipe(n: int, rng: random.Random, attempts: int = 100000) -> LiftRecipe:
    """A random recipe satisfying every lift hypothesis."""
    if n < MIN_CLASSIFY_DEGREE:
        raise PreconditionError("rank", f"random recipes need n >= {MIN_CLASSIFY_DEGREE}, got {n}")
    need = 3 if n % 2 == 0 else 2
    handle = _symmetric_handle(n)
    for _ in range(attempts):
        moved = rng.sample(range(n), rng.randint(2, n - need))
        shuffled = moved[:]
        rng.shuffle(shuffled)
        sigma = list(range(n))
        for src, dst in zip(moved, shuffled):
            sigma[src] = dst
        sigma = tuple(sigma)
        if order_of_images(sigma) % 2:
            continue
        tau = list(range(n))
        rng.shuffle(tau)
        tau = tuple(tau)
        product = compose_images(sigma, tau)
        if order_of_images(product) % 2:
            continue
        recipe = _recipe_from(sigma, tau, order_of_images(product), handle)
        if recipe is not None:
            return recipe
    raise CapabilityError(f"no qualifying recipe for n = {n} in {attempts} attempts")

