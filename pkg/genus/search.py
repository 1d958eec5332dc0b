"""
Minimal generating pair search and the genus pipeline
Stages run in order: sandwich bound, D_n lift, exhaustive search, heuristic search.
"""

import logging
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Callable, List, Optional, Tuple

from genus.bounds import sandwich_bound
from genus.lift import find_liftable_pair, lift
from genus.parallel import first_hit
from genus.published_tables import published_minimal_triple
from genus.triples import (
    EUCLIDEAN,
    HYPERBOLIC,
    SPHERICAL,
    TripleSignature,
    enumerate_triples,
    is_exact_by_defect,
    riemann_hurwitz_genus,
)
from groups.catalog import GroupSpec, Realization, realize
from groups.engine import DEFAULT_THRESHOLD, GroupHandle
from groups.permutation import Images, Permutation, compose_images, order_of_images
from groups.signed import to_degree_2n
from utils.errors import CapabilityError, InvariantViolation, VerificationError


logger = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
HEURISTIC = "heuristic"
LIFTED = "lifted"
SANDWICH = "sandwich-bound"

# triples tried by a heuristic walk before giving up
HEURISTIC_WALK_LENGTH = 24

EXACT = "exact"
UPPER_BOUND = "upper-bound"

# The only groups in scope with genus 0; none in scope has genus 1.
SMALL_GENUS_SPECS = frozenset({GroupSpec("G2"), GroupSpec("S", 3), GroupSpec("S", 4), GroupSpec("D", 3)})


def has_small_genus(spec: GroupSpec) -> bool:
    return spec.family == "Dih" or spec in SMALL_GENUS_SPECS


def uses_parity_prune(spec: GroupSpec) -> bool:
    return spec.family in ("S", "D")


@dataclass
class PairWitness:
    """x of order p, y of order q, xy of order r, generating the group"""

    triple: TripleSignature
    x: Permutation
    y: Permutation
    provenance: str

    def orders(self) -> Tuple[int, int, int]:
        return self.x.order(), self.y.order(), (self.x * self.y).order()

    def verify(self, handle: GroupHandle):
        """Re-check membership, the three orders and generation."""
        if self.x.degree != handle.degree or self.y.degree != handle.degree:
            raise VerificationError(f"witness degree does not match {handle.label}")
        if not (handle.contains(self.x) and handle.contains(self.y)):
            raise VerificationError(f"witness elements are not in {handle.label}")
        if self.orders() != self.triple.as_tuple():
            raise VerificationError(f"witness orders {self.orders()} do not match {self.triple}")
        if not handle.is_generating_pair(self.x, self.y):
            raise VerificationError(f"witness does not generate {handle.label}")


@dataclass
class GenusResult:
    spec: GroupSpec
    order: int
    triple: TripleSignature
    genus: int
    exactness: str
    witness: Optional[PairWitness]
    method: str
    note: Optional[str] = None

    @property
    def is_exact(self) -> bool:
        return self.exactness == EXACT


def arrange_pair(x: Permutation, y: Permutation, triple: TripleSignature) -> Optional[Tuple[Permutation, Permutation]]:
    """Rewrite a generating pair so the orders read (p, q, r) exactly.

    All six arrangements of (ord x, ord y, ord xy) are reachable by pairs that
    generate the same group.
    """
    xy = x * y
    candidates = [
        (x, y),
        (y.inverse(), x.inverse()),
        (y, xy.inverse()),
        (xy.inverse(), x),
        (x, xy.inverse()),
        (xy, y.inverse()),
    ]
    target = triple.as_tuple()
    for a, b in candidates:
        if (a.order(), b.order(), (a * b).order()) == target:
            return a, b
    return None


def exactness_for(triple: TripleSignature) -> str:
    kind = triple.kind
    if kind == SPHERICAL:
        return EXACT
    if kind == EUCLIDEAN:
        return UPPER_BOUND
    return EXACT if is_exact_by_defect(triple) else UPPER_BOUND


def first_hyperbolic_triple(spectrum, parity_prune: bool) -> Optional[TripleSignature]:
    for triple in enumerate_triples(spectrum, parity_prune):
        if triple.kind == HYPERBOLIC:
            return triple
    return None


def is_provably_minimal(spec: GroupSpec, spectrum, triple: TripleSignature) -> bool:
    """A witness for the best hyperbolic triple the spectrum allows is minimal outside the small-genus list."""
    if has_small_genus(spec):
        return False
    return triple == first_hyperbolic_triple(spectrum, uses_parity_prune(spec)) and is_exact_by_defect(triple)


def _check_parity(spec: GroupSpec, triple: TripleSignature):
    if uses_parity_prune(spec) and not triple.satisfies_parity():
        raise InvariantViolation(f"{spec} produced {triple} with more than one odd entry")


def make_result(spec: GroupSpec, order: int, triple: TripleSignature, witness: Optional[PairWitness],
                method: str, exactness: str, note: Optional[str] = None) -> GenusResult:
    _check_parity(spec, triple)
    genus = riemann_hurwitz_genus(order, triple)
    return GenusResult(spec, order, triple, genus, exactness, witness, method, note)


def _scan_y(handle: GroupHandle, x: Images, q: int, r: int) -> Optional[Images]:
    for y in handle.element_images_of_order(q):
        if order_of_images(compose_images(x, y)) != r:
            continue
        if handle.generates_images(x, y):
            return y
    return None


@lru_cache(maxsize=8)
def _worker_handle(spec: GroupSpec, threshold: int) -> GroupHandle:
    return realize(spec, threshold=threshold).handle


def _search_shard(task) -> Optional[Images]:
    spec, threshold, x, q, r = task
    return _scan_y(_worker_handle(spec, threshold), x, q, r)


def search_triple(handle: GroupHandle, triple: TripleSignature, jobs: int = 1) -> Optional[PairWitness]:
    """Exhaustive search for a (p, q, r) generating pair, x over class representatives.

    None is authoritative: pair existence is invariant under conjugation.
    """
    if handle.order > handle.threshold:
        raise CapabilityError(
            f"exhaustive search in {handle.label} (order {handle.order}) exceeds the threshold "
            f"{handle.threshold}; use heuristic mode"
        )
    p, q, r = triple.as_tuple()
    spectrum = handle.order_spectrum()
    if not {p, q, r} <= spectrum:
        return None
    reps = [rep for rep, _ in handle.class_representatives() if rep.order() == p]
    logger.debug("%s: searching %s over %d x-classes", handle.label, triple, len(reps))
    if jobs > 1 and isinstance(handle.origin, GroupSpec):
        tasks = [(handle.origin, handle.threshold, rep.images, q, r) for rep in reps]
        hit = first_hit(_search_shard, tasks, jobs)
    else:
        hit = first_hit(lambda rep: _scan_y(handle, rep.images, q, r), reps, 1)
    if hit is None:
        return None
    idx, y = hit
    return PairWitness(triple, reps[idx], Permutation._trusted(y), EXHAUSTIVE)


def minimal_pair(handle: GroupHandle, spec: GroupSpec, jobs: int = 1,
                 progress: Optional[Callable[[str], None]] = None) -> GenusResult:
    """Walk triples by decreasing reciprocal sum until one has a witness."""
    parity = uses_parity_prune(spec)
    for triple in enumerate_triples(handle.order_spectrum(), parity):
        if progress:
            progress(f"{spec.display}: trying {triple}")
        witness = search_triple(handle, triple, jobs=jobs)
        if witness is not None:
            logger.info("%s: minimal triple %s", spec.display, triple)
            return make_result(spec, handle.order, triple, witness, EXHAUSTIVE, exactness_for(triple))
    raise CapabilityError(f"{spec.display} has no generating pair of elements of order at least 2")


def heuristic_pair(handle: GroupHandle, triple: TripleSignature, budget: int, seed: int) -> Optional[PairWitness]:
    """Seeded random search; None is not evidence of absence."""
    p, q, r = triple.as_tuple()
    rng = random.Random(seed)
    for _ in range(budget):
        x = handle.random_element(rng)
        k = x.order()
        if k % p:
            continue
        y = handle.random_element(rng)
        m = y.order()
        if m % q:
            continue
        x = x ** (k // p)
        y = y ** (m // q)
        if order_of_images(compose_images(x.images, y.images)) != r:
            continue
        if handle.generates_images(x.images, y.images):
            return PairWitness(triple, x, y, HEURISTIC)
    return None


def _heuristic_triples(spec: GroupSpec, spectrum) -> List[TripleSignature]:
    small = has_small_genus(spec)
    walk = (t for t in enumerate_triples(spectrum, uses_parity_prune(spec)) if small or t.kind == HYPERBOLIC)
    return list(islice(walk, HEURISTIC_WALK_LENGTH))


def heuristic_minimal(realization: Realization, budget: int, seed: int,
                      progress: Optional[Callable[[str], None]] = None) -> GenusResult:
    """Best triple a seeded random walk can certify; exact only when provably minimal."""
    spec, handle = realization.spec, realization.handle
    spectrum = handle.order_spectrum()
    for offset, triple in enumerate(_heuristic_triples(spec, spectrum)):
        if progress:
            progress(f"{spec.display}: sampling {triple}")
        witness = heuristic_pair(handle, triple, budget, seed + offset)
        if witness is None:
            continue
        exact = is_provably_minimal(spec, spectrum, triple) or (has_small_genus(spec) and triple.kind == SPHERICAL)
        return make_result(spec, handle.order, triple, witness, HEURISTIC, EXACT if exact else UPPER_BOUND,
                           realization.note)
    raise CapabilityError(f"heuristic search found no generating pair for {spec.display} within budget {budget}")


def lifted_witness(realization: Realization, triple: TripleSignature, recipe) -> PairWitness:
    x, y = lift(recipe)
    arranged = arrange_pair(to_degree_2n(x), to_degree_2n(y), triple)
    if arranged is None:
        raise InvariantViolation(f"lifted pair orders {recipe.orders()} are not an arrangement of {triple}")
    return PairWitness(triple, arranged[0], arranged[1], LIFTED)


def lift_minimal(realization: Realization, jobs: int = 1, heuristic: bool = False, budget: int = 20000,
                 seed: int = 0, progress: Optional[Callable[[str], None]] = None) -> Optional[GenusResult]:
    """D_n result from a lifted S_n pair, or None when no lift applies."""
    spec, handle = realization.spec, realization.handle
    if spec.family != "D" or not spec.is_signed:
        return None
    n, threshold = spec.n, handle.threshold
    symmetric = realize(GroupSpec("S", n), threshold=threshold)
    if symmetric.order <= threshold:
        # S_n = D_n / K, so D_n can do no better than the minimal triple of S_n.
        base = minimal_pair(symmetric.handle, symmetric.spec, jobs=jobs, progress=progress)
        recipe = find_liftable_pair(n, base.triple, "exhaustive", jobs=jobs, threshold=threshold)
        if recipe is None:
            return None
        witness = lifted_witness(realization, base.triple, recipe)
        exactness = exactness_for(base.triple) if base.is_exact else UPPER_BOUND
        return make_result(spec, handle.order, base.triple, witness, LIFTED, exactness)
    if not heuristic:
        return None
    spectrum = handle.order_spectrum()
    for offset, triple in enumerate(_heuristic_triples(spec, spectrum)):
        if progress:
            progress(f"{spec.display}: sampling liftable {triple}")
        recipe = find_liftable_pair(n, triple, "heuristic", budget=budget, seed=seed + offset, threshold=threshold)
        if recipe is None:
            continue
        witness = lifted_witness(realization, triple, recipe)
        exact = is_provably_minimal(spec, spectrum, triple)
        return make_result(spec, handle.order, triple, witness, LIFTED, EXACT if exact else UPPER_BOUND)
    return None


def _over_threshold(spec: GroupSpec, threshold: int) -> CapabilityError:
    return CapabilityError(
        f"{spec.display} has order {spec.expected_order()}, over the threshold {threshold}; "
        f"rerun with --heuristic or a larger --threshold"
    )


def compute_genus(
    spec: GroupSpec,
    threshold: int = DEFAULT_THRESHOLD,
    jobs: int = 1,
    heuristic: bool = False,
    budget: int = 20000,
    seed: int = 0,
    known=published_minimal_triple,
    progress: Optional[Callable[[str], None]] = None,
) -> Tuple[Realization, GenusResult]:
    """Run the staged pipeline for one group."""
    bound = sandwich_bound(spec, known=known, include_trivial=False)
    forced = bound.forced if bound is not None else None
    liftable = spec.family == "D" and spec.is_signed and math.factorial(spec.n) <= threshold
    # refuse before building anything large
    if spec.expected_order() > threshold and forced is None and not (heuristic or liftable):
        raise _over_threshold(spec, threshold)

    realization = realize(spec, threshold=threshold)
    handle = realization.handle

    if forced is not None:
        logger.info("%s: triple forced by %s and %s", spec.display, bound.lower_source, bound.upper_source)
        published = known(spec)
        if published is not None and published != forced and published.reciprocal_sum == forced.reciprocal_sum:
            # the bounds fix only the defect; report the published triple of that defect
            forced = published
        note = f"defect forced between {bound.lower_source.display} and {bound.upper_source.display}"
        result = make_result(spec, handle.order, forced, None, SANDWICH, exactness_for(forced), note)
        return realization, result

    if spec.family == "D" and spec.is_signed and handle.order > threshold:
        logger.info("%s: trying the S%d lift", spec.display, spec.n)
        result = lift_minimal(realization, jobs=jobs, heuristic=heuristic, budget=budget, seed=seed,
                              progress=progress)
        if result is not None:
            return realization, result

    if handle.order <= threshold:
        logger.info("%s: exhaustive search", spec.display)
        result = minimal_pair(handle, spec, jobs=jobs, progress=progress)
        result.note = realization.note
        return realization, result

    if heuristic:
        logger.info("%s: heuristic search, budget %d, seed %d", spec.display, budget, seed)
        return realization, heuristic_minimal(realization, budget, seed, progress=progress)

    raise _over_threshold(spec, threshold)
