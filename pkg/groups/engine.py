"""
Generic finite permutation group machinery
Stabilizer chains (sympy), membership, conjugacy classes, order spectra and streamed enumeration
"""

import logging
import random
from collections import deque
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from sympy.combinatorics import PermutationGroup

from groups.permutation import Images, Permutation, compose_images, cycle_lengths, invert_images, order_of_images
from utils.errors import CapabilityError, StructuralError


logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 5_000_000
EXTENDED_THRESHOLD = 50_000_000

# Groups up to this order keep their elements bucketed by element order after one pass.
BUCKET_CACHE_LIMIT = 250_000


class ClassOracle:
    """Type-specific shortcut for conjugacy data; subclasses override what they know"""

    def representatives(self) -> List[Tuple[Permutation, int]]:
        raise NotImplementedError

    def spectrum(self) -> Set[int]:
        return {rep.order() for rep, _ in self.representatives()}

    def elements_of_order(self, q: int) -> Optional[Iterator[Images]]:
        """Stream of raw images, or None to fall back to chain enumeration."""
        return None


def class_sort_key(perm: Permutation):
    lengths = sorted(cycle_lengths(perm.images), reverse=True)
    return (perm.order(), lengths, perm.images)


def orbit_partition(generators: Sequence[Images], degree: int) -> List[int]:
    """Smallest point of the orbit of every point, via union-find."""
    parent = list(range(degree))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for gen in generators:
        for i, j in enumerate(gen):
            ri, rj = find(i), find(j)
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj
    return [find(i) for i in range(degree)]


class GroupHandle:
    """A realized finite permutation group"""

    def __init__(
        self,
        generators: Sequence[Permutation],
        threshold: int = DEFAULT_THRESHOLD,
        label: Optional[str] = None,
        oracle: Optional[ClassOracle] = None,
        origin=None,
    ):
        if not generators:
            raise StructuralError("at least one generator is required")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise StructuralError("generators have different degrees")
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.threshold = threshold
        self.label = label or f"<{len(generators)} generators on {degree} points>"
        self.oracle = oracle
        self.origin = origin
        self._group = PermutationGroup([g.to_sympy() for g in self.generators])
        self._group.schreier_sims()
        self.order: int = int(self._group.order())
        self.base: List[int] = [b + 1 for b in self._group.base]
        self.transversal_lengths: List[int] = [len(t) for t in self._group.basic_transversals]
        self._orbits = orbit_partition([g.images for g in self.generators], degree)
        chain_order = 1
        for length in self.transversal_lengths:
            chain_order *= length
        if chain_order != self.order:
            raise StructuralError(f"stabilizer chain of {self.label} does not match its order")
        logger.debug("built %s: order %d, base %s", self.label, self.order, self.base)

    def __repr__(self) -> str:
        return f"GroupHandle({self.label}, order={self.order})"

    def _check_degree(self, x: Permutation):
        if x.degree != self.degree:
            raise StructuralError(f"element of degree {x.degree} used with a degree-{self.degree} group")

    def _require_enumerable(self, what: str):
        if self.order > self.threshold:
            raise CapabilityError(
                f"{what} of {self.label} needs enumeration of {self.order} elements, "
                f"over the threshold {self.threshold}; use heuristic mode or raise --threshold"
            )

    def contains(self, x: Permutation) -> bool:
        self._check_degree(x)
        return bool(self._group.contains(x.to_sympy()))

    def is_generating_pair(self, x: Permutation, y: Permutation) -> bool:
        """True iff <x, y> is the whole group."""
        self._check_degree(x)
        self._check_degree(y)
        if not (self.contains(x) and self.contains(y)):
            raise StructuralError(f"generating-pair candidates must lie in {self.label}")
        return self.generates_images(x.images, y.images)

    def generates_images(self, x: Images, y: Images) -> bool:
        """Generation test for raw images already known to lie in the group."""
        if orbit_partition([x, y], self.degree) != self._orbits:
            return False
        sub = PermutationGroup([Permutation._trusted(x).to_sympy(), Permutation._trusted(y).to_sympy()])
        return int(sub.order()) == self.order

    def element_images(self) -> Iterator[Images]:
        """Every element once, in stabilizer-chain order."""
        self._require_enumerable("enumeration")
        if self.order == 1:
            yield tuple(range(self.degree))
            return
        for af in self._group.generate_schreier_sims(af=True):
            yield tuple(af)

    def elements(self) -> Iterator[Permutation]:
        for images in self.element_images():
            yield Permutation._trusted(images)

    @cached_property
    def _order_buckets(self) -> Dict[int, List[Images]]:
        buckets: Dict[int, List[Images]] = {}
        for images in self.element_images():
            buckets.setdefault(order_of_images(images), []).append(images)
        return buckets

    def element_images_of_order(self, q: int) -> Iterator[Images]:
        if self.oracle is not None:
            stream = self.oracle.elements_of_order(q)
            if stream is not None:
                return stream
        self._require_enumerable("elements_of_order")
        if self.order <= BUCKET_CACHE_LIMIT:
            return iter(self._order_buckets.get(q, ()))
        return (images for images in self.element_images() if order_of_images(images) == q)

    def elements_of_order(self, q: int) -> Iterator[Permutation]:
        for images in self.element_images_of_order(q):
            yield Permutation._trusted(images)

    @cached_property
    def _class_data(self) -> List[Tuple[Permutation, int]]:
        if self.oracle is not None:
            reps = self.oracle.representatives()
        else:
            self._require_enumerable("class_representatives")
            reps = self._enumerate_classes()
        return sorted(reps, key=lambda pair: class_sort_key(pair[0]))

    def _enumerate_classes(self) -> List[Tuple[Permutation, int]]:
        gens = [(g.images, invert_images(g.images)) for g in self.generators]
        seen: Set[Images] = set()
        reps = []
        for images in self.element_images():
            if images in seen:
                continue
            seen.add(images)
            size = 1
            queue = deque([images])
            while queue:
                x = queue.popleft()
                for g, g_inv in gens:
                    # g^-1 x g
                    conj = tuple(g[x[g_inv[i]]] for i in range(self.degree))
                    if conj not in seen:
                        seen.add(conj)
                        queue.append(conj)
                        size += 1
            reps.append((Permutation._trusted(images), size))
        logger.debug("%s: %d conjugacy classes", self.label, len(reps))
        return reps

    def class_representatives(self) -> List[Tuple[Permutation, int]]:
        """One representative per conjugacy class with its class size."""
        return list(self._class_data)

    @cached_property
    def _spectrum(self) -> Set[int]:
        if self.oracle is not None:
            return set(self.oracle.spectrum())
        return {rep.order() for rep, _ in self._class_data}

    def order_spectrum(self) -> Set[int]:
        return set(self._spectrum)

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform random element drawn through the stabilizer chain."""
        if self.order == 1:
            return Permutation.identity(self.degree)
        af = self._group.coset_unrank(rng.randrange(self.order), af=True)
        return Permutation._trusted(tuple(af))

    def orbits(self) -> List[Set[int]]:
        groups: Dict[int, Set[int]] = {}
        for point, root in enumerate(self._orbits):
            groups.setdefault(root, set()).add(point + 1)
        return [groups[k] for k in sorted(groups)]


def build(
    generators: Sequence[Permutation],
    threshold: int = DEFAULT_THRESHOLD,
    label: Optional[str] = None,
    oracle: Optional[ClassOracle] = None,
    origin=None,
) -> GroupHandle:
    return GroupHandle(generators, threshold=threshold, label=label, oracle=oracle, origin=origin)


def closure_elements(generators: Sequence[Permutation]) -> Set[Images]:
    """Brute-force closure under right multiplication by generators."""
    if not generators:
        raise StructuralError("at least one generator is required")
    identity = tuple(range(generators[0].degree))
    gens = [g.images for g in generators]
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose_images(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def closure_order(generators: Sequence[Permutation]) -> int:
    return len(closure_elements(generators))
