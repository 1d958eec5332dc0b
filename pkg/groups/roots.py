"""
Root systems of the sporadic Coxeter types and their faithful permutation actions

Roots are written in the basis of simple roots, so a simple reflection is
s_i(v) = v - (sum_j v_j c_ij) alpha_i with c_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
All coefficients live in Z[phi]; nothing is floating point.
"""

import logging
from collections import deque
from typing import Dict, List, Sequence, Tuple

from groups.golden import PHI, ZERO, GoldenScalar
from groups.permutation import Permutation
from utils.errors import SpecParseError


logger = logging.getLogger(__name__)

Root = Tuple[GoldenScalar, ...]

# Coxeter diagrams with Bourbaki numbering: (rank, {(i, j): m_ij}), 1-based, m = 3 unless listed.
COXETER_DIAGRAMS: Dict[str, Tuple[int, Dict[Tuple[int, int], int]]] = {
    "H3": (3, {(1, 2): 5, (2, 3): 3}),
    "H4": (4, {(1, 2): 5, (2, 3): 3, (3, 4): 3}),
    "F4": (4, {(1, 2): 3, (2, 3): 4, (3, 4): 3}),
    "E6": (6, {(1, 3): 3, (3, 4): 3, (4, 5): 3, (5, 6): 3, (2, 4): 3}),
    "E7": (7, {(1, 3): 3, (3, 4): 3, (4, 5): 3, (5, 6): 3, (6, 7): 3, (2, 4): 3}),
}

EXPECTED_ROOT_COUNTS = {"H3": 30, "H4": 120, "F4": 48, "E6": 72, "E7": 126}

# F4: alpha1, alpha2 long, alpha3, alpha4 short; the only asymmetric Cartan entries.
_F4_ASYMMETRIC = {(2, 3): -1, (3, 2): -2}


def _cartan_entry(label: str, i: int, j: int, m: int) -> GoldenScalar:
    if i == j:
        return GoldenScalar(2)
    if m == 2:
        return ZERO
    if m == 3:
        return GoldenScalar(-1)
    if m == 5:
        return -PHI
    if label == "F4" and (i, j) in _F4_ASYMMETRIC:
        return GoldenScalar(_F4_ASYMMETRIC[(i, j)])
    raise SpecParseError(f"no Cartan entry for m={m} in {label}")


def coxeter_matrix(label: str) -> List[List[int]]:
    rank, edges = _diagram(label)
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for (i, j), value in edges.items():
        m[i - 1][j - 1] = m[j - 1][i - 1] = value
    return m


def cartan_matrix(label: str) -> List[List[GoldenScalar]]:
    m = coxeter_matrix(label)
    rank = len(m)
    return [[_cartan_entry(label, i + 1, j + 1, m[i][j]) for j in range(rank)] for i in range(rank)]


def _diagram(label: str):
    try:
        return COXETER_DIAGRAMS[label]
    except KeyError:
        raise SpecParseError(f"unknown root system type {label!r}") from None


def reflect(cartan: Sequence[Sequence[GoldenScalar]], i: int, v: Root) -> Root:
    """Simple reflection s_i applied to v (0-based i)."""
    coeff = ZERO
    for j, vj in enumerate(v):
        if not vj.is_zero():
            coeff = coeff + vj * cartan[i][j]
    if coeff.is_zero():
        return v
    out = list(v)
    out[i] = out[i] - coeff
    return tuple(out)


def _root_key(root: Root):
    return tuple(c.key for c in root)


class RootSystem:
    """Closed root list with the permutation induced by each simple reflection"""

    def __init__(self, label: str, cartan: List[List[GoldenScalar]], roots: List[Root]):
        self.label = label
        self.rank = len(cartan)
        self.cartan = cartan
        self.roots: List[Root] = sorted(roots, key=_root_key)
        self.index: Dict[Root, int] = {root: idx for idx, root in enumerate(self.roots)}
        unit = [tuple(GoldenScalar(1 if k == i else 0) for k in range(self.rank)) for i in range(self.rank)]
        self.simple_indices: List[int] = [self.index[root] for root in unit]
        self.actions: List[Tuple[int, ...]] = [
            tuple(self.index[reflect(cartan, i, root)] for root in self.roots) for i in range(self.rank)
        ]

    def negation(self) -> Permutation:
        """Permutation of root indices sending every root to its negative."""
        return Permutation(tuple(self.index[tuple(-c for c in root)] for root in self.roots))

    def as_permutation_group(self) -> List[Permutation]:
        return as_permutation_group(self)

    def dump(self) -> str:
        """Deterministic text form: sorted roots, then one action line per simple reflection."""
        lines = [f"# root system {self.label} rank {self.rank} roots {len(self.roots)}"]
        for idx, root in enumerate(self.roots):
            lines.append(f"{idx + 1}: " + " ".join(str(c) for c in root))
        for i, action in enumerate(self.actions):
            lines.append(f"s{i + 1}: " + " ".join(str(j + 1) for j in action))
        return "\n".join(lines) + "\n"


def close_roots(label: str) -> RootSystem:
    """Orbit closure of the simple roots under the simple reflections."""
    rank, _ = _diagram(label)
    cartan = cartan_matrix(label)
    start = [tuple(GoldenScalar(1 if k == i else 0) for k in range(rank)) for i in range(rank)]
    seen = set(start)
    queue = deque(start)
    while queue:
        root = queue.popleft()
        for i in range(rank):
            image = reflect(cartan, i, root)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    logger.debug("closed %s: %d roots", label, len(seen))
    return RootSystem(label, cartan, list(seen))


def as_permutation_group(rs: RootSystem) -> List[Permutation]:
    """One generator per simple reflection, acting on root indices."""
    return [Permutation(action) for action in rs.actions]
