"""
Published minimal triples and genera for the finite Coxeter groups
Closed forms are kept as printed: genus = |G| * numerator / denominator + 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from genus.triples import TripleSignature
from groups.catalog import GroupSpec


@dataclass(frozen=True)
class PublishedRow:
    spec: GroupSpec
    triple: TripleSignature
    genus: int
    source: str

    @property
    def family(self) -> str:
        return {"S": "symmetric", "B": "B", "D": "D"}.get(self.spec.family, "sporadic")


# (triple, numerator, denominator) of the printed closed form
ClosedForm = Tuple[Tuple[int, int, int], int, int]

SPORADIC_ROWS: Dict[str, Tuple[Tuple[int, int, int], int]] = {
    "G2": ((2, 2, 6), 0),
    "H3": ((2, 3, 10), 5),
    "H4": ((2, 4, 6), 601),
    "F4": ((2, 6, 6), 97),
    "E6": ((2, 4, 8), 3241),
    "E7": ((2, 4, 7), 155521),
}

SYMMETRIC_FORMS: Dict[int, ClosedForm] = {
    5: ((2, 4, 5), 1, 40),
    6: ((2, 5, 6), 1, 15),
    7: ((2, 3, 10), 1, 30),
    8: ((2, 4, 7), 3, 56),
    9: ((2, 4, 6), 1, 24),
    10: ((2, 3, 10), 1, 30),
    11: ((2, 4, 5), 1, 40),
    12: ((2, 3, 12), 1, 24),
    13: ((2, 3, 12), 1, 24),
    14: ((2, 4, 6), 1, 24),
    15: ((2, 4, 5), 1, 40),
    16: ((2, 4, 5), 1, 40),
    17: ((2, 4, 6), 1, 24),
    20: ((2, 3, 8), 1, 48),
    22: ((2, 3, 10), 1, 30),
    23: ((2, 3, 10), 1, 30),
    26: ((2, 4, 5), 1, 40),
    29: ((2, 3, 12), 1, 24),
}

B_FORMS: Dict[int, ClosedForm] = {
    3: ((2, 4, 6), 1, 24),
    4: ((2, 4, 6), 1, 24),
    5: ((2, 4, 10), 3, 40),
    6: ((2, 6, 6), 1, 12),
    7: ((2, 4, 6), 1, 24),
    8: ((2, 4, 8), 1, 16),
    **{n: ((2, 4, 6), 1, 24) for n in (9, 10, 11, 12, 13, 14, 15, 16, 17, 20, 22, 23, 26, 29)},
}

D_FORMS: Dict[int, ClosedForm] = {
    4: ((3, 4, 4), 1, 12),
    5: ((2, 4, 5), 1, 40),
    6: ((2, 5, 6), 1, 15),
    7: ((2, 4, 6), 1, 24),
    8: ((2, 4, 7), 3, 56),
    9: ((2, 4, 6), 1, 24),
    10: ((2, 3, 10), 1, 30),
    11: ((2, 4, 5), 1, 40),
    12: ((2, 3, 12), 1, 24),
    13: ((2, 3, 12), 1, 24),
    14: ((2, 3, 14), 1, 21),
    15: ((2, 4, 5), 1, 40),
    16: ((2, 4, 5), 1, 40),
    17: ((2, 4, 6), 1, 24),
    20: ((2, 4, 5), 1, 40),
    22: ((2, 3, 10), 1, 30),
    23: ((2, 3, 12), 1, 24),
    26: ((2, 4, 5), 1, 40),
    29: ((2, 3, 12), 1, 24),
}

# Rows printed without a closed form: genus 0 groups
GENUS_ZERO_ROWS = {
    GroupSpec("S", 3): (2, 2, 3),
    GroupSpec("S", 4): (2, 3, 4),
    GroupSpec("D", 3): (2, 3, 4),
}

SYMMETRIC_LIMIT = 29
B_LIMIT = 8
D_LIMIT = 29

# From n = 168 on, the published (2,3,8) generators of S_n lift to D_n directly,
# except at these ranks. Recorded as published; not re-derived.
NON_238_RANGE_START = 168
NON_238_DEGREES = (171, 173, 174, 181, 185, 188, 194, 201, 202, 206, 209, 214, 230, 250, 257, 265, 286)


def closed_form_genus(order: int, numerator: int, denominator: int) -> int:
    value = Fraction(order * numerator, denominator) + 1
    if value.denominator != 1:
        raise ValueError(f"closed form {numerator}/{denominator} does not divide {order}")
    return value.numerator


def _ranked_forms(family: str) -> Dict[int, ClosedForm]:
    return {"S": SYMMETRIC_FORMS, "B": B_FORMS, "D": D_FORMS}.get(family, {})


def _asymptotic(spec: GroupSpec) -> Optional[ClosedForm]:
    if spec.family == "S" and spec.n > SYMMETRIC_LIMIT:
        return ((2, 3, 8), 1, 48)
    if spec.family == "B" and spec.n > B_LIMIT:
        return ((2, 4, 6), 1, 24)
    if spec.family == "D" and spec.n > D_LIMIT:
        return ((2, 3, 8), 1, 48)
    return None


def lifts_published_238_pair(spec: GroupSpec) -> bool:
    """True when D_n gets its (2,3,8) pair by lifting the published S_n generators."""
    return spec.family == "D" and spec.n >= NON_238_RANGE_START and spec.n not in NON_238_DEGREES


def published_row(spec: GroupSpec) -> Optional[PublishedRow]:
    """The published row for spec, or None when the group is not covered."""
    if spec.family == "Dih":
        return PublishedRow(spec, TripleSignature(2, 2, spec.n), 0, "dihedral")
    if spec in GENUS_ZERO_ROWS:
        return PublishedRow(spec, TripleSignature(*GENUS_ZERO_ROWS[spec]), 0, "exceptional table")
    if spec.is_sporadic:
        triple, genus = SPORADIC_ROWS[spec.family]
        return PublishedRow(spec, TripleSignature(*triple), genus, "sporadic table")
    form = _ranked_forms(spec.family).get(spec.n)
    source = "exceptional table"
    if form is None:
        form = _asymptotic(spec)
        source = "lifted (2,3,8) pair" if lifts_published_238_pair(spec) else "asymptotic theorem"
    if form is None:
        return None
    triple, numerator, denominator = form
    genus = closed_form_genus(spec.expected_order(), numerator, denominator)
    return PublishedRow(spec, TripleSignature(*triple), genus, source)


def published_minimal_triple(spec: GroupSpec) -> Optional[TripleSignature]:
    row = published_row(spec)
    return row.triple if row else None


def published_genus(spec: GroupSpec) -> Optional[int]:
    row = published_row(spec)
    return row.genus if row else None


def exceptional_table_specs() -> List[GroupSpec]:
    """Every ranked group with a printed row, in table order."""
    specs = [GroupSpec("S", 3), GroupSpec("S", 4), GroupSpec("D", 3)]
    for family, forms in (("S", SYMMETRIC_FORMS), ("B", B_FORMS), ("D", D_FORMS)):
        specs.extend(GroupSpec(family, n) for n in sorted(forms))
    return specs

