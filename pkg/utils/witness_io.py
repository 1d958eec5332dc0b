"""
Witness Files
Versioned plain-text serialization of generating pairs for later re-verification
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Union

from utils.errors import GenusError, WitnessFormatError


logger = logging.getLogger(__name__)

WITNESS_HEADER = "# coxeter-genus witness v1"

REQUIRED_KEYS = ("group", "triple", "provenance", "x", "y")


@dataclass(frozen=True)
class WitnessRecord:
    """A witness as written on disk: every field is text until resolved against a group"""

    group: str
    triple: str
    provenance: str
    x: str
    y: str

    def to_text(self) -> str:
        lines = [WITNESS_HEADER]
        lines.extend(f"{key}: {getattr(self, key)}" for key in REQUIRED_KEYS)
        return "\n".join(lines) + "\n"

    def resolve(self, realization):
        """Decode into a PairWitness for the realized group; malformed fields are format errors."""
        from genus.search import PairWitness
        from genus.triples import TripleSignature

        try:
            triple = TripleSignature.parse(self.triple)
            x = realization.decode(self.x)
            y = realization.decode(self.y)
        except GenusError as exc:
            raise WitnessFormatError(f"witness for {self.group} is malformed: {exc}") from None
        return PairWitness(triple, x, y, self.provenance)


def record_for(realization, witness) -> WitnessRecord:
    return WitnessRecord(
        group=str(realization.spec),
        triple=str(witness.triple),
        provenance=witness.provenance,
        x=realization.encode(witness.x),
        y=realization.encode(witness.y),
    )


def parse_witness(text: str) -> WitnessRecord:
    lines: List[str] = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or lines[0] != WITNESS_HEADER:
        raise WitnessFormatError(f"missing witness header {WITNESS_HEADER!r}")

    fields: Dict[str, str] = {}
    for number, line in enumerate(lines[1:], start=2):
        if line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or not value.strip():
            raise WitnessFormatError(f"line {number}: expected 'key: value', got {line!r}")
        if key not in REQUIRED_KEYS:
            raise WitnessFormatError(f"line {number}: unknown key {key!r}")
        if key in fields:
            raise WitnessFormatError(f"line {number}: duplicate key {key!r}")
        fields[key] = value.strip()

    missing = [key for key in REQUIRED_KEYS if key not in fields]
    if missing:
        raise WitnessFormatError(f"witness is missing {', '.join(missing)}")
    return WitnessRecord(**fields)


def write_witness(path: Union[str, Path], record: WitnessRecord):
    Path(path).write_text(record.to_text(), encoding="utf-8")
    logger.info("wrote witness for %s to %s", record.group, path)


def read_witness(path: Union[str, Path]) -> WitnessRecord:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise WitnessFormatError(f"could not read witness file {path}: {exc}") from None
    return parse_witness(text)
