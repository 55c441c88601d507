"""Certificates: vertex sets claimed to induce bounded degree, plus JSON forms."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class Certificate:
    """A vertex subset claimed to induce maximum degree <= d.

    ``members`` are sorted element tuples for Kneser vertices, or 1-based
    vertex indices for generic graphs.  ``provenance`` records where the set
    came from: "solver", "heuristic" or "user".
    """

    d: int
    members: tuple
    provenance: str = "user"
    n: int | None = None
    k: int | None = None

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self, valid: bool | None = None) -> str:
        doc = {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "set": [list(m) if isinstance(m, tuple) else m for m in self.members],
        }
        if valid is not None:
            doc["valid"] = valid
        return json.dumps(doc)


def certificate_from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed certificate JSON: {exc}") from exc
    if not isinstance(doc, dict) or "set" not in doc:
        raise DomainError("certificate JSON must be an object with a 'set' field")
    members = []
    for entry in doc["set"]:
        if isinstance(entry, list):
            members.append(tuple(sorted(int(e) for e in entry)))
        elif isinstance(entry, int):
            members.append(entry)
        else:
            raise DomainError(f"unsupported set entry {entry!r}")
    return Certificate(
        d=int(doc.get("d", 1)),
        members=tuple(members),
        provenance="user",
        n=doc.get("n"),
        k=doc.get("k"),
    )
