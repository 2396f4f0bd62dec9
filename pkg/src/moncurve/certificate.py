"""JSON certificate documents for verdicts, principalizations and regularizations.

Field order is fixed by the dataclass; ``to_json`` never sorts keys, so the
same document always serializes to the same bytes. Bump SCHEMA_VERSION on
any layout change.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional

from .analyticity import Analytic, Inconclusive, NotAnalytic, Verdict
from .blowup import MoveSequence
from .principalize import PrincipalizationResult, Regularization
from .series import MonomialMap, format_series

SCHEMA_VERSION = 1


@dataclass
class CertificateDocument:
    schema_version: int
    command: str
    input: Dict[str, Any]
    verdict: str
    path: List[Dict[str, Any]] = field(default_factory=list)
    composite: List[List[int]] = field(default_factory=list)
    principal_monomial: Optional[List[int]] = None
    witness: Optional[Dict[str, Any]] = None
    certificate: Optional[Dict[str, Any]] = None
    derivation: List[Dict[str, Any]] = field(default_factory=list)
    limits: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=True) + "\n"

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "CertificateDocument":
        names = [f.name for f in fields(cls)]
        unknown = set(d) - set(names)
        if unknown:
            raise ValueError(f"unknown certificate fields: {sorted(unknown)}")
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(**{k: d[k] for k in names if k in d})

    @classmethod
    def from_json(cls, text: str) -> "CertificateDocument":
        return cls.from_dict(json.loads(text))

    def move_sequence(self, n: int) -> MoveSequence:
        from .blowup import ElementaryMove

        return MoveSequence(n, tuple(ElementaryMove.from_dict(m) for m in self.path))


def _matrix(E: MonomialMap) -> List[List[int]]:
    return [list(row) for row in E.matrix]


def _path_fields(path: MoveSequence) -> Dict[str, Any]:
    return {"path": path.to_list(), "composite": _matrix(path.composite)}


def verdict_document(text: str, n: int, verdict: Verdict, trunc: int, budget: int,
                     command: str = "decide") -> CertificateDocument:
    doc = CertificateDocument(SCHEMA_VERSION, command, {"expression": text, "nvars": n},
                              type(verdict).__name__, limits={"trunc": trunc, "budget": budget})
    if isinstance(verdict, Inconclusive):
        doc.certificate = {"reason": verdict.reason}
        doc.limits = {"trunc": verdict.truncation, "budget": verdict.budget}
        return doc
    doc.path, doc.composite = _path_fields(verdict.path).values()
    if isinstance(verdict, Analytic):
        doc.certificate = {
            "kind": verdict.kind,
            "quotient": format_series(verdict.certificate),
            "quotient_trunc": verdict.truncation,
        }
        return doc
    assert isinstance(verdict, NotAnalytic)
    doc.principal_monomial = list(verdict.M)
    doc.witness = verdict.witness.to_dict()
    doc.derivation = [s.to_dict() for s in verdict.derivation]
    return doc


def principalization_document(text: str, n: int, res: PrincipalizationResult, budget: int) -> CertificateDocument:
    doc = CertificateDocument(SCHEMA_VERSION, "principalize", {"ideal": text, "nvars": n}, "Principal",
                              limits={"budget": budget, "expansions": res.expansions})
    doc.path, doc.composite = _path_fields(res.path).values()
    doc.principal_monomial = list(res.M)
    doc.certificate = {
        "generators": [list(g) for g in res.ideal.gens],
        "source_generator": list(res.source),
        "chart_generators": [list(g) for g in res.chart_gens],
    }
    return doc


def regularization_document(text: str, n: int, reg: Regularization, budget: int) -> CertificateDocument:
    doc = CertificateDocument(SCHEMA_VERSION, "regularize", {"series": text, "nvars": n}, "Regularized",
                              limits={"budget": budget})
    doc.path, doc.composite = _path_fields(reg.path).values()
    doc.principal_monomial = list(reg.M)
    doc.certificate = {
        "reduced": [format_series(h, ["z%d" % (i + 1) for i in range(n)]) for h in reg.reduced],
        "unit_index": reg.unit_index,
        "support_ideal": [list(g) for g in reg.ideal.gens],
    }
    return doc
