"""Exact cone complexes and F1-schemes.

Documents are JSON texts (``{"format_version": 1, "kind": ..., "payload": ...}``)
or the equivalent dicts; reports come back as dicts.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional, Sequence, Union

from . import _core
from ._core import F1ConesError

__all__ = [
    "F1ConesError",
    "algebraise",
    "blow_up",
    "canonicalize",
    "check",
    "classify",
    "complete",
    "describe",
    "expansion_stages",
    "fixture",
    "fixture_names",
    "jet_oracle",
    "monodromy",
    "normalize",
    "sigma",
    "spec",
    "subdivide",
]

Document = Union[str, dict]


def _text(doc: Document) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def _load(text: str) -> Any:
    return json.loads(text)


def canonicalize(doc: Document) -> str:
    """Canonical serialization; parsing it again reproduces it byte for byte."""
    return _core.canonicalize(_text(doc))


def describe(doc: Document) -> dict:
    return _load(_core.describe(_text(doc)))


def check(prop: str, doc: Document) -> dict:
    """Verdict for separated, proper, overconvergent, quasicompact, noetherian,
    normal or algebraisable, with a witness when it fails."""
    return _load(_core.check(prop, _text(doc)))


def classify(doc: Document) -> dict:
    return _load(_core.classify(_text(doc)))


def sigma(doc: Document) -> dict:
    return _load(_core.sigma(_text(doc)))


def spec(doc: Document) -> dict:
    return _load(_core.spec(_text(doc)))


def normalize(doc: Document) -> tuple[dict, bool]:
    text, was_normal = _core.normalize(_text(doc))
    return _load(text), was_normal


def blow_up(doc: Document, ideals: Sequence[Sequence[Any]], normalize_charts: bool = False) -> dict:
    """Blow up along one monomial ideal per chart, each a list of characters."""
    out = _core.blow_up(_text(doc), json.dumps(ideals), normalize_charts)
    return {key: (_load(value) if isinstance(value, str) else value) for key, value in out.items()}


def complete(doc: Document, ideals: Sequence[Optional[Sequence[Any]]]) -> tuple[dict, list[int]]:
    """Formal completion; returns the formal atlas and the charts raising a Krull warning."""
    text, warnings = _core.complete(_text(doc), json.dumps(ideals))
    return _load(text), list(warnings)


def subdivide(doc: Document, functions: Sequence[Sequence[Sequence[int]]], include_zero: bool = False) -> tuple[dict, dict]:
    complex_text, morphism_text = _core.subdivide(_text(doc), json.dumps(functions), include_zero)
    return _load(complex_text), _load(morphism_text)


def algebraise(doc: Document) -> dict:
    return _load(_core.algebraise(_text(doc)))


def monodromy(doc: Document) -> list[dict]:
    return _load(_core.monodromy(_text(doc)))


def expansion_stages(cone: Document, kind: str, f: Sequence[int], center: Iterable[Sequence[int]], stages: int) -> list[dict]:
    texts = _core.expansion_stages(_text(cone), kind, json.dumps(list(f)), json.dumps(list(center)), stages)
    return [_load(t) for t in texts]


def jet_oracle(doc: Document, group: str = "Z", radius: int = 10) -> dict:
    return _load(_core.jet_oracle(_text(doc), group, radius))


def fixture_names() -> list[str]:
    return list(_core.fixture_names())


def fixture(name: str) -> dict:
    return _load(_core.fixture(name))
