"""Deterministic interchange formats for complexes.

Text: an optional ``# dim=D n=N space=V`` header followed by one facet per
line as space-separated signed integers, facets in canonical lexicographic
order.  JSON: an object with ambient_n, dim, space and the facet arrays,
likewise canonically sorted.  ``parse(print(x)) == x`` holds byte-for-byte
for both formats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Complex
from .errors import ParseError

SPACES = ("V", "W")


@dataclass(frozen=True)
class ComplexFile:
    """A complex plus its label-space tag (V: ±1..±n, W: ±3..±(n+2))."""

    complex: Complex
    space: str = "V"

    def __post_init__(self):
        if self.space not in SPACES:
            raise ParseError(f"unknown label space {self.space!r}")


def dumps_text(cf: ComplexFile) -> str:
    c = cf.complex
    lines = [f"# dim={c.dim} n={c.ambient_n} space={cf.space}"]
    lines.extend(" ".join(str(v) for v in f) for f in c.sorted_facets())
    return "\n".join(lines) + "\n"


def loads_text(text: str) -> ComplexFile:
    space = "V"
    header_n = None
    header_dim = None
    facets: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                if "=" not in token:
                    raise ParseError(f"malformed header token {token!r}", lineno)
                key, value = token.split("=", 1)
                if key == "dim":
                    header_dim = int(value)
                elif key == "n":
                    header_n = int(value)
                elif key == "space":
                    if value not in SPACES:
                        raise ParseError(f"unknown label space {value!r}", lineno)
                    space = value
                else:
                    raise ParseError(f"unknown header key {key!r}", lineno)
            continue
        try:
            labels = tuple(int(t) for t in line.split())
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if any(v == 0 for v in labels):
            raise ParseError("vertex label 0 is forbidden", lineno)
        if len(set(labels)) != len(labels):
            raise ParseError(f"repeated label in facet {labels}", lineno)
        facets.append(labels)
    if header_n is None:
        header_n = max((abs(v) for f in facets for v in f), default=0)
    try:
        c = Complex(facets, header_n)
    except Exception as exc:
        raise ParseError(str(exc)) from None
    if header_dim is not None and not c.is_void and c.dim != header_dim:
        raise ParseError(f"header dim={header_dim} but facets have dim {c.dim}")
    return ComplexFile(complex=c, space=space)


def dumps_json(cf: ComplexFile) -> str:
    c = cf.complex
    payload = {
        "ambient_n": c.ambient_n,
        "dim": c.dim,
        "space": cf.space,
        "facets": [list(f) for f in c.sorted_facets()],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def loads_json(text: str) -> ComplexFile:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", exc.lineno) from None
    if not isinstance(payload, dict) or "facets" not in payload:
        raise ParseError("expected an object with a 'facets' array")
    facets = payload["facets"]
    for f in facets:
        if any(v == 0 for v in f):
            raise ParseError(f"vertex label 0 is forbidden in facet {f}")
    ambient = payload.get("ambient_n")
    if ambient is None:
        ambient = max((abs(v) for f in facets for v in f), default=0)
    space = payload.get("space", "V")
    if space not in SPACES:
        raise ParseError(f"unknown label space {space!r}")
    try:
        c = Complex(facets, ambient)
    except Exception as exc:
        raise ParseError(str(exc)) from None
    if "dim" in payload and not c.is_void and c.dim != payload["dim"]:
        raise ParseError(f"declared dim={payload['dim']} but facets have dim {c.dim}")
    return ComplexFile(complex=c, space=space)


def dumps(cf: ComplexFile, format: str = "json") -> str:
    if format == "json":
        return dumps_json(cf)
    if format == "text":
        return dumps_text(cf)
    raise ParseError(f"unknown format {format!r}")


def loads(text: str) -> ComplexFile:
    """Parse either format, sniffing JSON by its leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return loads_json(text)
    return loads_text(text)


def read_path(path: str) -> ComplexFile:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def write_path(path: str, cf: ComplexFile, format: str | None = None) -> None:
    if format is None:
        format = "text" if path.endswith((".txt", ".text", ".sc")) else "json"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(cf, format))
