"""Antipodal point sets and their text file format."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..exactnum import ExactScalar, format_scalar, parse_scalar


class DesignError(ValueError):
    """Base class for invalid design input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DesignFormatError(DesignError):
    pass


class NormMismatchError(DesignError):
    pass


class DuplicateVectorError(DesignError):
    pass


def dot(x, y):
    total = 0
    for a, b in zip(x, y):
        total = total + a * b
    return total


def _is_zero_vec(v) -> bool:
    return all(c == 0 for c in v)


@dataclass(frozen=True)
class AntipodalDesign:
    """Half of an antipodal set ``X u -X`` on the sphere ``(x, x) = d``.

    Only one vector of each antipodal pair is stored. ``D`` is the square-free
    radicand of the coordinate field, 0 for rational coordinates.
    """

    n: int
    d: object
    vectors: tuple
    D: int = 0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        vecs = tuple(tuple(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        _validate(self.n, self.d, vecs)

    @property
    def s(self) -> int:
        return len(self.vectors)

    @property
    def is_rational(self) -> bool:
        def rat(c):
            return not isinstance(c, ExactScalar) or c.is_rational

        return rat(self.d) and all(rat(c) for v in self.vectors for c in v)

    def rational_vectors(self) -> list[list[Fraction]]:
        """Coordinates as Fractions; raises ``ValueError`` for irrational entries."""
        if not self.is_rational:
            raise ValueError(f"design {self.label or '?'} has irrational coordinates")
        return [[c.rational if isinstance(c, ExactScalar) else Fraction(c) for c in v]
                for v in self.vectors]

    def full_set(self) -> list[tuple]:
        """All of ``X u -X``."""
        return [*self.vectors, *(tuple(-c for c in v) for v in self.vectors)]


def _validate(n, d, vecs, lines=None):
    seen: dict[tuple, int] = {}
    for i, v in enumerate(vecs):
        line = lines[i] if lines else None
        where = f"vector {i}"
        if len(v) != n:
            raise DesignFormatError(f"{where} has {len(v)} entries, expected n = {n}", line)
        norm = dot(v, v)
        if norm != d:
            raise NormMismatchError(f"{where} has norm {format_scalar(norm)}, expected d = {format_scalar(d)}", line)
        neg = tuple(-c for c in v)
        if v in seen or neg in seen:
            kind = "repeats" if v in seen else "is the antipode of"
            j = seen.get(v, seen.get(neg))
            raise DuplicateVectorError(f"{where} {kind} vector {j}", line)
        seen[v] = i


def load_design(path) -> AntipodalDesign:
    """Read a design file; see :func:`save_design` for the format."""
    header: dict[str, str] = {}
    rows: list[list[str]] = []
    lines: list[int] = []
    label = ""
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if raw.strip().startswith("# label:"):
            label = raw.split(":", 1)[1].strip()
        if not text:
            continue
        if "=" in text and not rows:
            key, _, value = text.partition("=")
            key = key.strip()
            if key not in ("n", "d", "D", "s"):
                raise DesignFormatError(f"unknown header key {key!r}", lineno)
            header[key] = value.strip()
            continue
        rows.append(text.split())
        lines.append(lineno)

    missing = [k for k in ("n", "d", "D", "s") if k not in header]
    if missing:
        raise DesignFormatError(f"missing header keys {missing}")
    try:
        n, D, s = int(header["n"]), int(header["D"]), int(header["s"])
    except ValueError as exc:
        raise DesignFormatError(f"bad integer header: {exc}") from None
    try:
        d = parse_scalar(header["d"], D)
    except ValueError as exc:
        raise DesignFormatError(str(exc)) from None
    if len(rows) != s:
        raise DesignFormatError(f"header says s = {s} but found {len(rows)} vectors")

    vecs = []
    for row, lineno in zip(rows, lines):
        if len(row) != n:
            raise DesignFormatError(f"expected {n} entries, found {len(row)}", lineno)
        try:
            vecs.append(tuple(parse_scalar(tok, D) for tok in row))
        except ValueError as exc:
            raise DesignFormatError(str(exc), lineno) from None
    _validate(n, d, vecs, lines)
    return AntipodalDesign(n=n, d=d, vectors=tuple(vecs), D=D, label=label)


def save_design(design: AntipodalDesign, path) -> None:
    """Write ``n=``, ``d=``, ``D=``, ``s=`` header lines then one vector per line.

    Entries are ``p/q`` or ``p/q+r/s*sqrt(D)``; ``#`` starts a comment.
    """
    out = []
    if design.label:
        out.append(f"# label: {design.label}")
    out += [f"n={design.n}", f"d={format_scalar(design.d)}", f"D={design.D}", f"s={design.s}"]
    out += [" ".join(format_scalar(c) for c in v) for v in design.vectors]
    Path(path).write_text("\n".join(out) + "\n")
