"""Reading and writing algebras as JSON bracket tables.

Layout::

    {
      "dim": 7,
      "labels": ["X1", ..., "Y1"],
      "brackets": [
        {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
        ...
      ]
    }

Indices are 1-based with i < j; coefficients are strings matching
``-?[0-9]+(/[0-9]+)?`` so that no value ever passes through a float.
Brackets not listed are zero.  One bracket per line keeps diffs readable.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .errors import KabelianError
from .liealg import LieAlgebra, from_brackets

RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


class AlgebraFileError(KabelianError):
    pass


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if not isinstance(s, str) or not RATIONAL_RE.match(s):
        raise AlgebraFileError(f"bad rational {s!r}; expected an integer or p/q string")
    x = Fraction(s)
    if x.denominator == 0:  # pragma: no cover - Fraction raises first
        raise AlgebraFileError(f"zero denominator in {s!r}")
    return x


def dumps(g: LieAlgebra) -> str:
    lines = [
        "{",
        f'  "dim": {g.dim},',
        f'  "labels": {json.dumps(list(g.labels))},',
        '  "brackets": [',
    ]
    items = sorted(g.brackets.items())
    for n, ((i, j), terms) in enumerate(items):
        t = ", ".join(f'{{"k": {k}, "c": "{format_rational(c)}"}}' for k, c in terms)
        comma = "," if n + 1 < len(items) else ""
        lines.append(f'    {{"i": {i}, "j": {j}, "terms": [{t}]}}{comma}')
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> LieAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise AlgebraFileError("top level must be an object")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise AlgebraFileError("'dim' must be a nonnegative integer")
    labels = data.get("labels", [f"e{i}" for i in range(1, dim + 1)])
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(s, str) for s in labels):
        raise AlgebraFileError("'labels' must be a list of dim strings")
    entries = []
    seen = set()
    for b in data.get("brackets", []):
        try:
            i, j, terms = b["i"], b["j"], b["terms"]
        except (KeyError, TypeError):
            raise AlgebraFileError(f"bracket entry needs i, j, terms: {b!r}") from None
        if not (isinstance(i, int) and isinstance(j, int)) or not i < j:
            raise AlgebraFileError(f"bracket keys must be integers with i < j, got ({i}, {j})")
        if (i, j) in seen:
            raise AlgebraFileError(f"bracket ({i}, {j}) listed twice")
        seen.add((i, j))
        parsed = []
        for t in terms:
            if not isinstance(t, dict) or not isinstance(t.get("k"), int):
                raise AlgebraFileError(f"bad term {t!r}")
            parsed.append((t["k"], parse_rational(t.get("c"))))
        entries.append((i, j, parsed))
    return from_brackets(dim, labels, entries)


def write(g: LieAlgebra, path) -> None:
    Path(path).write_text(dumps(g))


def read(path) -> LieAlgebra:
    return loads(Path(path).read_text())
