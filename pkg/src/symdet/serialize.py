"""Matrix JSON and DOT output.

Format::

    {"field": {"p": 2, "k": 1, "modulus": null},
     "vars": ["x", "y", "z"], "n": 2,
     "entries": [[1, "x"], ["x", "y+1"]]}

Entries are field literals (ints), variable names, or polynomial strings.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidEntry, NotAlternating, ParseError
from .field import FieldSpec
from .gadgets import WeightedGraph
from .poly import Polynomial, parse_poly
from .symmat import PolyMatrix


def encode_entry(e: Polynomial):
    if e.is_constant():
        return e.constant_term().value
    if e.is_variable():
        return e.variables[e.variable_index()]
    return e.format()


def matrix_to_dict(M: PolyMatrix) -> dict:
    F = M.field
    return {
        "field": {"p": F.p, "k": F.k, "modulus": F.modulus},
        "vars": list(M.variables),
        "n": M.n,
        "entries": [[encode_entry(e) for e in row] for row in M.rows],
    }


def dumps_matrix(M: PolyMatrix) -> str:
    # one row per line keeps fixtures diffable
    d = matrix_to_dict(M)
    rows = ",\n    ".join(json.dumps(r) for r in d["entries"])
    head = json.dumps({k: d[k] for k in ("field", "vars", "n")})[:-1]
    return f'{head}, "entries": [\n    {rows}\n]}}\n'


def matrix_from_dict(d: dict, check: str | None = "symmetric") -> PolyMatrix:
    """Build a matrix; ``check`` is "symmetric", "alternating" or None."""
    try:
        fd = d["field"]
        field = FieldSpec(int(fd.get("p", 2)), int(fd.get("k", 1)), fd.get("modulus"))
        variables = tuple(d["vars"])
        entries = d["entries"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed matrix JSON: missing {exc}") from exc
    n = d.get("n", len(entries))
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ParseError(f"entries do not form a {n}x{n} matrix")
    for row in entries:
        for e in row:
            if isinstance(e, bool) or not isinstance(e, (int, str)):
                raise ParseError(f"entry {e!r} is neither an integer nor a string")
            if isinstance(e, int) and not 0 <= e < field.order:
                raise ParseError(f"{e} is not a literal of {field}")
    M = PolyMatrix.from_entries(field, variables, entries)
    if check == "symmetric" and not M.is_symmetric():
        raise InvalidEntry("matrix is not symmetric")
    if check == "alternating" and not M.is_alternating():
        raise NotAlternating("matrix is not alternating")
    return M


def load_matrix(path, check: str | None = "symmetric") -> PolyMatrix:
    try:
        d = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return matrix_from_dict(d, check)


def save_matrix(M: PolyMatrix, path):
    Path(path).write_text(dumps_matrix(M))


def matrix_to_dot(M: PolyMatrix, name: str = "G") -> str:
    return WeightedGraph.from_matrix(M).to_dot(name)


def parse_in(M: PolyMatrix, text: str) -> Polynomial:
    """Parse ``text`` over the matrix ring."""
    return parse_poly(text, M.field, M.variables)
