"""JSON interchange format for matroids.

    {"n": 7, "rank": 3, "kind": "rank2flats", "data": [[0, 1, 2], ...]}

``kind`` is one of ``rank2flats`` (lines of three or more points of a
simple rank-3 matroid), ``bases``, ``uniform`` (``data`` ignored) or
``pg2`` (``data`` is the order q). An optional ``labels`` list names the
elements; ``data`` then refers to those names and they are normalized to
``0..n-1`` on load.
"""

from __future__ import annotations

import json
from math import comb

from .errors import MatroidError, ParseError
from .matroid import Matroid, from_bases, from_rank2_flats, members, pg2, popcount, uniform

KINDS = ("rank2flats", "bases", "uniform", "pg2")


def _field(doc, name, kind):
    if name not in doc:
        raise ParseError(f"missing field {name!r}")
    value = doc[name]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"field {name!r} must be {kind.__name__}, got {type(value).__name__}")
    return value


def _subsets(data, index, n):
    if not isinstance(data, list):
        raise ParseError("field 'data' must be a list of element lists")
    out = []
    for i, entry in enumerate(data):
        if not isinstance(entry, list):
            raise ParseError(f"data[{i}] must be a list")
        mask = 0
        for j, x in enumerate(entry):
            if index is not None:
                if x not in index:
                    raise ParseError(f"data[{i}][{j}] = {x!r} is not a declared label")
                x = index[x]
            elif not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise ParseError(f"data[{i}][{j}] = {x!r} is not an element of 0..{n - 1}")
            mask |= 1 << x
        out.append(mask)
    return out


def matroid_from_json(doc) -> Matroid:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    n = _field(doc, "n", int)
    rank = _field(doc, "rank", int)
    kind = _field(doc, "kind", str)
    if kind not in KINDS:
        raise ParseError(f"field 'kind' must be one of {', '.join(KINDS)}, got {kind!r}")
    labels = doc.get("labels")
    index = None
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise ParseError(f"field 'labels' must list exactly {n} names")
        try:
            index = {x: i for i, x in enumerate(labels)}
        except TypeError:
            raise ParseError("labels must be strings or numbers") from None
        if len(index) != n:
            raise ParseError("field 'labels' has duplicates")
    data = doc.get("data")
    try:
        if kind == "rank2flats":
            if rank != 3:
                raise ParseError("kind 'rank2flats' requires rank 3")
            M = from_rank2_flats(n, _subsets(data, index, n))
        elif kind == "bases":
            M = from_bases(n, _subsets(data, index, n))
            if M.rank != rank:
                raise ParseError(f"field 'rank' is {rank} but the bases have size {M.rank}")
        elif kind == "uniform":
            M = uniform(rank, n)
        else:
            if not isinstance(data, int) or isinstance(data, bool):
                raise ParseError("field 'data' must be the integer order q for kind 'pg2'")
            M = pg2(data)
            if M.n != n or rank != 3:
                raise ParseError(f"PG(2,{data}) has n={M.n} and rank 3")
    except ParseError:
        raise
    except MatroidError as exc:
        raise ParseError(f"field 'data': {exc}") from exc
    M.label = doc.get("label", M.label)
    if labels is not None:
        M.element_labels = tuple(labels)
    return M


def loads(text: str) -> Matroid:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return matroid_from_json(doc)


def load(path) -> Matroid:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def matroid_to_json(M: Matroid) -> dict:
    """Smallest faithful encoding: uniform, then rank-2 lines, then bases."""
    doc: dict = {"n": M.n, "rank": M.rank}
    if M.is_loopless() and all(len(M.flats_by_rank[k]) == comb(M.n, k) for k in range(M.rank)):
        doc.update(kind="uniform", data=None)
    elif M.rank == 3 and M.is_simple():
        doc.update(kind="rank2flats",
                   data=[members(F) for F in M.flats_by_rank[2] if popcount(F) >= 3])
    else:
        doc.update(kind="bases", data=[members(B) for B in M.bases()])
    if M.label:
        doc["label"] = M.label
    return doc


def dumps(M: Matroid) -> str:
    return json.dumps(matroid_to_json(M))
