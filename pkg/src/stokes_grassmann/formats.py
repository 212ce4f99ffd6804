"""JSON and CSV rendering of exact matrices.

Entries are written as decimal strings so that large integers survive any
JSON consumer.  JSON output uses sorted keys and is byte-for-byte
deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .partitions import BoxContext, parse_subset, subset_to_partition


def matrix_to_json(ctx: BoxContext, order: Sequence[Sequence[int]],
                   matrix: Sequence[Sequence[int]], kind: str | None = None) -> str:
    doc = {
        "r": ctx.r,
        "n": ctx.n,
        "order": [list(k) for k in order],
        "partitions": [list(subset_to_partition(k, ctx)) for k in order],
        "matrix": [[str(x) for x in row] for row in matrix],
    }
    if kind:
        doc["kind"] = kind
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def matrix_from_json(text: str) -> tuple[BoxContext, list[tuple[int, ...]], list[list[int]]]:
    doc = json.loads(text)
    ctx = BoxContext(doc["r"], doc["n"])
    order = [tuple(k) for k in doc["order"]]
    return ctx, order, [[int(x) for x in row] for row in doc["matrix"]]


def matrix_to_csv(order: Sequence[Sequence[int]], matrix: Sequence[Sequence[int]]) -> str:
    """Header row of subset labels; each data row starts with its label."""
    labels = [",".join(str(k) for k in K) for K in order]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix):
        writer.writerow([label] + [str(x) for x in row])
    return buf.getvalue()


def matrix_from_csv(text: str) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    order = [tuple(parse_subset(label)) for label in header[1:]]
    if [tuple(parse_subset(r[0])) for r in body] != order:
        raise ValueError("row labels do not match the header")
    return order, [[int(x) for x in r[1:]] for r in body]


def parse_matrix(text: str) -> list[list[int]]:
    """``"1,2;0,1"`` -> ``[[1, 2], [0, 1]]``."""
    return [[int(x) for x in row.split(",")] for row in text.strip().split(";") if row.strip()]


def format_matrix(matrix: Sequence[Sequence[int]]) -> str:
    return ";".join(",".join(str(x) for x in row) for row in matrix)
