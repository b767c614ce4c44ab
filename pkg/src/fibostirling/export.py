"""JSON and CSV serialization of triangles (format version 1)."""
from __future__ import annotations

import csv
import io
import json
from types import MappingProxyType

from .qalgebra import QPoly
from .stirling import FAMILIES, Triangle

FORMAT_VERSION = 1


def _cells(tri: Triangle):
    for n in range(tri.max_n + 1):
        for k in range(n + 1):
            yield n, k, tri(n, k)


def to_json(tri: Triangle) -> str:
    doc = {
        "format": FORMAT_VERSION,
        "family": tri.family,
        "max_n": tri.max_n,
        "cells": [{"n": n, "k": k, "coeffs": list(p.coeffs)} for n, k, p in _cells(tri)],
    }
    return json.dumps(doc) + "\n"


def from_json(text: str) -> Triangle:
    doc = json.loads(text)
    _check_header(doc.get("format"), doc.get("family"))
    cells = {(c["n"], c["k"]): QPoly(c["coeffs"]) for c in doc["cells"]}
    return Triangle(doc["family"], int(doc["max_n"]), MappingProxyType(cells))


def to_csv(tri: Triangle) -> str:
    buf = io.StringIO()
    buf.write(f"# format={FORMAT_VERSION} family={tri.family} max_n={tri.max_n}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "coeffs"])
    for n, k, p in _cells(tri):
        w.writerow([n, k, " ".join(map(str, p.coeffs))])
    return buf.getvalue()


def from_csv(text: str) -> Triangle:
    head, _, body = text.partition("\n")
    if not head.startswith("#"):
        raise ValueError("missing CSV header comment")
    meta = dict(kv.split("=", 1) for kv in head[1:].split())
    _check_header(int(meta["format"]), meta["family"])
    rows = list(csv.reader(io.StringIO(body)))
    if rows[0] != ["n", "k", "coeffs"]:
        raise ValueError(f"unexpected CSV columns {rows[0]}")
    cells = {
        (int(n), int(k)): QPoly(int(c) for c in coeffs.split())
        for n, k, coeffs in rows[1:]
    }
    return Triangle(meta["family"], int(meta["max_n"]), MappingProxyType(cells))


def _check_header(version, family):
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {version!r}")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
