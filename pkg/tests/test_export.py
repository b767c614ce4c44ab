import pytest
from hypothesis import given, strategies as st

from fibostirling import export, stirling


@given(st.sampled_from(stirling.FAMILIES), st.integers(0, 8))
def test_json_round_trip(family, n):
    tri = stirling.triangle(family, n)
    text = export.to_json(tri)
    back = export.from_json(text)
    assert export.to_json(back) == text
    assert back.row(n) == tri.row(n)


@given(st.sampled_from(stirling.FAMILIES), st.integers(0, 8))
def test_csv_round_trip(family, n):
    tri = stirling.triangle(family, n)
    text = export.to_csv(tri)
    assert export.to_csv(export.from_csv(text)) == text


def test_csv_rows():
    text = export.to_csv(stirling.triangle("SFbar", 5))
    assert "5,3,6 4 1" in text.splitlines()
    assert text.startswith("# format=1 family=SFbar max_n=5\nn,k,coeffs\n")


def test_version_checked():
    with pytest.raises(ValueError):
        export.from_json('{"format": 2, "family": "SF", "max_n": 0, "cells": []}')
    with pytest.raises(ValueError):
        export.from_csv("# format=1 family=XX max_n=0\nn,k,coeffs\n")
