"""Smoke tests for the python bindings."""

import json
import os
import pathlib

import pytest

import trideg

CORPUS = pathlib.Path(os.environ["TRIDEG_CORPUS_DIR"])

TYPE_IV_222 = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
TYPE_III_222 = [[[0, 1], [1, 0]], [[1, 0], [0, 0]]]


def test_classify_generic_222():
    rep = trideg.classify(TYPE_IV_222)
    assert rep["trk"] == 2
    assert rep["det_zero"] is False
    assert rep["concise"] is True
    assert rep["canonical_type"] == "IV"


def test_classify_rank_three():
    rep = trideg.classify(TYPE_III_222)
    assert rep["trk"] == 3
    assert rep["det_zero"] is True
    assert rep["essential_format"] == [2, 2, 2]


def test_hyperdet_and_schlafli_agree():
    assert trideg.hyperdet_222(TYPE_IV_222) == "1"
    assert trideg.hyperdet_222(TYPE_III_222) == "0"
    value, det_l_zero = trideg.schlafli(TYPE_IV_222)
    assert value == "1"
    assert det_l_zero is False


def test_rational_entries():
    t = [[["1/2", 0], [0, 0]], [[0, 0], [0, "-3/4"]]]
    rep = trideg.classify(t)
    assert rep["trk"] == 2


def test_analyze_file_with_hints():
    rep = trideg.analyze_file(CORPUS / "example_3_11.json")
    assert rep["degenerate"]["status"] == "degenerate-with-certificate"
    cert = rep["degenerate"]["certificate"]
    entries = json.load(open(CORPUS / "example_3_11.json"))["entries"]
    assert trideg.verify_kernel_triple(entries, cert["x"], cert["y"], cert["z"])


def test_diagnose():
    entries = json.load(open(CORPUS / "example_3_10.json"))["entries"]
    d = trideg.diagnose(entries, "z", [1, 1, 0, -1])
    assert d["bidegenerate"] is True
    assert d["rank_at"] == 1


def test_det_assoc_and_formats():
    entries = json.load(open(CORPUS / "example_3_11.json"))["entries"]
    assert trideg.det_assoc(entries, "z") == "z1^2*z4 - z1*z2^2 + z1*z2*z3 - z3*z4^2"
    assert trideg.index_ranks(entries) == (3, 3, 4)
    assert trideg.essential_format(TYPE_III_222) == (2, 2, 2)


def test_zero_tensor_raises():
    with pytest.raises(trideg.ZeroTensorError):
        trideg.classify([[[0, 0], [0, 0]], [[0, 0], [0, 0]]])


def test_format_error():
    with pytest.raises(trideg.FormatError):
        trideg.hyperdet_222([[[1, 0, 0], [0, 0, 0]], [[0, 0, 0], [0, 0, 0]]])
