"""
Document Schema Tests
=====================
"""
import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from polycalc.convex_function import PCFunc
from polycalc.exact_linalg import Mat
from polycalc.multifunction import MultiFn
from polycalc.polyhedron import HRep, VRep
from polycalc.relint import relative_interior
from polycalc.schemas import DocKind, HRepDoc, dumps, load, parse_document, to_document

SQUARE_DOC = {
    "kind": "hrep",
    "dim": 2,
    "eq": {"A": [], "b": []},
    "ineq": {"C": [["-1", "0"], ["1", "0"], ["0", "-1"], ["0", "1"]], "d": ["0", "1", "0", "1"]},
}


class TestParsing:

    def test_hrep(self):
        P = load(SQUARE_DOC, DocKind.HREP)
        assert isinstance(P, HRep)
        assert P.dim == 2 and P.n_ineq == 4
        assert P.contains((Fraction(1, 2), Fraction(1, 2)))

    def test_rationals_are_canonicalized(self):
        doc = parse_document({"kind": "point", "v": ["2/4", "-6/3", 7]})
        assert doc.v == ["1/2", "-2", "7"]

    def test_missing_blocks_default_to_empty(self):
        P = load({"kind": "hrep", "dim": 3})
        assert P == HRep.whole_space(3)

    def test_json_text(self):
        P = load(json.dumps(SQUARE_DOC))
        assert P.n_ineq == 4

    @pytest.mark.parametrize("doc", [
        {"kind": "point", "v": ["1.5"]},
        {"kind": "point", "v": ["1/0"]},
        {"kind": "hrep", "dim": 2, "ineq": {"C": [["1"]], "d": ["0"]}},
        {"kind": "hrep", "dim": 1, "ineq": {"C": [["1"]], "d": []}},
        {"kind": "multifn", "nx": 1, "ny": 1, "graph": {"kind": "hrep", "dim": 3}},
        {"kind": "pcf", "n": 1, "epi": {"kind": "hrep", "dim": 1}},
        {"kind": "polygon", "dim": 2},
        {"kind": "hrep", "dim": 1, "extra": 1},
    ])
    def test_schema_errors(self, doc):
        with pytest.raises(ValidationError):
            parse_document(doc)

    def test_wrong_kind(self):
        with pytest.raises(ValueError, match="expected a multifn document"):
            load(SQUARE_DOC, DocKind.MULTIFN)


class TestEmitting:

    def test_hrep_layout(self):
        doc = to_document(load(SQUARE_DOC))
        assert isinstance(doc, HRepDoc)
        assert json.loads(dumps(doc)) == SQUARE_DOC

    def test_sorted_compact_output(self):
        text = dumps({"member": True, "a": "1/2"})
        assert text == '{"a":"1/2","member":true}'

    def test_values_reparse_equal(self):
        values = [
            load(SQUARE_DOC),
            VRep(1, points=((Fraction(1, 3),),), rays=((Fraction(-1),),)),
            MultiFn.identity(2),
            PCFunc.from_pieces([((1,), 0), ((-1,), 0)]),
            Mat.from_rows([[1, Fraction(2, 3)]]),
            (Fraction(-3, 4), Fraction(5)),
        ]
        for value in values:
            assert load(dumps(to_document(value))) == value

    def test_relopen(self):
        ri = relative_interior(load(SQUARE_DOC))
        doc = json.loads(dumps(to_document(ri)))
        assert doc["kind"] == "relopen"
        assert set(doc) == {"kind", "dim", "eq", "strict"}
        assert len(doc["strict"]["C"]) == 4
        assert load(doc) == ri
