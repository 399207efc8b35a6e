"""
JSON Documents for polycalc
Every object crossing the command line is one of these documents; all numbers
are rational strings ("3", "-3/4").
"""
import json
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, List, Literal, Optional, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, TypeAdapter, model_validator

from polycalc.convex_function import PCFunc
from polycalc.exact_linalg import Mat, format_rat, parse_rat, vec
from polycalc.multifunction import MultiFn
from polycalc.relint import RelOpenHRep
from polycalc.representation import HRep, VRep


def _canonical_rat(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rat(value)
    return format_rat(parse_rat(value))


RatStr = Annotated[str, BeforeValidator(_canonical_rat)]


class DocKind(str, Enum):
    HREP = "hrep"
    VREP = "vrep"
    MULTIFN = "multifn"
    PCF = "pcf"
    RELOPEN = "relopen"
    POINT = "point"
    MATRIX = "matrix"


class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid")


def _check_block(rows: List[List[str]], rhs: List[str], dim: int, name: str):
    if len(rows) != len(rhs):
        raise ValueError(f"{name}: {len(rows)} rows but {len(rhs)} right-hand sides")
    for row in rows:
        if len(row) != dim:
            raise ValueError(f"{name}: row of length {len(row)} in dimension {dim}")


# ============ Row Blocks ============

class EqBlock(_Doc):
    A: List[List[RatStr]] = []
    b: List[RatStr] = []


class IneqBlock(_Doc):
    C: List[List[RatStr]] = []
    d: List[RatStr] = []


# ============ Documents ============

class HRepDoc(_Doc):
    kind: Literal["hrep"] = "hrep"
    dim: int = Field(..., ge=0)
    eq: EqBlock = EqBlock()
    ineq: IneqBlock = IneqBlock()

    @model_validator(mode="after")
    def _shapes(self):
        _check_block(self.eq.A, self.eq.b, self.dim, "eq")
        _check_block(self.ineq.C, self.ineq.d, self.dim, "ineq")
        return self


class VRepDoc(_Doc):
    kind: Literal["vrep"] = "vrep"
    dim: int = Field(..., ge=0)
    points: List[List[RatStr]] = []
    rays: List[List[RatStr]] = []
    lineality: List[List[RatStr]] = []

    @model_validator(mode="after")
    def _shapes(self):
        for v in self.points + self.rays + self.lineality:
            if len(v) != self.dim:
                raise ValueError(f"generator of length {len(v)} in dimension {self.dim}")
        return self


class MultiFnDoc(_Doc):
    kind: Literal["multifn"] = "multifn"
    nx: int = Field(..., ge=0)
    ny: int = Field(..., ge=0)
    graph: HRepDoc

    @model_validator(mode="after")
    def _shapes(self):
        if self.graph.dim != self.nx + self.ny:
            raise ValueError(f"graph dimension {self.graph.dim} != nx + ny = {self.nx + self.ny}")
        return self


class PCFDoc(_Doc):
    kind: Literal["pcf"] = "pcf"
    n: int = Field(..., ge=0)
    epi: HRepDoc

    @model_validator(mode="after")
    def _shapes(self):
        if self.epi.dim != self.n + 1:
            raise ValueError(f"epigraph dimension {self.epi.dim} != n + 1 = {self.n + 1}")
        return self


class RelOpenDoc(_Doc):
    kind: Literal["relopen"] = "relopen"
    dim: int = Field(..., ge=0)
    eq: EqBlock = EqBlock()
    strict: IneqBlock = IneqBlock()

    @model_validator(mode="after")
    def _shapes(self):
        _check_block(self.eq.A, self.eq.b, self.dim, "eq")
        _check_block(self.strict.C, self.strict.d, self.dim, "strict")
        return self


class PointDoc(_Doc):
    kind: Literal["point"] = "point"
    v: List[RatStr] = []


class MatrixDoc(_Doc):
    kind: Literal["matrix"] = "matrix"
    rows: List[List[RatStr]] = []
    ncols: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _shapes(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError(f"matrix row of length {len(row)}, expected {self.ncols}")
        return self


Document = Annotated[
    Union[HRepDoc, VRepDoc, MultiFnDoc, PCFDoc, RelOpenDoc, PointDoc, MatrixDoc],
    Field(discriminator="kind"),
]
_DOCUMENT = TypeAdapter(Document)


# ============ Conversion ============

def _strs(values) -> List[str]:
    return [format_rat(v) for v in values]


def _hrep_doc(P: HRep) -> HRepDoc:
    return HRepDoc(
        dim=P.dim,
        eq=EqBlock(A=[_strs(r) for r in P.eq_A.rows], b=_strs(P.eq_b)),
        ineq=IneqBlock(C=[_strs(r) for r in P.ineq_C.rows], d=_strs(P.ineq_d)),
    )


def _hrep(doc: HRepDoc) -> HRep:
    return HRep.from_rows(
        doc.dim,
        [(vec(parse_rat(x) for x in a), parse_rat(b)) for a, b in zip(doc.eq.A, doc.eq.b)],
        [(vec(parse_rat(x) for x in c), parse_rat(d)) for c, d in zip(doc.ineq.C, doc.ineq.d)],
    )


def _vectors(rows) -> tuple:
    return tuple(tuple(parse_rat(x) for x in r) for r in rows)


def to_document(obj) -> BaseModel:
    """The document for an in-memory value; tuples of rationals become points."""
    if isinstance(obj, HRep):
        return _hrep_doc(obj)
    if isinstance(obj, VRep):
        return VRepDoc(
            dim=obj.dim,
            points=[_strs(p) for p in obj.points],
            rays=[_strs(r) for r in obj.rays],
            lineality=[_strs(l) for l in obj.lineality],
        )
    if isinstance(obj, MultiFn):
        return MultiFnDoc(nx=obj.nx, ny=obj.ny, graph=_hrep_doc(obj.graph))
    if isinstance(obj, PCFunc):
        return PCFDoc(n=obj.n, epi=_hrep_doc(obj.epi))
    if isinstance(obj, RelOpenHRep):
        return RelOpenDoc(
            dim=obj.dim,
            eq=EqBlock(A=[_strs(r) for r in obj.eq_A.rows], b=_strs(obj.eq_b)),
            strict=IneqBlock(C=[_strs(r) for r in obj.strict_C.rows], d=_strs(obj.strict_d)),
        )
    if isinstance(obj, Mat):
        return MatrixDoc(rows=[_strs(r) for r in obj.rows], ncols=obj.ncols)
    if isinstance(obj, tuple):
        return PointDoc(v=_strs(obj))
    raise TypeError(f"no document kind for {type(obj).__name__}")


def from_document(doc: BaseModel):
    if isinstance(doc, HRepDoc):
        return _hrep(doc)
    if isinstance(doc, VRepDoc):
        return VRep(doc.dim, _vectors(doc.points), _vectors(doc.rays), _vectors(doc.lineality))
    if isinstance(doc, MultiFnDoc):
        return MultiFn(doc.nx, doc.ny, _hrep(doc.graph))
    if isinstance(doc, PCFDoc):
        return PCFunc(doc.n, _hrep(doc.epi))
    if isinstance(doc, RelOpenDoc):
        return RelOpenHRep(
            doc.dim,
            Mat(_vectors(doc.eq.A), doc.dim), tuple(parse_rat(x) for x in doc.eq.b),
            Mat(_vectors(doc.strict.C), doc.dim), tuple(parse_rat(x) for x in doc.strict.d),
        )
    if isinstance(doc, MatrixDoc):
        return Mat(_vectors(doc.rows), doc.ncols)
    if isinstance(doc, PointDoc):
        return tuple(parse_rat(x) for x in doc.v)
    raise TypeError(f"not a polycalc document: {type(doc).__name__}")


def parse_document(data: Union[str, bytes, dict]) -> BaseModel:
    """Validate JSON text (or an already-decoded dict) into its document model."""
    if isinstance(data, (str, bytes)):
        return _DOCUMENT.validate_json(data)
    return _DOCUMENT.validate_python(data)


def load(data: Union[str, bytes, dict], expected: Optional[DocKind] = None):
    doc = parse_document(data)
    if expected is not None and doc.kind != expected.value:
        raise ValueError(f"expected a {expected.value} document, got {doc.kind}")
    return from_document(doc)


def dumps(payload) -> str:
    """Deterministic JSON: sorted keys, compact separators, canonical rationals."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
