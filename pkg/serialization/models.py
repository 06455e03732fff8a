"""JSON documents read and written by the command line.

Matrices are nested lists of scalar strings ("3", "-1/2"). A Hopf algebra
is either inline or a string "builtin:NAME".
"""
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

MatrixData = list[list[str]]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class HopfModel(_Document):
    name: str = "H"
    dim: int = Field(ge=1)
    mult: MatrixData
    unit: MatrixData
    comult: MatrixData
    counit: MatrixData
    antipode: MatrixData
    rform: Optional[MatrixData] = None
    ribbon_form: Optional[MatrixData] = None
    basis: list[str] = Field(default_factory=list)


HopfRef = Union[str, HopfModel]


class ComoduleModel(_Document):
    hopf: HopfRef
    name: str = ""
    level: int = Field(default=1, ge=0)
    dim: int = Field(ge=0)
    coaction: MatrixData


class MorphismModel(_Document):
    name: str = "f"
    src: ComoduleModel
    dst: ComoduleModel
    matrix: MatrixData


class ObjectModel(_Document):
    name: str
    dim: int = Field(ge=1)
    coaction: MatrixData


class ArrowModel(_Document):
    name: str
    src: str
    dst: str
    matrix: MatrixData


class DiagramModel(_Document):
    name: str = "D"
    hopf: HopfRef
    objects: list[ObjectModel]
    arrows: list[ArrowModel] = Field(default_factory=list)
    full_homs: bool = False
    unit_object: Optional[str] = None
    tensor_table: list[tuple[str, str, str]] = Field(default_factory=list)
    dual_table: dict[str, str] = Field(default_factory=dict)
    zeta: Union[Literal["rform"], MatrixData] = "rform"
    dual_witnesses: dict[str, MatrixData] = Field(default_factory=dict)


class SquaredModel(_Document):
    name: str = "C"
    hopf: HopfRef
    dim: int = Field(ge=0)
    coaction: MatrixData
    delta: MatrixData
    eps: MatrixData


class SquaredComoduleModel(_Document):
    name: str = "X"
    over: SquaredModel
    dim: int = Field(ge=0)
    coaction: MatrixData
    delta: MatrixData


class BicoalgebraModel(_Document):
    mult: MatrixData
    unit: MatrixData


class HopfCoalgebraModel(_Document):
    gamma_r: MatrixData
    gamma_l: MatrixData


class QTModel(_Document):
    r_plus: MatrixData
    r_minus: MatrixData


class RibbonModel(_Document):
    theta: MatrixData


class CoendModel(_Document):
    """A coend with whichever induced structures were requested"""
    field: str = "QQ"
    diagram: DiagramModel
    coalgebra: SquaredModel
    q: dict[str, MatrixData]
    bicoalgebra: Optional[BicoalgebraModel] = None
    hopf_coalgebra: Optional[HopfCoalgebraModel] = None
    quasitriangular: Optional[QTModel] = None
    ribbon: Optional[RibbonModel] = None


class EntryModel(_Document):
    check: str
    status: Literal["pass", "fail"]
    witness: Optional[dict] = None
    note: Optional[str] = None


class ReportModel(_Document):
    ok: bool
    entries: list[EntryModel]
