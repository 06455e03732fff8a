import json
import logging
from pathlib import Path
from typing import Optional, TypeVar

from pydantic import BaseModel

from exactla import Field, Matrix, from_rows, to_rows
from hopf import HopfAlgebra, builtin
from comod import ComodMorphism, Comodule
from squared import (
    Bicoalgebra,
    HopfCoalgebra,
    QTHopfCoalgebra,
    RibbonHopfCoalgebra,
    SquaredCoalgebra,
    SquaredComodule,
)
from coend import Arrow, CoendCoalgebra, Diagram, builtin_diagram
from serialization.models import (
    ArrowModel,
    BicoalgebraModel,
    CoendModel,
    ComoduleModel,
    DiagramModel,
    HopfCoalgebraModel,
    HopfModel,
    HopfRef,
    MatrixData,
    MorphismModel,
    ObjectModel,
    QTModel,
    ReportModel,
    RibbonModel,
    SquaredComoduleModel,
    SquaredModel,
)
from utils.errors import ShcError, UnknownFixture
from utils.report import VerificationReport

logger = logging.getLogger(__name__)

BUILTIN_PREFIX = "builtin:"

M = TypeVar("M", bound=BaseModel)


def _matrix(rows: MatrixData, field: Field, cols: int = 0) -> Matrix:
    return from_rows(rows, field.domain, cols)


def dumps(model: BaseModel) -> str:
    """Sorted keys and fixed indentation, so equal documents are equal bytes"""
    data = model.model_dump(mode="json", exclude_none=True)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save(model: BaseModel, path: str):
    Path(path).write_text(dumps(model), encoding="utf-8")
    logger.info(f"wrote {type(model).__name__} to {path}")


def load(path: str, model: type[M]) -> M:
    text = Path(path).read_text(encoding="utf-8")
    return model.model_validate(json.loads(text))


def builtin_name(ref: str) -> Optional[str]:
    return ref[len(BUILTIN_PREFIX):] if ref.startswith(BUILTIN_PREFIX) else None


# Hopf algebras


def hopf_from_ref(ref: HopfRef, field: Field) -> HopfAlgebra:
    if isinstance(ref, str):
        name = builtin_name(ref)
        if name is None:
            raise UnknownFixture(f"Hopf algebra reference {ref!r} must start with {BUILTIN_PREFIX!r}")
        return builtin(name, field)
    return HopfAlgebra(
        field=field,
        dim=ref.dim,
        mult=_matrix(ref.mult, field),
        unit=_matrix(ref.unit, field),
        comult=_matrix(ref.comult, field),
        counit=_matrix(ref.counit, field),
        antipode=_matrix(ref.antipode, field),
        rform=_matrix(ref.rform, field) if ref.rform is not None else None,
        ribbon_form=_matrix(ref.ribbon_form, field) if ref.ribbon_form is not None else None,
        name=ref.name,
        basis=tuple(ref.basis),
    )


def hopf_to_ref(H: HopfAlgebra) -> HopfRef:
    """``builtin:NAME`` when H is literally that builtin, otherwise the full constants"""
    try:
        if builtin(H.name, H.field).same_as(H):
            return BUILTIN_PREFIX + H.name
    except UnknownFixture:
        pass
    return HopfModel(
        name=H.name,
        dim=H.dim,
        mult=to_rows(H.mult),
        unit=to_rows(H.unit),
        comult=to_rows(H.comult),
        counit=to_rows(H.counit),
        antipode=to_rows(H.antipode),
        rform=to_rows(H.rform) if H.rform is not None else None,
        ribbon_form=to_rows(H.ribbon_form) if H.ribbon_form is not None else None,
        basis=list(H.basis),
    )


# Comodules and morphisms


def comodule_from_model(m: ComoduleModel, field: Field) -> Comodule:
    H = hopf_from_ref(m.hopf, field)
    return Comodule(H, m.level, m.dim, _matrix(m.coaction, field, m.dim), m.name)


def comodule_to_model(X: Comodule) -> ComoduleModel:
    return ComoduleModel(hopf=hopf_to_ref(X.hopf), name=X.name, level=X.level, dim=X.dim,
                         coaction=to_rows(X.coaction))


def morphism_from_model(m: MorphismModel, field: Field) -> ComodMorphism:
    src, dst = comodule_from_model(m.src, field), comodule_from_model(m.dst, field)
    return ComodMorphism(src, dst, _matrix(m.matrix, field, src.dim), m.name)


# Diagrams


def diagram_from_model(m: DiagramModel, field: Field) -> Diagram:
    H = hopf_from_ref(m.hopf, field)
    objects = {o.name: Comodule(H, 1, o.dim, _matrix(o.coaction, field, o.dim), o.name) for o in m.objects}
    if len(objects) != len(m.objects):
        raise ShcError(f"diagram {m.name} lists an object name twice")
    arrows = tuple(Arrow(a.name, a.src, a.dst, _matrix(a.matrix, field)) for a in m.arrows)
    zeta = m.zeta if isinstance(m.zeta, str) else _matrix(m.zeta, field)
    D = Diagram(H, objects, arrows, m.unit_object, {(a, b): t for a, b, t in m.tensor_table},
                dict(m.dual_table), zeta, m.name,
                {key: _matrix(rows, field) for key, rows in m.dual_witnesses.items()})
    return D.with_full_homs() if m.full_homs else D


def diagram_to_model(D: Diagram) -> DiagramModel:
    zeta = D.zeta_source if isinstance(D.zeta_source, str) else to_rows(D.zeta_source)
    return DiagramModel(
        name=D.name,
        hopf=hopf_to_ref(D.hopf),
        objects=[ObjectModel(name=key, dim=X.dim, coaction=to_rows(X.coaction)) for key, X in D.objects.items()],
        arrows=[ArrowModel(name=a.name, src=a.src, dst=a.dst, matrix=to_rows(a.matrix)) for a in D.arrows],
        unit_object=D.unit_object,
        tensor_table=[(a, b, t) for (a, b), t in sorted(D.tensor_table.items())],
        dual_table=dict(D.dual_table),
        dual_witnesses={key: to_rows(phi) for key, phi in sorted(D.dual_witnesses.items())},
        zeta=zeta,
    )


def load_diagram(ref: str, field: Field) -> Diagram:
    """A diagram file or ``builtin:NAME``"""
    name = builtin_name(ref)
    if name is not None:
        return builtin_diagram(name, field)
    return diagram_from_model(load(ref, DiagramModel), field)


# Squared coalgebras and their comodules


def squared_from_model(m: SquaredModel, field: Field) -> SquaredCoalgebra:
    H = hopf_from_ref(m.hopf, field)
    C = Comodule(H, 2, m.dim, _matrix(m.coaction, field, m.dim), m.name)
    return SquaredCoalgebra(C, _matrix(m.delta, field, m.dim), _matrix(m.eps, field, m.dim), m.name)


def squared_to_model(S: SquaredCoalgebra) -> SquaredModel:
    return SquaredModel(name=S.name, hopf=hopf_to_ref(S.hopf), dim=S.dim, coaction=to_rows(S.C.coaction),
                        delta=to_rows(S.delta), eps=to_rows(S.eps))


def squared_comodule_from_model(m: SquaredComoduleModel, field: Field) -> SquaredComodule:
    S = squared_from_model(m.over, field)
    X = Comodule(S.hopf, 1, m.dim, _matrix(m.coaction, field, m.dim), m.name)
    return SquaredComodule(S, X, _matrix(m.delta, field, m.dim), m.name)


# Coends


def coend_to_model(E: CoendCoalgebra) -> CoendModel:
    model = CoendModel(
        field=str(E.diagram.hopf.field),
        diagram=diagram_to_model(E.diagram),
        coalgebra=squared_to_model(E.C),
        q={key: to_rows(E.q[key]) for key in E.diagram.names},
    )
    if E.bi is not None:
        model.bicoalgebra = BicoalgebraModel(mult=to_rows(E.bi.mult), unit=to_rows(E.bi.unit))
    if E.hopf is not None:
        model.hopf_coalgebra = HopfCoalgebraModel(gamma_r=to_rows(E.hopf.gamma_r), gamma_l=to_rows(E.hopf.gamma_l))
    if E.qt is not None:
        model.quasitriangular = QTModel(r_plus=to_rows(E.qt.r_plus), r_minus=to_rows(E.qt.r_minus))
    if E.ribbon is not None:
        model.ribbon = RibbonModel(theta=to_rows(E.ribbon.theta))
    return model


def coend_from_model(m: CoendModel, field: Optional[Field] = None) -> CoendCoalgebra:
    """The stored structures as they are, without recomputing anything"""
    field = field or Field.parse(m.field)
    D = diagram_from_model(m.diagram, field)
    C = squared_from_model(m.coalgebra, field)
    q = {key: _matrix(rows, field) for key, rows in m.q.items()}
    missing = [key for key in D.names if key not in q]
    if missing:
        raise ShcError(f"coend document has no projection for {', '.join(missing)}")
    bi = hopf = qt = ribbon = None
    if m.bicoalgebra is not None:
        bi = Bicoalgebra(C, _matrix(m.bicoalgebra.mult, field), _matrix(m.bicoalgebra.unit, field))
    if m.hopf_coalgebra is not None:
        if bi is None:
            raise ShcError("a Hopf coalgebra document needs its bicoalgebra")
        hopf = HopfCoalgebra(bi, _matrix(m.hopf_coalgebra.gamma_r, field), _matrix(m.hopf_coalgebra.gamma_l, field),
                             D.zeta_source)
    if m.quasitriangular is not None:
        if hopf is None:
            raise ShcError("a quasitriangular document needs its Hopf coalgebra")
        qt = QTHopfCoalgebra(hopf, _matrix(m.quasitriangular.r_plus, field), _matrix(m.quasitriangular.r_minus, field))
    if m.ribbon is not None:
        if qt is None:
            raise ShcError("a ribbon document needs its R-matrices")
        ribbon = RibbonHopfCoalgebra(qt, _matrix(m.ribbon.theta, field))
    return CoendCoalgebra(C, q, D, bi, hopf, qt, ribbon)


def report_to_model(report: VerificationReport) -> ReportModel:
    return ReportModel.model_validate({"ok": report.ok, "entries": report.to_list()})
