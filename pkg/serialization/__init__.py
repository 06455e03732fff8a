from .models import (
    ArrowModel,
    BicoalgebraModel,
    CoendModel,
    ComoduleModel,
    DiagramModel,
    EntryModel,
    HopfCoalgebraModel,
    HopfModel,
    MorphismModel,
    ObjectModel,
    QTModel,
    ReportModel,
    RibbonModel,
    SquaredComoduleModel,
    SquaredModel,
)
from .store import (
    coend_from_model,
    coend_to_model,
    comodule_from_model,
    comodule_to_model,
    diagram_from_model,
    diagram_to_model,
    dumps,
    hopf_from_ref,
    hopf_to_ref,
    load,
    load_diagram,
    morphism_from_model,
    report_to_model,
    save,
    squared_comodule_from_model,
    squared_from_model,
    squared_to_model,
)

__all__ = [
    "ArrowModel", "BicoalgebraModel", "CoendModel", "ComoduleModel", "DiagramModel", "EntryModel",
    "HopfCoalgebraModel", "HopfModel", "MorphismModel", "ObjectModel", "QTModel", "ReportModel",
    "RibbonModel", "SquaredComoduleModel", "SquaredModel", "coend_from_model", "coend_to_model",
    "comodule_from_model", "comodule_to_model", "diagram_from_model", "diagram_to_model", "dumps",
    "hopf_from_ref", "hopf_to_ref", "load", "load_diagram", "morphism_from_model",
    "report_to_model", "save", "squared_comodule_from_model", "squared_from_model",
    "squared_to_model",
]
