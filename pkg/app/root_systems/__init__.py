from app.root_systems.b0n import B0nFamily
from app.root_systems.base import FamilyBuilder, form_entries, form_inner, solve_coordinates
from app.root_systems.bmn import BmnFamily
from app.root_systems.glmn import GLmnFamily
from app.root_systems.models import FamilyKind, FamilySpec, SuperRootData
from app.root_systems.operations import (
    check_weight,
    height,
    inner,
    isotropic_roots,
    leq,
    lt,
    require_b0n,
    same_parity,
    simple_coordinates,
    typicality_notions_coincide,
)
from app.root_systems.parsing import parse_family
from app.root_systems.registry import (
    build_family,
    builder_for,
    get_family,
    list_families,
    list_families_with_descriptions,
    register_family,
)

__all__ = [
    "FamilyBuilder",
    "B0nFamily",
    "GLmnFamily",
    "BmnFamily",
    "FamilyKind",
    "FamilySpec",
    "SuperRootData",
    "form_inner",
    "form_entries",
    "solve_coordinates",
    "check_weight",
    "require_b0n",
    "inner",
    "leq",
    "lt",
    "height",
    "simple_coordinates",
    "isotropic_roots",
    "same_parity",
    "typicality_notions_coincide",
    "parse_family",
    "build_family",
    "builder_for",
    "get_family",
    "list_families",
    "list_families_with_descriptions",
    "register_family",
]
