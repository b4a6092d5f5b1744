from functools import lru_cache
from typing import Dict

from app.exceptions import RegistryError
from app.root_systems.b0n import B0nFamily
from app.root_systems.base import FamilyBuilder
from app.root_systems.bmn import BmnFamily
from app.root_systems.glmn import GLmnFamily
from app.root_systems.models import FamilyKind, FamilySpec, SuperRootData

# Registry of available family builders
_FAMILIES: Dict[str, FamilyBuilder] = {
    FamilyKind.B0N.value: B0nFamily(),
    FamilyKind.GLMN.value: GLmnFamily(),
    FamilyKind.BMN.value: BmnFamily(),
}


def _key(name: str) -> str:
    return name.lower() if name else ""


def get_family(name: str) -> FamilyBuilder:
    """
    Get a family builder by name

    Args:
        name: Family name (B0n, GLmn, Bmn), case-insensitive

    Returns:
        FamilyBuilder instance

    Raises:
        RegistryError: If the family name is not found
    """
    lookup = {_key(k): v for k, v in _FAMILIES.items()}
    builder = lookup.get(_key(name))
    if builder is None:
        available = ", ".join(_FAMILIES.keys())
        raise RegistryError(f"Unknown family '{name}'. Available families: {available}")
    return builder


def register_family(name: str, builder: FamilyBuilder) -> None:
    """
    Register a custom family builder

    Args:
        name: Family name
        builder: FamilyBuilder instance
    """
    _FAMILIES[name] = builder
    build_family.cache_clear()


def list_families() -> list[str]:
    """Get a list of available family names"""
    return list(_FAMILIES.keys())


def list_families_with_descriptions() -> dict[str, str]:
    """
    Get all available families with their descriptions.

    Returns:
        Dict mapping family names to their descriptions
    """
    return {name: builder.get_description() for name, builder in _FAMILIES.items()}


def builder_for(data_or_spec: SuperRootData | FamilySpec) -> FamilyBuilder:
    spec = data_or_spec.spec if isinstance(data_or_spec, SuperRootData) else data_or_spec
    return get_family(spec.family.value)


@lru_cache(maxsize=64)
def build_family(spec: FamilySpec) -> SuperRootData:
    """
    Build (and cache) the root data of a family

    Raises:
        FamilyError: If the parameters are invalid for the family
        RegistryError: If the family has no registered builder
    """
    return builder_for(spec).build(spec)
