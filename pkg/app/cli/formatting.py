"""Plain-text rendering of response models"""

from typing import Any

from pydantic import BaseModel


def _is_weight(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(v, str) for v in value)


def _scalar(value: Any) -> str:
    if _is_weight(value):
        return "(" + ", ".join(value) + ")"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _render(value: Any, indent: int, lines: list[str], key: str) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        lines.append(f"{pad}{key}:")
        for k, v in value.items():
            _render(v, indent + 1, lines, k)
    elif isinstance(value, list) and value and not _is_weight(value):
        if all(_is_weight(v) or not isinstance(v, (dict, list)) for v in value):
            lines.append(f"{pad}{key}: " + ", ".join(_scalar(v) for v in value))
        else:
            lines.append(f"{pad}{key}:")
            for item in value:
                if isinstance(item, dict):
                    lines.append(f"{pad}  -")
                    for k, v in item.items():
                        _render(v, indent + 2, lines, k)
                else:
                    _render(item, indent + 1, lines, "-")
    elif value is None:
        return
    else:
        lines.append(f"{pad}{key}: {_scalar(value) if value != [] else '(none)'}")


def render_text(model: BaseModel) -> str:
    lines: list[str] = []
    for key, value in model.model_dump(mode="json").items():
        _render(value, 0, lines, key)
    return "\n".join(lines)
