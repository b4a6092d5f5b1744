import re

from app.exceptions import FamilyError, ValidationError
from app.root_systems.models import FamilySpec

_PATTERN = re.compile(r"^\s*(osp|gl|b)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$", re.IGNORECASE)


def parse_family(text: str) -> FamilySpec:
    """
    Parse a family name

    Accepted forms: "B(0,n)", "osp(1,2n)", "gl(m,n)", "B(m,n)", "osp(2m+1,2n)".

    Raises:
        ValidationError: If the text is not a family name
        FamilyError: If the parameters are invalid (osp(2m,2n), odd second
            osp parameter, B(0,0), ...)
    """
    match = _PATTERN.match(text or "")
    if match is None:
        raise ValidationError(
            f"Unrecognised family '{text}'",
            details={"expected": "B(m,n), osp(2m+1,2n) or gl(m,n), e.g. B(0,2), osp(1,4), gl(2,1)"},
        )
    kind, first, second = match.group(1).lower(), int(match.group(2)), int(match.group(3))

    if kind == "gl":
        return FamilySpec.glmn(first, second)

    if kind == "osp":
        if first % 2 == 0:
            raise FamilyError(
                f"osp({first},{second}) is of type D or C, which is not supported",
                details={"supported": "osp(2m+1,2n)"},
            )
        if second % 2 != 0:
            raise FamilyError(f"osp({first},{second}): the second parameter must be even")
        m, n = (first - 1) // 2, second // 2
    else:
        m, n = first, second

    if m == 0:
        return FamilySpec.b0n(n)
    return FamilySpec.bmn(m, n)
