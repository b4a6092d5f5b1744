"""Per-invocation state shared by the subcommands"""

import argparse
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from app.core_math.weights import Weight
from app.exceptions import ValidationError
from app.logger import get_logger
from app.root_systems import SuperRootData, build_family
from app.settings import Settings
from app.validation import InputValidator, family_from_text, require_valid, weight_from_text
from app.weyl import WeylGroup, generate

logger = get_logger("cli")


@dataclass
class CommandSession:
    settings: Settings
    validator: InputValidator = field(default_factory=InputValidator)
    _groups: Dict[Tuple[object, int], WeylGroup] = field(default_factory=dict)

    def family(self, args: argparse.Namespace) -> SuperRootData:
        text = getattr(args, "family", None) or self.settings.compute.default_family
        return build_family(family_from_text(text, self.validator))

    def group(self, data: SuperRootData, args: argparse.Namespace) -> WeylGroup:
        cap = self.cap(args)
        key = (data.spec, cap)
        if key not in self._groups:
            self._groups[key] = generate(data, cap=cap)
            logger.debug("Weyl group ready", family=data.spec.label, order=self._groups[key].order)
        return self._groups[key]

    def cap(self, args: argparse.Namespace) -> int:
        cap = getattr(args, "cap", None)
        require_valid(self.validator.validate_count("cap", cap, 1))
        return cap if cap is not None else self.settings.compute.weyl_cap

    def depth(self, args: argparse.Namespace) -> int:
        depth = getattr(args, "depth", None)
        require_valid(self.validator.validate_count("depth", depth, 0))
        return depth if depth is not None else self.settings.compute.depth

    def threads(self, args: argparse.Namespace) -> int:
        threads = getattr(args, "threads", None)
        require_valid(self.validator.validate_count("threads", threads, 1))
        return threads if threads is not None else self.settings.compute.threads

    def weight(self, data: SuperRootData, args: argparse.Namespace) -> Weight:
        """lambda from --weight, or from --lambda-plus-rho minus rho"""
        lam = getattr(args, "weight", None)
        shifted = getattr(args, "lambda_plus_rho", None)
        if lam is not None:
            return weight_from_text(data, "weight", lam, self.validator)
        if shifted is not None:
            return weight_from_text(data, "lambda-plus-rho", shifted, self.validator) - data.rho
        raise ValidationError(
            "A weight is required",
            details={"expected": "--weight a,b,... or --lambda-plus-rho a,b,..."},
        )

    def optional_weight(
        self, data: SuperRootData, args: argparse.Namespace, name: str
    ) -> Optional[Weight]:
        text = getattr(args, name.replace("-", "_"), None)
        if text is None:
            return None
        return weight_from_text(data, name, text, self.validator)
