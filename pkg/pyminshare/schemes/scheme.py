"""Base class for scheme parameters."""

from fractions import Fraction
from typing import Any, Dict

import chex

from ..utils.rational_helpers import rational_to_json


@chex.dataclass(mappable_dataclass=False, frozen=True)
class SchemeParams:
    """Base scheme parameters.

    Attributes:
        p: Exact probability parameter of the construction.
    """

    p: Fraction

    tag = "scheme"

    def access_structure(self):
        raise NotImplementedError

    def joint_distribution(self):
        raise NotImplementedError

    def to_json(self) -> Dict[str, Any]:
        return {"p": rational_to_json(self.p)}
