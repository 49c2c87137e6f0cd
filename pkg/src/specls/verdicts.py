"""Structured verdicts emitted by the theorem verifiers.

A verdict records whether a statement's hypothesis and conclusion hold on
one concrete graph. `None` in either slot means the check could not be
certified (a spectral comparison refused to order, or an exact solver was
out of budget); a counterexample claim requires certified booleans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

THEOREM_IDS = (
    "MANTEL",
    "ER_RAD",
    "LS",
    "NING_ZHAI",
    "SPEC_LS_Y",
    "SPEC_LS_T",
    "SPEC_BC",
    "BN_INEQ",
    "MOON_MOSER",
    "FAR_BIP_SUPERSAT",
    "TRI_EFFI",
    "DEG_SQ",
    "WILF",
    "NIKIFOROV_M",
    "NOSAL_NZ",
    "ROTATION",
    "EMBED_ORDER",
    "X_MASS",
    # structural checks used while auditing the supersaturation argument
    "PART_INTRA_LT_6Q",
    "PART_INTRA_LE_Q",
    "MIN_DEGREE_HALF",
    "PERRON_ENTRY_FLOOR",
    "PART_PRODUCT_GAP",
    "PART_BALANCED",
    "LAMBDA_BELOW_Y",
    "STAR_OR_C4",
)


@dataclass
class TheoremVerdict:
    theorem_id: str
    hypothesis_met: Optional[bool]
    conclusion_met: Optional[bool]
    margins: dict[str, Any] = field(default_factory=dict)
    witness: Optional[dict[str, Any]] = None
    indeterminate_reason: Optional[str] = None
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.theorem_id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.theorem_id!r}")

    @property
    def is_counterexample(self) -> bool:
        return self.hypothesis_met is True and self.conclusion_met is False

    @property
    def is_indeterminate(self) -> bool:
        return self.hypothesis_met is None or self.conclusion_met is None

    def to_jsonable(self) -> dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "hypothesis_met": self.hypothesis_met,
            "conclusion_met": self.conclusion_met,
            "counterexample": self.is_counterexample,
            "margins": {k: jsonable_value(v) for k, v in sorted(self.margins.items())},
            "witness": self.witness,
            "indeterminate_reason": self.indeterminate_reason,
            "params": {k: jsonable_value(v) for k, v in sorted(self.params.items())},
        }


def jsonable_value(v: Any) -> Any:
    """Canonical JSON form: Fractions as 'p/q' strings, intervals as pairs."""
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (tuple, list)):
        return [jsonable_value(x) for x in v]
    if isinstance(v, dict):
        return {k: jsonable_value(x) for k, x in sorted(v.items())}
    return v
