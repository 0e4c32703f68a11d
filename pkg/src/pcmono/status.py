"""Small status enums shared by the decision modules."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Tri(str, Enum):
    ESTABLISHED = "Established"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TriState:
    """A three-valued fact plus the tag of the rule that decided it."""

    value: Tri
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "value", Tri(self.value))
        if self.value is not Tri.UNKNOWN and not self.provenance:
            raise ValueError("a decided TriState needs a provenance tag")

    @property
    def established(self) -> bool:
        return self.value is Tri.ESTABLISHED

    @property
    def refuted(self) -> bool:
        return self.value is Tri.REFUTED

    def to_dict(self):
        return {"value": self.value.value, "provenance": self.provenance}

    @classmethod
    def from_dict(cls, d):
        return cls(Tri(d["value"]), d.get("provenance", ""))

    @classmethod
    def unknown(cls, note=""):
        return cls(Tri.UNKNOWN, note)


class Verdict(str, Enum):
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    UNKNOWN = "Unknown"
