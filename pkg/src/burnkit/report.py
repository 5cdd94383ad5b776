from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__

TOOL = "burnkit"


@dataclass
class Report:
    command: list[str]
    input_digest: str | None
    result: dict
    provenance: dict[str, str] = field(default_factory=dict)
    tool: str = TOOL
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "tool": self.tool,
            "version": self.version,
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "provenance": self.provenance,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=_jsonable) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        return cls(doc["command"], doc.get("input_digest"), doc["result"],
                   doc.get("provenance", {}), doc.get("tool", TOOL), doc.get("version", __version__))


def digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj) if isinstance(obj, (set, frozenset)) else list(obj)
    raise TypeError(f"not serializable: {type(obj).__name__}")


def fraction_str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)
