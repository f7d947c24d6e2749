"""Configuration models and loaders for CLI commands."""

from __future__ import annotations

import json
import tomllib
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from src.config.constants import DEFAULT_KMAX, DEFAULT_MAX_WEIGHT, DEFAULT_ORDER
from src.core.words import Word, parse_word

# Configuration Models

class VerifyConfig(BaseModel):
    """Configuration for the verify command."""
    checks: List[str] = Field(default_factory=lambda: ["all"])
    order: int = Field(DEFAULT_ORDER, ge=0)
    max_weight: int = Field(DEFAULT_MAX_WEIGHT, ge=0)
    kmax: int = Field(DEFAULT_KMAX, ge=1)
    workers: int = Field(1, ge=1)
    output: Optional[Path] = None
    log_level: str = Field("WARNING", pattern=r"^(DEBUG|INFO|WARNING|ERROR)$")
    # check id -> keyword overrides, e.g. {"lemma_gdsh1": {"case": "iii", "indices": [2, 1, 2, 2]}}
    parameters: Dict[str, Dict[str, Any]] = Field(default_factory=dict)

    @field_validator("checks")
    @classmethod
    def _known_checks(cls, v: List[str]) -> List[str]:
        from src.verify.runner import CHECK_REGISTRY

        if not v:
            raise ValueError("at least one check is required")
        names = [name.lower().replace("-", "_") for name in v]
        unknown = [n for n in names if n != "all" and n not in CHECK_REGISTRY]
        if unknown:
            raise ValueError(f"Unknown checks: {', '.join(unknown)}")
        return names


class RelationsConfig(BaseModel):
    """Configuration for the relations command."""
    weight: int = Field(5, ge=1)
    max_depth: int = Field(2, ge=1)
    order: int = Field(40, ge=0)
    exact_weight: bool = False
    extra_words: List[str] = Field(default_factory=list)

    @field_validator("extra_words")
    @classmethod
    def _parse_words(cls, v: List[str]) -> List[str]:
        for text in v:
            parse_word(text)
        return v

    def words(self) -> List[Word]:
        return [parse_word(text) for text in self.extra_words]


# Configuration Loaders

def _read_config(path: Path) -> Dict[str, Any]:
    """Read configuration from .toml or .json file."""
    suf = path.suffix.lower()
    if suf == ".json":
        return json.loads(path.read_text(encoding="utf-8"))
    if suf == ".toml":
        return tomllib.loads(path.read_text(encoding="utf-8"))
    raise ValueError(f"Unsupported config format: {path.suffix}. Use .toml or .json")


def load_verify_config(path: Path) -> VerifyConfig:
    """Load verification configuration from file."""
    data = _read_config(path)
    return VerifyConfig(**data)


def load_relations_config(path: Path) -> RelationsConfig:
    """Load relation search configuration from file."""
    data = _read_config(path)
    return RelationsConfig(**data)
