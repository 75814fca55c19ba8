import logging
from typing import Dict, Optional, Tuple

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from services.errors import InvalidInput

logger = logging.getLogger(__name__)


class WorkbenchSettings(BaseModel):
    """Caps and budgets shared by the builders, oracles and verifier"""

    construction_cap: int = Field(default=5000, ge=1)
    oracle_cap: int = Field(default=300, ge=1)
    isomorphism_cap: int = Field(default=40, ge=1)
    search_budget: int = Field(default=5_000_000, ge=1)
    claim_ranges: Dict[str, Tuple[int, int]] = Field(default_factory=dict)

    @field_validator("claim_ranges")
    @classmethod
    def _ordered_ranges(cls, value: Dict[str, Tuple[int, int]]) -> Dict[str, Tuple[int, int]]:
        for claim_id, (start, stop) in value.items():
            if start > stop:
                raise ValueError(f"range for {claim_id} is empty: {start} > {stop}")
        return value


def load_settings(path: Optional[str] = None, **overrides) -> WorkbenchSettings:
    """Build settings from an optional YAML file, then apply non-None overrides"""
    data: Dict = {}
    if path:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                data = yaml.safe_load(handle) or {}
        except OSError as e:
            raise InvalidInput(f"cannot read settings file {path}: {e}") from None
        except yaml.YAMLError as e:
            raise InvalidInput(f"settings file {path} is not valid YAML: {e}") from None
        if not isinstance(data, dict):
            raise InvalidInput(f"settings file {path} must contain a mapping")
        logger.debug("loaded settings from %s", path)
    data.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return WorkbenchSettings(**data)
    except ValidationError as e:
        raise InvalidInput(f"invalid settings: {e}") from None
