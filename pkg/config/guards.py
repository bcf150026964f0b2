"""
Size guards for the exponential lattice operations
"""

import logging
from typing import Optional
from pydantic import BaseModel, Field

from config.settings import GUARD_SETTING
from models.errors import GuardExceededError

logger = logging.getLogger(__name__)


class GuardConfig(BaseModel):
    """Per-operation size limits, in vertices (vertex-induced) or edges (edge-subsets)"""
    family: int = Field(default=14, gt=0)
    pairs: int = Field(default=14, gt=0)
    triples: int = Field(default=12, gt=0)
    covers: int = Field(default=10, gt=0)
    chains: int = Field(default=8, gt=0)
    params: int = Field(default=16, gt=0)
    override: bool = False

    def check(self, name: str, size: int) -> None:
        """Raise GuardExceededError when ``size`` is above the ``name`` limit"""
        limit = getattr(self, name)
        if self.override or size <= limit:
            return
        logger.warning(f"[Guards] {name} guard exceeded: size {size} > limit {limit}")
        raise GuardExceededError(name, size, limit)

    def raised_to(self, ceiling: int) -> "GuardConfig":
        """Copy with every lattice limit raised to at least ``ceiling``"""
        lattice_fields = ('family', 'pairs', 'triples', 'covers', 'chains', 'params')
        update = {name: max(getattr(self, name), ceiling) for name in lattice_fields}
        return self.model_copy(update=update)


def get_guard_config(override: bool = False, base: Optional[GuardConfig] = None) -> GuardConfig:
    """Build the effective guards from defaults, the environment and the CLI flag"""
    guards = base or GuardConfig()
    if GUARD_SETTING == 'override':
        guards = guards.model_copy(update={'override': True})
    elif isinstance(GUARD_SETTING, int):
        guards = guards.raised_to(GUARD_SETTING)
    if override:
        guards = guards.model_copy(update={'override': True})
    return guards


class OracleBudget(BaseModel):
    """Element-count limits for the brute-force reference loops"""
    max_cover_parts: int = Field(default=15, gt=0)
    max_family_size: int = Field(default=127, gt=0)

    def check(self, name: str, size: int) -> None:
        limit = self.max_cover_parts if name == 'cover_parts' else self.max_family_size
        if size > limit:
            logger.warning(f"[Oracle] {name} budget exceeded: size {size} > limit {limit}")
            raise GuardExceededError(f"oracle {name}", size, limit)
