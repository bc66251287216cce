"""Optional JSON configuration with documented defaults.

All knobs used by the claim-verification suites and the solver live here;
there is no environment-variable magic.  A config file may override any
subset of the fields, for example:

    {"thm1_n_max": 8, "search": {"m_max": 3}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .geography import SearchBounds


@dataclass(frozen=True)
class Config:
    thm1_n_max: int = 5
    thm1_s_max: int = 5
    pq_set: tuple[int, ...] = (2, 3, 5, 7)
    thm2_cases: int = 8
    family_dials: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    seed: int = 7
    search: SearchBounds = field(default_factory=SearchBounds)


def load_config(path: str | None) -> Config:
    if path is None:
        return Config()
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    search_data = data.pop("search", {})
    search = SearchBounds(
        **{**SearchBounds().__dict__, **{k: tuple(v) if k == "g_set" else v
                                         for k, v in search_data.items()}}
    )
    tupled = {
        k: tuple(v) if k in ("pq_set", "family_dials") else v for k, v in data.items()
    }
    return replace(Config(search=search), **tupled)
