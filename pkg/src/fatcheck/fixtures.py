"""Access to the JSON expected-value files shipped in ``fatcheck/data``."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

__all__ = ["load_fixture", "fixture_names"]


@lru_cache(maxsize=None)
def load_fixture(name: str) -> dict:
    """Parsed contents of ``data/<name>.json``."""
    text = resources.files("fatcheck").joinpath("data", f"{name}.json").read_text()
    return json.loads(text)


def fixture_names() -> list[str]:
    root = resources.files("fatcheck").joinpath("data")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))
