"""Exact zonotope belt analysis and k-fold tiling checks."""

from ._beltlab import (  # noqa: F401
    BeltlabError,
    SCHEMA_VERSION,
    analyze,
    belt_bound,
    belts,
    canonicalize,
    classify,
    contains,
    count_cover,
    evidence,
    load_fixture,
    to_obj,
    verify_tiling,
    vertices,
    volume,
    wheel,
)

__version__ = "0.1.0"
