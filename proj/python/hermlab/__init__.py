"""Python access to the hermlab library.

The heavy lifting happens in the compiled ``_hermlab`` module; reports and
scheme tables come back as plain dicts with the same layout as the CLI's
JSON output.
"""

import json as _json

from ._hermlab import (
    Field,
    InconclusiveError,
    NotASchemeError,
    RecognitionError,
    Surface,
    conjecture_check,
    group_order,
    partition_count,
)
from . import _hermlab

__all__ = [
    "Field",
    "Surface",
    "InconclusiveError",
    "NotASchemeError",
    "RecognitionError",
    "conjecture_check",
    "group_order",
    "partition_count",
    "scheme",
    "verify",
]


def verify(q, *, cache_dir=None, jobs=1, profile="counts", resume=False, groups=()):
    """Run check groups for q and return the report dict.

    groups selects among counts, srg, incidence, orbital, properties,
    profile, and (q = 2) intersection and dense; empty runs everything.
    """
    text = _hermlab._verify_json(q, cache_dir, jobs, profile, resume, list(groups))
    return _json.loads(text)


def scheme(q, source, *, cache_dir=None, jobs=1, cyclotomic_order=12):
    """Tables of the scheme named by source (intersection or orbital:*)."""
    return _json.loads(_hermlab._scheme_json(q, source, cache_dir, jobs, cyclotomic_order))
