"""Analysis of imprimitive symmetric graphs and their local designs."""

import json

from ._imprim import analyze as _analyze
from ._imprim import catalog_keys, feasible_f_rows, is_prime, run

__all__ = ["analyze", "analyze_json", "catalog_keys", "feasible_f_rows", "is_prime", "run"]


def analyze_json(source, p=3, mode="", bound=1_000_000):
    """Report as canonical JSON text for a catalog key or an inline triple record."""
    if isinstance(source, dict):
        source = json.dumps(source)
    return _analyze(source, p, mode, bound)


def analyze(source, p=3, mode="", bound=1_000_000):
    """Report as a dict for a catalog key or an inline triple record."""
    return json.loads(analyze_json(source, p, mode, bound))
