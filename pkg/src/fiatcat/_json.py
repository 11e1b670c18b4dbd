import json
from fractions import Fraction


def jsonify(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (frozenset, set)):
        return sorted(jsonify(v) for v in x)
    if isinstance(x, dict):
        return {str(k): jsonify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonify(v) for v in x]
    return x


def label(x):
    """Compact canonical JSON string, used as a dictionary key or table label."""
    return json.dumps(jsonify(x), separators=(",", ":"), ensure_ascii=False)
