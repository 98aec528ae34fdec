"""Published JSON schemas for command-line output."""

_number = {"type": "number"}
_int = {"type": "integer"}
_vertices = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_branches = {"type": "array", "items": {**_vertices, "minItems": 1}}

MINOR = {
    "type": "object",
    "required": ["found", "achieved_average_degree", "branches"],
    "properties": {
        "found": {"type": "boolean"},
        "achieved_average_degree": {"type": ["number", "null"]},
        "branches": _branches,
        "witness_vertex": {"type": ["integer", "null"]},
        "min_ball_size": _int,
        "params": {"type": ["object", "null"]},
    },
}

INDEP = {
    "type": "object",
    "required": ["size", "members", "provenance", "verified"],
    "properties": {
        "size": _int,
        "members": _vertices,
        "provenance": {"enum": ["turan", "peel_centers", "g3k_certificate", "recursion", "manual"]},
        "verified": {"const": True},
    },
}

_minor_cert = {
    "type": "object",
    "required": ["branches", "quotient_n", "quotient_m", "achieved_average_degree"],
    "properties": {
        "branches": _branches,
        "quotient_n": _int,
        "quotient_m": _int,
        "achieved_average_degree": _number,
    },
}

_indep_cert = {
    "type": "object",
    "required": ["size", "members", "provenance"],
    "properties": {"size": _int, "members": _vertices, "provenance": {"type": "string"}},
}

DICHOTOMY = {
    "type": "object",
    "required": [
        "version",
        "input_hash",
        "config",
        "outcome",
        "certificate",
        "bound_claimed",
        "bound_achieved",
        "preconditions_met",
        "trace",
    ],
    "properties": {
        "version": {"const": "1"},
        "input_hash": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
        "config": {
            "type": "object",
            "required": ["t", "epsilon", "constant_overrides", "trials", "seed"],
        },
        "outcome": {"enum": ["minor", "independent_set"]},
        "certificate": {"oneOf": [_minor_cert, _indep_cert]},
        "d_target": _number,
        "log_base": {"const": "natural"},
        "bound_claimed": _number,
        "bound_achieved": _number,
        "preconditions_met": {"type": "boolean"},
        "revalidated": {"const": True},
        "trace": {"type": "array", "items": {"type": "object", "required": ["stage"]}},
    },
}

ORACLE = {
    "type": "object",
    "properties": {
        "alpha": _int,
        "witness": _vertices,
        "paths": _int,
        "edges": {"type": "array", "items": {"type": "array", "items": _int, "minItems": 2, "maxItems": 2}},
        "has_minor": {"type": "boolean"},
        "branches": {"type": ["array", "null"]},
        "tail": _number,
        "chernoff_bound": _number,
    },
    "minProperties": 1,
}

BENCH = {
    "type": "object",
    "required": ["rows", "csv", "json"],
    "properties": {"rows": _int, "csv": {"type": "string"}, "json": {"type": "string"}},
}

SCHEMAS = {
    "minor": MINOR,
    "indep": INDEP,
    "dichotomy": DICHOTOMY,
    "oracle": ORACLE,
    "bench": BENCH,
}
