"""JSON Schemas of the CLI's machine-readable output. Big integers are decimal strings."""

_BIG = {"type": "string", "pattern": "^-?[0-9]+$"}
_RATIONAL = {"type": "string", "pattern": "^-?[0-9]+/[0-9]+$"}

CHI_REPORT = {
    "type": "object",
    "required": [
        "formula",
        "n",
        "chi",
        "p",
        "boolean_models",
        "classical_tautology",
        "classical_contradiction",
        "godel_infinity_tautology",
        "least_k_not_tautology",
    ],
    "properties": {
        "formula": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "chi": {"type": "array", "items": _BIG, "minItems": 2},
        "p": {"type": "array", "items": _BIG, "minItems": 2},
        "boolean_models": _BIG,
        "classical_tautology": {"type": "boolean"},
        "classical_contradiction": {"type": "boolean"},
        "godel_infinity_tautology": {"type": "boolean"},
        "least_k_not_tautology": {"type": ["integer", "null"], "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "chi_k": _BIG,
        "tautology_k": {"type": "boolean"},
        "verdict": {"type": "string"},
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}

TABLE = {
    "type": "array",
    "items": {"type": "array", "items": _BIG},
}

PATTERN_COUNT = {
    "type": "object",
    "required": ["n", "max_height", "count"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "max_height": {"type": "integer", "minimum": 1},
        "count": _BIG,
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}

PATTERN_LIST = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["ordinal", "pattern", "height"],
        "properties": {
            "ordinal": {"type": "integer", "minimum": 0},
            "pattern": {"type": "string"},
            "height": {"type": "integer", "minimum": 1},
        },
        "additionalProperties": False,
    },
}

DIMS = {
    "type": "object",
    "required": ["n", "v", "i_perm", "c"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "v": _BIG,
        "i_perm": _BIG,
        "c": _BIG,
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}

DETERMINANT = {
    "type": "object",
    "required": ["n", "matrix", "determinant"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "matrix": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
        "determinant": _RATIONAL,
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}

INVARIANT = {
    "type": "object",
    "required": ["n", "invariant"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "invariant": {"type": "boolean"},
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}

SPAN = {
    "type": "object",
    "required": ["n", "in_span", "coefficients"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "in_span": {"type": "boolean"},
        "coefficients": {"oneOf": [{"type": "null"}, {"type": "array", "items": _RATIONAL}]},
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}

ORACLE_CHI = {
    "type": "object",
    "required": ["formula", "n", "k", "brute_chi", "chi", "agree"],
    "properties": {
        "formula": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "brute_chi": _BIG,
        "chi": _BIG,
        "agree": {"type": "boolean"},
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}

ORACLE_CLASSES = {
    "type": "object",
    "required": ["n", "k", "classes", "p", "agree"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "classes": _BIG,
        "p": _BIG,
        "agree": {"type": "boolean"},
        "seconds": {"type": "number"},
    },
    "additionalProperties": False,
}
