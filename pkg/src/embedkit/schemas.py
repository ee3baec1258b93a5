"""JSON Schemas for every CLI payload, keyed by subcommand name."""

from __future__ import annotations

_INT_VEC = {"type": "array", "items": {"type": "integer"}}
_VEC_LIST = {"type": "array", "items": _INT_VEC}
_RATIONAL = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
_CONE = {
    "type": "object",
    "required": ["rays", "facets"],
    "properties": {
        "rays": _VEC_LIST,
        "facets": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
    },
    "additionalProperties": False,
}
_FACE = {
    "type": "object",
    "required": ["dim", "generators"],
    "properties": {
        "dim": {"type": "integer", "minimum": 0},
        "generators": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "additionalProperties": False,
}
_IDEAL_FACE = {
    "type": "object",
    "required": ["dim", "generators", "ideal"],
    "properties": {
        "dim": {"type": "integer", "minimum": 0},
        "generators": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "ideal": {"type": "string"},
    },
    "additionalProperties": False,
}
_MAYBE = {"enum": ["yes", "no", "inconclusive"]}

SCHEMAS: dict[str, dict] = {
    "group": {
        "type": "object",
        "required": [
            "group",
            "dim",
            "rank",
            "num_positive_roots",
            "complexity",
            "weyl_order",
            "orbit_param_bound",
        ],
        "properties": {
            "group": {"type": "string"},
            "dim": {"type": "integer", "minimum": 1},
            "rank": {"type": "integer", "minimum": 1},
            "num_positive_roots": {"type": "integer", "minimum": 0},
            "complexity": {"type": "integer", "minimum": 0},
            "weyl_order": {"type": "integer", "minimum": 1},
            "orbit_param_bound": {"type": "integer", "minimum": 0},
        },
        "additionalProperties": False,
    },
    "tensor": {
        "type": "object",
        "required": ["group", "lhs", "rhs", "terms"],
        "properties": {
            "group": {"type": "string"},
            "lhs": _INT_VEC,
            "rhs": _INT_VEC,
            "terms": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["weight", "mult"],
                    "properties": {
                        "weight": _INT_VEC,
                        "mult": {"type": "integer", "minimum": 1},
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
    "toric": {
        "type": "object",
        "required": [
            "rank",
            "generators",
            "effective",
            "solid",
            "note",
            "normal",
            "witness",
            "cone",
            "orbit_count",
            "orbit_faces",
            "ideal_faces",
        ],
        "properties": {
            "rank": {"type": "integer", "minimum": 1},
            "generators": _VEC_LIST,
            "effective": {"type": "boolean"},
            "solid": {"type": "boolean"},
            "note": {"type": ["string", "null"]},
            "normal": _MAYBE,
            "witness": {"anyOf": [_INT_VEC, {"type": "null"}]},
            "cone": _CONE,
            "orbit_count": {"type": ["integer", "null"]},
            "orbit_faces": {
                "anyOf": [{"type": "array", "items": _FACE}, {"type": "null"}]
            },
            "ideal_faces": {
                "anyOf": [{"type": "array", "items": _IDEAL_FACE}, {"type": "null"}]
            },
        },
        "additionalProperties": False,
    },
    "svariety": {
        "type": "object",
        "required": [
            "group",
            "generators",
            "cone_K",
            "orbit_count",
            "normal",
            "witness",
            "small_boundary",
            "factorial",
            "type_hv",
        ],
        "properties": {
            "group": {"type": "string"},
            "generators": _VEC_LIST,
            "cone_K": _CONE,
            "orbit_count": {"type": "integer", "minimum": 1},
            "normal": _MAYBE,
            "witness": {"anyOf": [_INT_VEC, {"type": "null"}]},
            "small_boundary": {"type": ["boolean", "null"]},
            "factorial": {"enum": ["true", "false", "not_applicable", "unknown"]},
            "type_hv": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "hv": {
        "type": "object",
        "required": ["group", "weight", "orbits", "factorial"],
        "properties": {
            "group": {"type": "string"},
            "weight": _INT_VEC,
            "orbits": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
            "factorial": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "monoid-perfect": {
        "type": "object",
        "required": [
            "group",
            "input",
            "closure_generators",
            "is_perfect",
            "converged",
            "generates_character_group",
            "defines_monoid",
            "is_trivial_monoid",
            "iterations_used",
        ],
        "properties": {
            "group": {"type": "string"},
            "input": _VEC_LIST,
            "closure_generators": _VEC_LIST,
            "is_perfect": {"type": "boolean"},
            "converged": {"type": "boolean"},
            "generates_character_group": {"type": "boolean"},
            "defines_monoid": {"type": "boolean"},
            "is_trivial_monoid": {"enum": ["yes", "no", "unknown"]},
            "iterations_used": {"type": "integer", "minimum": 0},
        },
        "additionalProperties": False,
    },
    "monoid-normal": {
        "type": "object",
        "required": [
            "group",
            "cone",
            "contains_neg_simple_roots",
            "dominant_part_generates",
            "is_normal_monoid",
            "central_part_pointed",
            "semisimple_dominant_trivial",
            "has_zero",
        ],
        "properties": {
            "group": {"type": "string"},
            "cone": _CONE,
            "contains_neg_simple_roots": {"type": "boolean"},
            "dominant_part_generates": {"type": "boolean"},
            "is_normal_monoid": {"type": "boolean"},
            "central_part_pointed": {"type": "boolean"},
            "semisimple_dominant_trivial": {"type": "boolean"},
            "has_zero": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "ce": {
        "type": "object",
        "required": ["group", "levi"],
        "properties": {
            "group": {"type": "string"},
            "levi": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "orbit_subdiagrams": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            },
            "orbit_count": {"type": "integer", "minimum": 1},
            "sigma": _CONE,
            "smooth": {"type": "boolean"},
            "finite_g_orbits": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "sl2": {
        "type": "object",
        "required": ["height"],
        "properties": {
            "height": {"type": "string", "pattern": "^[0-9]+(/[0-9]+)?$"},
            "orbits": {"type": "array", "items": {"type": "string"}},
            "smooth": {"type": "boolean"},
            "basis": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 0},
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
        "additionalProperties": False,
    },
}
