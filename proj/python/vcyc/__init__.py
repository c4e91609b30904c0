"""Python front end to the vcyc C++ core.

Groups and diagrams are passed as the same JSON documents the command-line
tool reads; reports come back as decoded dictionaries.
"""

import json

from . import _vcyc
from ._vcyc import (
    FiniteGroup,
    VCGroup,
    VcycError,
    abelianization,
    catalog_names,
    center_is_infinite,
    classify_type,
    diagram_names,
    maximal_finite_normal,
)

__all__ = [
    "FiniteGroup",
    "VCGroup",
    "VcycError",
    "abelianization",
    "catalog_names",
    "center_is_infinite",
    "check_diagram",
    "classify_type",
    "diagram_names",
    "generate_corpus",
    "group",
    "maximal_finite_normal",
    "orient",
    "run",
]


def group(spec):
    """VCGroup from a dict or a JSON string."""
    return VCGroup.from_json(spec if isinstance(spec, str) else json.dumps(spec))


def run(command, inputs=(), seed=1, samples=100, caps="", diagrams=()):
    """Run a battery; the report omits timing so equal seeds give equal dicts."""
    return json.loads(_vcyc._run(command, list(inputs), seed, samples, caps, list(diagrams)))


def generate_corpus(caps=""):
    return json.loads(_vcyc._generate_corpus(caps))


def orient(diagram):
    return json.loads(_vcyc._orient(diagram if isinstance(diagram, str) else json.dumps(diagram)))


def check_diagram(name, vc_group, index=1, sign=1, lift_k=0, samples=100, seed=1):
    return json.loads(_vcyc._check_diagram(name, vc_group, index, sign, lift_k, samples, seed))

