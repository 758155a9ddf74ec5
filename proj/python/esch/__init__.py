"""Exact classification and free-action certification for positively curved
Eschenburg and Bazaikin biquotients.

Thin convenience layer over the `_esch` extension: the heavy lifting happens
in C++ with exact rational arithmetic; results cross the boundary as JSON.
"""

import json as _json

try:
    from . import _esch
except ImportError:  # module built outside the package (plain cmake builds)
    import _esch

EschError = _esch.EschError
dirichlet_triples = _esch.dirichlet_triples
e2_is_free = _esch.e2_is_free
e2_is_positively_curved = _esch.e2_is_positively_curved
enumerate_canonical = _esch.enumerate_canonical
normalize = _esch.normalize


def classify(space):
    """Family tag, cohomogeneity and isometry descriptor for a space literal
    like "1,1,5", "1,2,3/0,0,6", "1,1,1,1,3" or "twisted-flag"."""
    return _json.loads(_esch.classify_json(space))


def invariants(space):
    """H^4 order r, Pontrjagin residue and vertex lens orders of an E2 triple."""
    return _json.loads(_esch.invariants_json(space))


def diagram(space):
    """Cohomogeneity-one group diagram for the E1 / B1 families."""
    return _json.loads(_esch.diagram_json(space))


def certify_free(space, group="quaternion8", side="right"):
    """Freeness certificate for a catalog group acting on one side, or for the
    full SU(2)/SO(3) factor when group is "so3"/"su2"."""
    return _json.loads(_esch.certify_free_json(space, group, side))


def verify(suite, max_abs=40, p_max=25, q_max=25, jobs=1):
    """Run a theorem-verification sweep; returns records, summary and pass."""
    return _json.loads(_esch.verify_json(suite, max_abs, p_max, q_max, jobs))


def solve_congruences(equations):
    """Exact solution set of a system z^m = target; equations are
    (exponent, "num/den") pairs."""
    return _json.loads(_esch.solve_congruences_json(list(equations)))
