"""Exploratory probes for open questions; they record observations and assert nothing."""

from __future__ import annotations

from .harness import corpus_modules, make_ring
from .quasires import qid_certified, qpd_certified

# (label, variables, relations of Q, f)
HYPERSURFACES = [
    ("k[x]", ["x"], [], "x^2"),
    ("k[x,y]", ["x", "y"], [], "x^2"),
    ("k[x,y]/(x^2)", ["x", "y"], ["x^2"], "y^2"),
    ("k[x,y,z]/(y^2,yz,z^2)", ["x", "y", "z"], ["y^2", "y*z", "z^2"], "x^2"),
]


def _status(v) -> str:
    if v.status == "finite":
        return str(v.value)
    return {"infinite": "inf", "unknown": "?", "zero-module": "-inf"}[v.status]


def hypersurface_descent(seed: int = 0) -> list[dict]:
    """For R = Q/(f), f regular: compare certified qpd/qid of M over Q and over R."""
    rows = []
    for label, variables, rels, f in HYPERSURFACES:
        Q = make_ring(variables, rels)
        R = Q.quotient([Q(f)])
        for name, M in corpus_modules(R):
            MQ = M.restrict_to(Q)
            rows.append({
                "ambient": label,
                "f": f,
                "module": name,
                "qpd_Q": _status(qpd_certified(MQ, seed)),
                "qpd_R": _status(qpd_certified(M, seed)),
                "qid_Q": _status(qid_certified(MQ, seed)),
                "qid_R": _status(qid_certified(M, seed)),
            })
    return rows


def run_probes(seed: int = 0) -> dict:
    return {
        "hypersurface-descent": hypersurface_descent(seed),
        "completion": "not probed: the graded-local model has no separate completion, "
                      "so graded verdicts stand in for both sides",
    }
