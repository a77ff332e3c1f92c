import json
import random

from qhom.harness import (
    ORDER,
    TheoremCheck,
    build_corpus,
    check_entry,
    type_two_example,
    random_module,
    ring_table,
    theorem_harness,
)
from qhom.probe import run_probes
from qhom.serialize import dumps, envelope


def test_theorem_check_bookkeeping():
    t = TheoremCheck("bass-formula")
    t.record(True, "a")
    t.record(None, "b")
    t.record(False, "c", "off by one")
    d = t.to_json()
    assert d["instances-checked"] == 2 and d["inconclusive"] == 1
    assert d["violations"] == [{"instance": "c", "detail": "off by one"}]


def test_check_entry_on_small_rings():
    for entry in build_corpus(names=["k[x]/(x^2)", "k[x,y]/(x^2)"]):
        checks = check_entry(entry, seed=1)
        assert set(checks) <= set(ORDER)
        for c in checks.values():
            assert c.violations == [], (entry.name, c.theorem, c.violations)
        assert sum(c.checked for c in checks.values()) > 0


def test_harness_is_order_stable():
    corpus = build_corpus(names=["k[x]", "k[x]/(x^2)"])
    a = theorem_harness(corpus, seed=3, threads=1)
    b = theorem_harness(corpus, seed=3, threads=2)
    assert dumps(a) == dumps(b)
    assert [t["theorem-id"] for t in a] == ORDER


def test_ring_table():
    rows = ring_table(build_corpus(names=["k[x,y,z]/(y^2,yz,z^2)"]))
    assert rows[0]["dim"] == 1 and rows[0]["depth"] == 1
    assert rows[0]["cohen-macaulay"] is True and rows[0]["gorenstein"] is False


def test_example_ring():
    ex = type_two_example()
    assert (ex["dim"], ex["depth"], ex["cohen-macaulay"], ex["gorenstein"]) == (1, 1, True, False)
    assert ex["m/xm ~ k^3"] == "isomorphic" and ex["shift"] == 1
    assert ex["qid(R)"]["status"] == "infinite"


def test_random_modules_are_deterministic():
    R = build_corpus(names=["k[x,y]/(x^2,y^2)"])[0].ring
    a = random_module(R, random.Random(5))
    b = random_module(R, random.Random(5))
    assert a.to_json() == b.to_json()


def test_probe_report_shape():
    rep = run_probes(0)
    assert rep["hypersurface-descent"]
    assert all({"qpd_Q", "qpd_R", "qid_Q", "qid_R"} <= set(r) for r in rep["hypersurface-descent"])


def test_envelope():
    env = envelope({"x": float("inf")}, seed=4, bounds={"degree": 6}, command="t")
    assert env["schema_version"] == 1
    assert json.loads(dumps(env))["result"]["x"] == "inf"
    assert env["artifact"]["name"] == "qhom" and env["monomial_order"] == "grevlex"
