import json

import pytest

import starring

SPEC = """
ring A = mat(2, zmod(3))
ring B = zmod(6)
ring U = unitify(A, gf(3))
"""


def test_classify_matrix_ring():
    r = starring.classify("ring M = mat(2, zmod(6))")
    assert r["order"] == 1296
    assert r["verdicts"]["baer_star"] is False
    assert r["verdicts"]["quasi_baer_star"] is True
    assert r["verdicts"]["pq_baer_star"] is True
    assert r["config"] == {"seed": "0xA15E", "bound": 20000}
    assert r["timing_ms"] is None


def test_projections_and_cover():
    p = starring.projections(SPEC, ring="A")
    assert p["count"] == 6
    assert sorted(x["element"] for x in p["projections"] if x["central"]) == ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]
    assert starring.cover(SPEC, "2", ring="B")["cover"] == "4"


def test_verify_all():
    v = starring.verify(SPEC, ring="A")
    assert v["summary"]["failed"] == 0
    assert list(v["verdicts"]) == [t for t in starring.theorem_ids() if t in v["verdicts"]]


def test_unitify_check():
    u = starring.unitify_check(SPEC, ring="U")
    assert u["order"] == 243
    assert all(u["verdicts"][k] for k in ("action_laws", "r1_axioms", "unity", "star_ideal"))
    assert set(u["theorems"]) == {"def1", "lm1", "lm3", "th304", "c302"}


def test_errors():
    with pytest.raises(starring.StarringError, match="unknown-identifier"):
        starring.classify(SPEC, ring="Nope")
    with pytest.raises(starring.StarringError, match="line 1, column"):
        starring.classify("ring X = gf(4)")
    with pytest.raises(starring.StarringError, match="budget"):
        starring.search_nonunital(17)


def test_round_trip_and_cli():
    text = starring.format_ringspec(SPEC)
    assert starring.format_ringspec(text) == text
    code, out, err = starring.run_cli(["search-nonunital", "--order-max", "8", "--json"])
    assert code == 0 and err == ""
    assert json.loads(out)["findings"] == []


def test_small_tables():
    t = starring.c031_table(n_max=1, m_max=12)
    assert t["summary"]["disagreements"] == 0
    assert len(t["rows"]) == 11
