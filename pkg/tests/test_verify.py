import json

import pytest

from mismatch import io
from mismatch.verify import CLAIMS, ClaimError, VerificationReport, core_graph, run_claim, leaf_reduction_instance

FAST_CLAIMS = ["fact-2.1", "fact-3.1", "lemma-2.2", "lemma-3.3", "lemma-3.4", "lemma-4.1", "lemma-4.2", "lemma-4.3",
               "lemma-4.4", "prop-5.2", "cor-5.3", "prop-A.1", "lemma-A.2"]


def test_registry_names():
    expected = {"fact-2.1", "fact-3.1", "lemma-2.2", "lemma-3.3", "lemma-3.4", "lemma-4.1", "lemma-4.2", "lemma-4.3",
                "lemma-4.4", "lemma-4.5", "prop-4.6", "prop-4.7a", "prop-4.7b", "lemma-4.8", "prop-4.9", "prop-5.2",
                "cor-5.3", "prop-A.1", "lemma-A.2"}
    assert set(CLAIMS) == expected


@pytest.mark.parametrize("claim", FAST_CLAIMS)
def test_claims_pass_at_small_scale(claim):
    params = {"samples": 200} if "samples" in CLAIMS[claim].defaults else {}
    rep = run_claim(claim, seed=11, **params)
    assert rep.instances > 0
    assert rep.ok, rep.failures[:3]
    assert rep.passes + len(rep.failures) == rep.instances


def test_res_claims_on_small_cores():
    for claim in ("lemma-4.5", "prop-4.7a", "lemma-4.8"):
        assert run_claim(claim, core="q3").ok
    assert run_claim("prop-4.7b", core="k33").ok
    assert run_claim("prop-4.9", core="q3").ok
    assert run_claim("prop-4.6", core="k33").details["k33"]["delta1_decision"] == "yes"


def test_reports_are_byte_deterministic():
    a = io.dumps(run_claim("fact-2.1", seed=5, samples=20).to_dict())
    b = io.dumps(run_claim("fact-2.1", seed=5, samples=20).to_dict())
    assert a == b
    assert "wall_time" not in json.loads(a)
    assert "wall_time" in run_claim("prop-A.1").to_dict(timing=True)


def test_seed_is_recorded():
    rep = run_claim("prop-5.2", seed=42, samples=10, include_order6=False)
    assert rep.seed == 42 and rep.params["samples"] == 10


def test_errors():
    with pytest.raises(ClaimError):
        run_claim("lemma-9.9")
    with pytest.raises(ClaimError):
        run_claim("fact-3.1", max_n=14)
    with pytest.raises(ClaimError):
        run_claim("prop-5.2", samples=10**7)
    with pytest.raises(ClaimError):
        run_claim("lemma-4.3", core="k33")  # odd k
    with pytest.raises(ClaimError):
        core_graph("petersen")  # not bipartite


def test_leaf_reduction_instances():
    inst = leaf_reduction_instance("k33+q3")
    assert inst.k == 7 and not inst.hamiltonian
    g_hat, h_hat = inst.hats()
    assert sorted(g_hat.graph.degrees()) == sorted(h_hat.graph.degrees())


def test_failures_are_counted():
    rep = VerificationReport("demo")
    rep.record(True)
    rep.record(False, {"reason": "x"})
    assert not rep.ok and rep.instances == 2 and rep.passes == 1
    assert "FAIL" in rep.summary()
