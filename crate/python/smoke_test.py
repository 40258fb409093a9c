#!/usr/bin/env python3
"""Smoke test for the guardcover_py extension module.

Build and stage the module first:

    cargo build --release -p guardcover-py
    cp target/release/libguardcover_py.so python/guardcover_py.so

then run `python3 python/smoke_test.py`. The script also finds the .so
in target/release directly, so the copy is optional.
"""
import os
import shutil
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)


def stage_module():
    staged = os.path.join(HERE, "guardcover_py.so")
    built = os.path.join(ROOT, "target", "release", "libguardcover_py.so")
    if not os.path.exists(staged) and os.path.exists(built):
        shutil.copyfile(built, staged)
    sys.path.insert(0, HERE)


stage_module()
import guardcover_py as gc  # noqa: E402


def check(label, cond):
    status = "ok" if cond else "FAIL"
    print(f"{label}: {status}")
    if not cond:
        sys.exit(1)


# constructions
c5 = gc.build_tower(2, 3)
check("tower(2,3) is C_5", (c5.n, c5.m) == (5, 5) and c5.is_connected())
grotzsch = gc.build_tower(2, 4)
check("tower(2,4) sizes", (grotzsch.n, grotzsch.m) == (11, 20))
m, roles = gc.Graph.complete(2).mycielskian()
check("mycielskian(K_2) = C_5", (m.n, m.m) == (5, 5) and roles[4] == "apex")
check("prism edge count", c5.prism().m == 2 * c5.m + c5.n)
check("edge-list round trip", gc.Graph(c5.to_edge_list()).to_edge_list() == c5.to_edge_list())

# exact invariants
check("alpha(C_5) = 2", gc.independence_number(c5)[0] == 2)
check("chi(C_5) = 3", gc.chromatic_number(c5)[0] == 3)
check("theta(C_5) = 3", gc.clique_cover(c5)[0] == 3)
check("chi(Grotzsch) = 4", gc.chromatic_number(grotzsch)[0] == 4)
check("omega(Grotzsch) = 2", gc.max_clique(grotzsch)[0] == 2)
check("Grotzsch vertex-critical", gc.is_vertex_critical(grotzsch)[0])

# the cover identity theta(G x K2) = 2 theta(G) - q on a tiny case
e3 = gc.Graph.empty(3)
q, blocks = gc.max_singletons_q(e3)
check("q(empty 3) = 3", q == 3 and len(blocks) == 3)
check("theta(prism empty 3) = 3", gc.clique_cover(e3.prism())[0] == 2 * 3 - q)

# eternal domination
check("gamma(C_5) = 3", gc.gamma_infinity(c5) == (3, 3, 3))
check("K_5 1-guardable", gc.is_eternally_k_guardable(gc.Graph.complete(5), 1))
k3 = gc.Graph.complete(3)
cert = gc.certificate_text(k3, 1)
accepted, reason = gc.verify_certificate(k3, cert)
check("K_3 certificate round trip", accepted and reason is None)
forged = cert.replace(" guardable 3\n0\n1\n2\n", " guardable 1\n1\n")
accepted, reason = gc.verify_certificate(k3, forged)
check("forged certificate rejected", not accepted and "closure violated" in reason)

# the headline run: k = 2 counterexample
g15 = gc.build_counterexample(2)
check("counterexample sizes", (g15.n, g15.m) == (15, 69))
verdict, report = gc.refute_conjecture(2)
check("conjecture refuted", verdict == "conjecture refuted")
check("theta(G x K2) = 8", "claim theta-prism expected 8 computed 8 status ok" in report)
check("gamma(G x K2) = 7", "value gamma-prism 7" in report)

print("smoke test passed")
