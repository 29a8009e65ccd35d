from shakelink.lab.suites import additivity_instances, oracle_suite, pair_reports, run


def test_suites_pass_and_meet_their_sizes():
    results = {r.suite: r for r in run("all", seed=0)}
    assert set(results) == {"magnus", "oracle", "additivity", "pairs"}
    for r in results.values():
        assert r.failed == 0, [o.id for o in r.outcomes if not o.ok]
    assert sum(o.id.startswith("word-") for o in results["magnus"].outcomes) == 200
    assert len(results["oracle"].outcomes) >= 50
    assert len(results["additivity"].outcomes) >= 20


def test_output_is_sorted_and_summarised():
    r = oracle_suite(seed=3)
    ids = [o.id for o in r.outcomes]
    assert ids == sorted(ids)
    assert r.lines()[-1] == f"summary suite=oracle passed={len(ids)} failed=0"


def test_seed_changes_instances_deterministically():
    a = [x[0:1] + (x[4],) for x in additivity_instances(1)]
    assert a == [x[0:1] + (x[4],) for x in additivity_instances(1)]
    assert [str(x[2]) for x in additivity_instances(1)] != [str(x[2]) for x in additivity_instances(2)]


def test_pair_coverage():
    names = [n for n, _ in pair_reports(0)]
    knots = {n.split("-")[1] for n in names if n.startswith("crossing_change")}
    assert {"trefoil", "T2", "T3"} <= knots and len(knots) >= 5
    assert sum(n.startswith("strong_shake_hopf") for n in names) >= 3
    assert sum(n.startswith("lemma41") for n in names) >= 5
