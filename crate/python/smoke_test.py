"""Smoke test for the iqlogic_py extension. Run python/build.sh first."""

import iqlogic_py as iq


def main():
    s = iq.Statement("most(Humans)(Able_to_write)")
    assert s.quantifier == "most" and s.subject == "Humans" and not s.negated
    assert str(s.negate()) == "~most(Humans)(Able_to_write)"
    assert iq.parse("~all(Men)(Astronauts)").negated
    assert s == iq.parse("most(Humans)(Able_to_write)")
    assert len({s, iq.parse("most(Humans)(Able_to_write)")}) == 1

    assert iq.contrary("almost_all") == "few"
    assert iq.mirror("almost_all") == "many"
    assert iq.contradictory("almost_all") == "many_not"
    assert iq.implies("all", "some") and not iq.implies("some", "all")
    assert not iq.implies("all", "no")

    kb = ["all(Write_name)(Able_to_write)", "most(Humans)(Write_name)"]
    closure = iq.saturate(kb)
    assert ("most(Humans)(Able_to_write)", "I.A", [0, 1]) in [
        (str(st), rule, premises) for st, rule, premises in closure
    ]
    tree = iq.prove(kb, "some(Humans)(Able_to_write)")
    assert tree is not None and tree.startswith("some(Humans)(Able_to_write)")
    assert iq.prove(kb, "all(Humans)(Able_to_write)") is None

    assert iq.entails(kb, "most(Humans)(Able_to_write)")
    assert not iq.entails(["all(X)(Y)"], "all(Y)(X)")
    assert iq.find_countermodel(["all(X)(Y)"], "all(Y)(X)") == (2, {"X": [0], "Y": [0, 1]})
    assert iq.find_countermodel(kb, "many(Humans)(Able_to_write)") is None

    rows = iq.moods(1, system=2)
    valid = sorted((a, b, c) for a, b, c, v, d in rows if v)
    assert len(valid) == 6 and all(v == d for *_, v, d in rows)

    try:
        iq.parse("most(humans)(X)")
    except ValueError:
        pass
    else:
        raise AssertionError("lowercase term accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
