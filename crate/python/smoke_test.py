"""Smoke test for the mvtrop extension module."""

import json

import mvtrop


def main():
    chain3 = mvtrop.Algebra("chain:3")
    assert chain3.elements() == ["0", "1/2", "1"]
    assert chain3.oplus("1/2", "1/2") == "1"
    assert chain3.check_axioms().verdict == "valid"
    assert json.loads(chain3.tables_json())["neg"] == [2, 1, 0]

    chang = mvtrop.Algebra("chang")
    assert not chang.is_finite()
    assert chang.theta(3) == ["(0,0)", "(0,1)", "(0,2)", "(0,3)", "(1,0)"]
    assert chang.odot("(1,-1)", "(1,-2)") == "(1,-3)"
    assert chang.check_axioms(samples=200, seed=1)

    vc = chain3.vc_member()
    assert vc.verdict == "counterexample" and vc.witness == {"x": "1/2"}
    assert mvtrop.Algebra("bool:3").vc_member().is_valid()

    term = mvtrop.Term("x -> (y -> x)")
    assert str(term) == "x -> y -> x"
    assert term.variables() == ["x", "y"]
    value = term.evaluate(mvtrop.Algebra("interval"), {"x": "3/10", "y": "9/10"})
    assert value == "1"
    excluded = mvtrop.Term("x \\/ ~x").is_tautology(chain3)
    assert excluded.details["value"] == "1/2"

    report = mvtrop.check_equation("(x(+)x)(.)(x(+)x) = (x(.)x)(+)(x(.)x)", chain3)
    assert report.verdict == "counterexample"
    assert mvtrop.check_equation("x (+) y = y (+) x", chang, bound=4).verdict == "valid_up_to_bound"

    assert mvtrop.gamma_of("Z", "3") == mvtrop.Algebra("chain:4")
    assert mvtrop.delta_of("Z") == chang
    glued = mvtrop.glue(mvtrop.Algebra("bool:2"), chang)
    assert len(glued.elements(1)) == 8

    z_half = mvtrop.Characteristic("Z[1/2]")
    assert z_half.gp(2) == 1 and z_half.gp(3) == 3
    assert z_half.regularity() == "regularly_dense"
    assert z_half.contains("5/8") and not z_half.contains("1/3")
    witness = z_half.find_divisible_between(3, "1/4", "1")
    assert z_half.contains(witness)
    assert mvtrop.Characteristic("chi:3^2").hom_to(mvtrop.Characteristic("Z")) == (True, "9")
    assert mvtrop.Characteristic("Q").hom_to(mvtrop.Characteristic("Z"))[0] is False
    assert mvtrop.Characteristic("Q").flat_check(samples=100).is_valid()
    assert mvtrop.Characteristic("Z").theta_pt_matches(chang, 10)

    try:
        mvtrop.Term("x (+")
    except mvtrop.ParseError:
        pass
    else:
        raise AssertionError("expected a parse error")
    try:
        chang.tables_json()
    except mvtrop.MvtropError:
        pass
    else:
        raise AssertionError("expected an error for an infinite algebra")

    print("smoke test passed")


if __name__ == "__main__":
    main()
