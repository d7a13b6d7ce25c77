import json

import pytest

from distlab.configurations import GeneratorSpec, generate
from distlab.experiment import (
    MissingFamilyError, fit_exponent, formula_value, run_count, run_experiment, scene_sizes,
)
from distlab.scene import Scene

from fixtures import descartes_circles


def test_run_count_examples():
    s = generate(GeneratorSpec("ParallelMedian", {"n": 10, "m": 5}))
    assert run_count(s, "distinctPL").value == 5
    assert run_count(Scene(circles2=descartes_circles()), "circleTangentPairs").value == 6
    assert run_count(Scene(circles2=descartes_circles()), "circleTangencyPoints").value == 6
    with pytest.raises(MissingFamilyError):
        run_count(Scene(), "distinctPL")
    with pytest.raises(MissingFamilyError):
        run_count(Scene(circles2=descartes_circles()), "distinctPL")
    with pytest.raises(KeyError):
        run_count(s, "nope")


def test_exclude_zero():
    s = generate(GeneratorSpec("ParallelMedian", {"n": 3, "m": 2}))
    assert run_count(s, "distinctPL").value == 2
    assert run_count(s, "distinctPL", exclude_zero=True).value == 1


def test_sizes_and_formulas():
    s = generate(GeneratorSpec("ElekesGrid", {"r": 1, "s": 2, "t": 2}))
    assert scene_sizes(s) == {"m": 8, "n": 2, "k": 0}
    assert formula_value("designed", s) == 4
    assert formula_value("D15_35", s) == pytest.approx(8 ** 0.2 * 2 ** 0.6)
    with pytest.raises(KeyError):
        formula_value("bogus", s)


def test_fit_exponent_exact_power():
    xs = [1, 2, 4, 8, 16]
    slope, err = fit_exponent(xs, [3 * x ** 1.5 for x in xs])
    assert slope == pytest.approx(1.5, abs=1e-12) and err < 1e-9


def test_experiment_report(tmp_path):
    rep = run_experiment("ElekesGrid", {"r": [1, 2, 4], "s": [1, 2, 4], "t": [1, 2, 4]}, "designed")
    assert [r.observed for r in rep.rows] == [1, 8, 64]
    assert all(r.ratio == 1 for r in rep.rows)
    assert rep.fitted_exponents["r"][0] == pytest.approx(3.0)
    assert rep.to_csv().splitlines()[0] == "r,s,t,observed,formula,ratio,wall_ms"
    out = tmp_path / "e.csv"
    rep.write(out)
    assert json.loads(out.with_suffix(".json").read_text())["generator"] == "ElekesGrid"


def test_experiment_parallel_matches_serial():
    sweep = {"n": [2, 4, 6]}
    a = run_experiment("ParallelMedian", sweep, "ceil_half_n", workers=1)
    b = run_experiment("ParallelMedian", sweep, "ceil_half_n", workers=2)
    assert [r.observed for r in a.rows] == [r.observed for r in b.rows] == [1, 2, 3]


def test_experiment_validation():
    with pytest.raises(ValueError):
        run_experiment("ElekesGrid", {"r": [1, 2], "s": [1]}, "designed")
    with pytest.raises(RuntimeError):
        run_experiment("ParallelMedian", {"n": [2]}, "designed", fixed={"bogus": 1})
