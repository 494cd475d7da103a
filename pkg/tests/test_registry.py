"""Identity catalog behavior: descriptors, evaluation, sweeps, domain gates."""

import json
import math

import pytest

from legdual.errors import DomainError, UnknownIdentityError
from legdual.registry import (
    INV_SQRT2,
    Kind,
    TOL_BOUNDARY,
    TOL_FINITE,
    TOL_SERIES,
    evaluate_identity,
    get_descriptor,
    list_identities,
    sweep_identity,
)

ALL = list_identities()


class TestCatalog:
    def test_count(self):
        assert len(ALL) == 47

    def test_kind_census(self):
        by_kind = {}
        for d in ALL:
            by_kind[d.kind] = by_kind.get(d.kind, 0) + 1
        assert by_kind[Kind.INFINITE_SERIES] == 18
        assert by_kind[Kind.FINITE_SUM] == 23
        assert by_kind[Kind.VANISHING_SUM] == 6

    def test_ids_unique(self):
        ids = [d.id for d in ALL]
        assert len(set(ids)) == len(ids)

    def test_descriptor_fields(self):
        d = get_descriptor("thm4.fwd")
        assert d.kind is Kind.INFINITE_SERIES
        assert callable(d.lhs) and callable(d.rhs_term)
        assert d.x_domain
        assert d.param_domain

    def test_unknown_id(self):
        with pytest.raises(UnknownIdentityError):
            get_descriptor("thm99.zzz")
        with pytest.raises(UnknownIdentityError):
            evaluate_identity("thm99.zzz", {"nu": 0.3}, 0.5)


class TestEvaluate:
    def test_terminating_series_case(self):
        r = evaluate_identity("thm4.fwd", {"nu": -2.0, "mu": 0.7}, 0.4)
        assert r.passed and r.rel_err <= 1e-11

    def test_interior_series_case(self):
        r = evaluate_identity("thm5.fwd", {"nu": 0.3 + 0.2j, "mu": 1.1}, 0.6)
        assert r.passed and r.rel_err <= 1e-9
        assert r.tolerance_used == TOL_SERIES

    def test_finite_sum_tolerance(self):
        r = evaluate_identity("cor6", {"k": 3, "m": 2}, 0.9)
        assert r.passed
        assert r.tolerance_used == TOL_FINITE

    def test_vanishing_sum_scaled_by_max_term(self):
        r = evaluate_identity("cor8.a", {"k": 2, "lam": 0.6 + 0.2j}, 0.5)
        assert r.passed
        assert abs(r.lhs) == 0.0

    def test_boundary_tolerance_with_condition(self):
        r = evaluate_identity("thm4.fwd", {"nu": -0.8 + 0.3j, "mu": 0.5 - 0.2j},
                              INV_SQRT2)
        assert r.passed
        assert r.tolerance_used == TOL_BOUNDARY

    def test_boundary_rejected_without_condition(self):
        with pytest.raises(DomainError):
            evaluate_identity("thm4.fwd", {"nu": 0.9 + 0.3j, "mu": 0.5j}, INV_SQRT2)

    def test_window_is_sharp_below_boundary(self):
        with pytest.raises(DomainError):
            evaluate_identity("thm4.fwd", {"nu": -0.8 + 0.3j, "mu": 0.5 - 0.2j}, 0.6)

    def test_report_round_trips_through_json(self):
        r = evaluate_identity("thm5.fwd", {"nu": 0.3 + 0.2j, "mu": 1.1}, 0.6)
        doc = json.loads(json.dumps(r.to_dict()))
        assert doc["id"] == "thm5.fwd"
        assert doc["passed"] is True
        assert doc["params"]["nu"] == [0.3, 0.2]
        assert len(doc["lhs"]) == 2 and len(doc["rhs"]) == 2
        for key in ("abs_err", "rel_err", "terms_used", "tolerance", "x"):
            assert key in doc


class TestSweep:
    def test_reports_shape(self):
        reps = sweep_identity("thm9.fwd", n_samples=2, seed=1)
        assert len(reps) == 2 * 3

    def test_seed_changes_points_not_status(self):
        a = sweep_identity("thm5.inv", n_samples=3, seed=1)
        b = sweep_identity("thm5.inv", n_samples=3, seed=2)
        assert [r.params for r in a] != [r.params for r in b]
        assert all(r.passed for r in a) and all(r.passed for r in b)

    def test_errors_collected_not_raised(self):
        # parameters violating the stated condition must surface as a failed
        # report with an error string, not an exception
        bad = [{"nu": -1.5 + 0.2j, "mu": 0.3 + 0j}]
        reps = sweep_identity("thm7.q2", param_sampler=bad, n_samples=1)
        assert reps and all(not r.passed for r in reps)
        assert all(r.error is not None for r in reps)

    def test_explicit_grid(self):
        reps = sweep_identity("cor6", param_sampler=[{"k": 3, "m": 2}],
                              x_grid=(0.4, 0.8))
        assert [r.x for r in reps] == [0.4, 0.8]
        assert all(r.passed for r in reps)

    @pytest.mark.parametrize("ident", [d.id for d in ALL])
    def test_every_identity_smoke(self, ident):
        reps = sweep_identity(ident, n_samples=2, seed=11)
        bad = [r for r in reps if not r.passed]
        assert not bad, f"{ident}: {[(r.x, r.rel_err, r.error) for r in bad]}"
