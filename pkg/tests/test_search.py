import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgame.entanglers import EntanglerSpec
from qgame.games import (
    DA_BROTHER,
    PRISONER_DILEMMA,
    GameTable,
    closed_form_sq_amplitudes,
)
from qgame.mesh import MeshSpec, angles_to_index, index_to_angles
from qgame.search import (
    analytic_best_response,
    best_response_table,
    find_pure_ne,
    mixed_cycle,
    no_psne_certificate,
    sweep_beta,
    threshold_beta,
)
from qgame.strategies import StrategyAngles

SMALL = MeshSpec(5, 9, 9)

angle_triples = st.tuples(
    st.floats(0, 2 * math.pi),
    st.floats(0, 2 * math.pi),
    st.floats(0, math.pi),
)


class TestFindPureNe:
    def test_unentangled_recovers_classical_ne(self):
        result = find_pure_ne(DA_BROTHER, EntanglerSpec("j1", 0.0), SMALL)
        assert result.found
        n = SMALL.n_strategies
        # the unique classical equilibrium is mutual confession (both flips)
        assert result.pairs[-1][:2] == (n, n)
        pay = result.pairs[-1][2]
        assert abs(pay.p1 - (-5.0)) < 1e-12 and abs(pay.p2 - (-5.0)) < 1e-12

    def test_max_entanglement_removes_ne(self):
        result = find_pure_ne(DA_BROTHER, EntanglerSpec("j1", math.pi / 2), SMALL)
        assert not result.found and result.pairs == ()

    def test_matrix_path_agrees_with_closed_form(self):
        spec = EntanglerSpec("j1", 0.8)
        a = find_pure_ne(DA_BROTHER, spec, SMALL)
        b = find_pure_ne(DA_BROTHER, spec, SMALL, use_matrix=True)
        assert [p[:2] for p in a.pairs] == [p[:2] for p in b.pairs]
        for pa, pb in zip(a.pairs, b.pairs):
            assert abs(pa[2].p1 - pb[2].p1) < 1e-10
            assert abs(pa[2].p2 - pb[2].p2) < 1e-10

    def test_pairs_are_mutual_best_responses(self):
        spec = EntanglerSpec("j1", 0.8)
        result = find_pure_ne(DA_BROTHER, spec, SMALL)
        br2 = best_response_table(DA_BROTHER, spec, SMALL, responder=2)
        br1 = best_response_table(DA_BROTHER, spec, SMALL, responder=1)
        assert result.found
        for i1, i2, _ in result.pairs:
            assert i2 in br2[i1]
            assert i1 in br1[i2]

    def test_pairs_sorted_lexicographically(self):
        result = find_pure_ne(DA_BROTHER, EntanglerSpec("j1", 0.8), SMALL)
        keys = [p[:2] for p in result.pairs]
        assert keys == sorted(keys)


class TestBestResponseTable:
    def test_shape_and_range(self):
        table = best_response_table(DA_BROTHER, EntanglerSpec("j1", 0.0), SMALL, 2)
        n = SMALL.n_strategies
        assert len(table) == n + 1 and table[0] == set()
        assert all(rs and min(rs) >= 1 and max(rs) <= n for rs in table[1:])

    def test_classical_dominant_strategy(self):
        # unentangled: type-standard brother always prefers to confess (flip)
        table = best_response_table(DA_BROTHER, EntanglerSpec("j1", 0.0), SMALL, 2)
        n = SMALL.n_strategies
        assert n in table[1] and n in table[n]

    def test_explicit_matrix_accepted(self):
        table = best_response_table(DA_BROTHER, np.eye(4), SMALL, 1)
        ref = best_response_table(DA_BROTHER, EntanglerSpec("identity"), SMALL, 1)
        assert table == ref

    def test_bad_responder(self):
        with pytest.raises(ValueError):
            best_response_table(DA_BROTHER, EntanglerSpec("j1", 0.0), SMALL, 3)


class TestSweep:
    def test_monotone_disappearance(self):
        betas = np.linspace(0.0, math.pi / 2, 8)
        results = sweep_beta(DA_BROTHER, "j1", SMALL, betas)
        flags = [r.found for r in results]
        # once the equilibrium disappears it stays gone
        assert flags == sorted(flags, reverse=True)
        assert flags[0] and not flags[-1]

    def test_threshold_value(self):
        betas = np.linspace(0.0, math.pi / 2, 8)
        results = sweep_beta(DA_BROTHER, "j1", SMALL, betas)
        bc = threshold_beta(results)
        assert bc is not None and 0.0 < bc < math.pi / 2

    def test_threshold_none_when_never_found(self):
        results = sweep_beta(DA_BROTHER, "j1", SMALL, [math.pi / 2])
        assert threshold_beta(results) is None

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            sweep_beta(DA_BROTHER, "j1", SMALL, [0.5, 0.1])


class TestAnalyticBestResponse:
    # interior theta: when the reply lands on a pole, StrategyAngles
    # canonicalizes its phases away and the amplitude guarantee moves to the
    # raw-angle path exercised by no_psne_certificate
    interior_triples = st.tuples(
        st.floats(0, 2 * math.pi),
        st.floats(0, 2 * math.pi),
        st.floats(0.01, math.pi - 0.01),
    )

    @given(interior_triples, st.sampled_from(["psi_plus", "triplet"]), st.sampled_from([1, 2]))
    @settings(max_examples=150)
    def test_target_amplitude_is_one(self, triple, form, responder):
        g_opp = StrategyAngles(*triple)
        reply = analytic_best_response(responder, form, g_opp)
        if responder == 2:
            w = closed_form_sq_amplitudes(form, g_opp, reply)
            assert abs(w[1] - 1.0) < 1e-12
        else:
            w = closed_form_sq_amplitudes(form, reply, g_opp)
            assert abs(w[2] - 1.0) < 1e-12

    @given(angle_triples)
    @settings(max_examples=150)
    def test_cycle_closes_in_four_steps(self, triple):
        g1 = StrategyAngles(*triple)
        g2, g1p, g2p = mixed_cycle(g1)
        back = analytic_best_response(1, "psi_plus", g2p)
        assert np.allclose(back.as_tuple(), g1.as_tuple(), atol=1e-9)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            analytic_best_response(3, "psi_plus", StrategyAngles(0, 0, 0))
        with pytest.raises(ValueError):
            analytic_best_response(1, "bell", StrategyAngles(0, 0, 0))


class TestNoPsneCertificate:
    def test_holds_for_dilemma_games(self):
        assert no_psne_certificate("psi_plus", 200, PRISONER_DILEMMA)
        assert no_psne_certificate("psi_plus", 200, DA_BROTHER)
        assert no_psne_certificate("triplet", 200, PRISONER_DILEMMA)

    def test_fails_for_coordination_game(self):
        # |01> is already both players' favorite outcome: the pair reaching
        # it is a settlement point, so the certificate must refuse
        game = GameTable(name="coord", u1=((0, 5), (0, 0)), u2=((0, 5), (0, 0)))
        assert not no_psne_certificate("psi_plus", 50, game)

    def test_deterministic_in_seed(self):
        assert no_psne_certificate("psi_plus", 50, seed=7) == no_psne_certificate(
            "psi_plus", 50, seed=7
        )

    def test_rejects_bad_samples(self):
        with pytest.raises(ValueError):
            no_psne_certificate("psi_plus", 0)


class TestMixedCycle:
    def test_origin_cycle_strategies(self):
        g1 = StrategyAngles(0, 0, 0)
        g2, g1p, g2p = mixed_cycle(g1)
        # replies alternate between the equator and swap theta across pi/2
        assert abs(g2.theta - math.pi) < 1e-12
        assert abs(g1p.theta - 0.0) < 1e-12
        assert abs(g2p.theta - math.pi) < 1e-12

    def test_cycle_stays_on_small_mesh_for_origin(self):
        mesh = MeshSpec(9, 17, 17)
        g1 = StrategyAngles(0, 0, 0)
        for g in mixed_cycle(g1):
            assert 1 <= angles_to_index(mesh, g) <= mesh.n_strategies
