import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jcpair.model import (
    DampingParams,
    SystemParams,
    jc_doublet_energies,
    jc_ground_energy,
    jc_mixing_angle,
)


def params(delta=0.0, omega_c=0.0, g=1.0, kappa=0.0):
    return SystemParams(omega_c=omega_c, omega_a=omega_c + delta, g=g, kappa=kappa)


class TestSystemParams:
    def test_delta_is_difference(self):
        p = SystemParams(omega_c=1.0, omega_a=3.0, g=0.5)
        assert p.delta == 2.0

    def test_negative_g_rejected(self):
        with pytest.raises(ValueError, match="g"):
            SystemParams(omega_c=0.0, omega_a=0.0, g=-0.1)

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(ValueError):
            SystemParams(omega_c=bad, omega_a=0.0, g=1.0)

    def test_kappa_may_be_negative(self):
        assert SystemParams(omega_c=0.0, omega_a=0.0, g=1.0, kappa=-2.0).kappa == -2.0


class TestDampingParams:
    def test_symmetric_constructor_and_accessors(self):
        d = DampingParams.symmetric(gamma=0.01, gamma_c=0.02, gamma_a=0.05)
        assert d.gamma == 0.01
        assert d.gamma_c == 0.02
        assert d.is_symmetric

    def test_asymmetric_accessors_raise(self):
        d = DampingParams(0.01, 0.2, 0.2, 0.01, 0.05)
        assert not d.is_symmetric
        with pytest.raises(ValueError):
            d.gamma
        with pytest.raises(ValueError):
            d.gamma_c

    def test_negative_rate_rejected(self):
        with pytest.raises(ValueError, match="gamma2"):
            DampingParams(0.1, -0.1, 0.0, 0.0, 0.05)

    @pytest.mark.parametrize("gamma_a", [0.0, -1.0])
    def test_gamma_a_must_be_positive(self, gamma_a):
        with pytest.raises(ValueError, match="gamma_a"):
            DampingParams(0.0, 0.0, 0.0, 0.0, gamma_a)


class TestGroundEnergy:
    def test_zero_detuning(self):
        assert jc_ground_energy(params(delta=0.0)) == 0.0

    def test_positive_detuning(self):
        assert jc_ground_energy(SystemParams(omega_c=1.0, omega_a=3.0, g=0.0)) == -1.0

    def test_negative_detuning(self):
        assert jc_ground_energy(SystemParams(omega_c=1.0, omega_a=0.5, g=0.0)) == 0.25


class TestDoubletEnergies:
    def test_vacuum_rabi_doublet_at_resonance(self):
        assert jc_doublet_energies(params(delta=0.0, g=1.0), 1) == (1.0, -1.0)

    def test_hand_evaluated_n2(self):
        # sqrt(2*1 + 1/4) = 1.5 around base 2*5 = 10
        p = SystemParams(omega_c=5.0, omega_a=6.0, g=1.0)
        assert jc_doublet_energies(p, 2) == (11.5, 8.5)

    def test_degenerate_when_uncoupled(self):
        p = SystemParams(omega_c=1.0, omega_a=1.0, g=0.0)
        assert jc_doublet_energies(p, 3) == (3.0, 3.0)

    def test_n_zero_rejected(self):
        with pytest.raises(ValueError, match="n"):
            jc_doublet_energies(params(), 0)

    @given(
        omega_c=st.floats(-50, 50),
        delta=st.floats(-50, 50),
        g=st.floats(0, 20),
        n=st.integers(1, 10),
    )
    def test_sum_and_gap(self, omega_c, delta, g, n):
        p = SystemParams(omega_c=omega_c, omega_a=omega_c + delta, g=g)
        upper, lower = jc_doublet_energies(p, n)
        scale = 1.0 + abs(omega_c) * n + abs(delta) + g
        assert upper + lower == pytest.approx(2 * n * omega_c, abs=1e-12 * scale)
        gap = upper - lower
        assert gap >= 2 * g * math.sqrt(n) - 1e-12 * scale
        if p.delta == 0:
            assert gap == pytest.approx(2 * g * math.sqrt(n), abs=1e-12 * scale)

    @given(
        g=st.floats(0.01, 20),
        delta=st.floats(0, 100),
        n=st.integers(1, 10),
    )
    def test_gap_strictly_increasing_in_detuning(self, g, delta, n):
        near = params(delta=delta, g=g)
        far = params(delta=2 * delta + 1.0, g=g)
        gap_near = jc_doublet_energies(near, n)[0] - jc_doublet_energies(near, n)[1]
        gap_far = jc_doublet_energies(far, n)[0] - jc_doublet_energies(far, n)[1]
        assert gap_far > gap_near


class TestMixingAngle:
    def test_resonant_limit(self):
        assert jc_mixing_angle(params(delta=0.0, g=1.0), 1) == math.pi / 4

    def test_direct_evaluation(self):
        assert jc_mixing_angle(params(delta=2.0, g=1.0), 1) == pytest.approx(math.pi / 8)

    def test_decoupled_atom(self):
        assert jc_mixing_angle(params(delta=2.0, g=0.0), 1) == 0.0

    def test_degenerate_doublet_rejected(self):
        with pytest.raises(ValueError, match="undefined"):
            jc_mixing_angle(params(delta=0.0, g=0.0), 1)

    @given(delta=st.floats(-100, 100), g=st.floats(0, 20), n=st.integers(1, 10))
    def test_range(self, delta, g, n):
        if g == 0 and delta == 0:
            return
        # mathematically the interval is open at -pi/4; a denormal delta can
        # round onto the endpoint, so the test checks the closed interval
        angle = jc_mixing_angle(params(delta=delta, g=g), n)
        assert -math.pi / 4 <= angle <= math.pi / 4
