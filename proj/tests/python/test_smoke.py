import math

import pytest

import vacpol


def test_specialfns():
    assert abs(vacpol.specialfns.frak_k_scaled(0.5, 3.0) - math.sqrt(math.pi / 2)) < 1e-13
    assert abs(vacpol.specialfns.erf(1.0) - 0.8427007929497149) < 1e-14
    assert vacpol.specialfns.harmonic(4) == pytest.approx(25 / 12)


def test_reflecting_neumann():
    cfg = vacpol.FieldConfig(d=1, m=1.0)
    bc = vacpol.ReflectingBC.symmetric(vacpol.RobinCoefficient(0.0))
    p = vacpol.reflecting.plane_term(cfg, bc, 1.0)
    assert p == pytest.approx(0.018126772835967565, rel=1e-12)
    assert vacpol.reflecting.plane_term_oracle(cfg, bc, 1.0) == pytest.approx(p, rel=1e-8)
    v = vacpol.reflecting.evaluate(cfg, bc, 1.0)
    assert v.total == pytest.approx(v.free_term + v.plane_term)


def test_semitransparent_and_errors():
    bc = vacpol.SemitransparentBC(gamma=2.0)
    cfg = vacpol.FieldConfig(d=2, m=1.0)
    d = vacpol.semitransparent.diagonal_coefficients(bc, 0.5)
    assert d.L == 0.0 and not d.beta_branch
    assert vacpol.semitransparent.plane_term(cfg, bc, 0.5) < 0.0
    with pytest.raises(vacpol.ParameterError):
        vacpol.SemitransparentBC(alpha=2.0)
    with pytest.raises(vacpol.InfraredDivergence):
        vacpol.reflecting.massless_value(vacpol.FieldConfig(d=1, m=0.0), vacpol.ReflectingBC.symmetric(vacpol.RobinCoefficient(0.0)), 0.5)
    assert issubclass(vacpol.ParameterError, vacpol.Error)


def test_heat_and_validate():
    k = vacpol.heat.robin_half_line_kernel(1.0, 1.0, 1.0, 0.0, 0.0)
    assert k == pytest.approx((1 + math.exp(-1)) / math.sqrt(4 * math.pi))
    value, err = vacpol.heat.spectral_oracle_robin(1.0, 1.0, 1.0, 0.0, 0.0)
    assert value == pytest.approx(k, abs=1e-7)
    checks = vacpol.validate("specialfns")
    assert checks and all(c.passed for c in checks)
