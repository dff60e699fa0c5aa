"""Smoke test for the boundary_scope extension module."""

import cmath
import math

import boundary_scope as bs


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    routes = ["integral", "mellin-barnes", "loggamma", "borel"]
    vals = [bs.v(3.0, method=m, tol=1e-12).value for m in routes]
    assert max(abs(a - vals[0]) for a in vals) < 1e-9, vals
    auto = bs.v(1 + 1j)
    print("v(1/3) =", vals[0], "| v at N=1+i:", auto)

    assert close(bs.series_coeff(1), -math.pi ** 2 / 384, 1e-15)
    assert close(bs.zeta(2), math.pi ** 2 / 6, 1e-13)
    assert close(bs.log_gamma(5).real, math.log(24), 1e-13)

    assert abs(bs.reflection_residual(0.3, 0.2)) < 1e-8
    kind, law, coeff = bs.classify("1/2")
    slope, _ = bs.singularity_fit("1/2")
    assert close(slope / coeff, 1.0, 0.02), (slope, coeff)

    assert bs.sigma(1) == (1, 1)
    table = bs.sigma_table(1000)
    assert len(table) == 1000 and all(1 <= s < math.pi ** 2 / 8 for s in table)

    b = bs.borel_transform(1.0)
    assert close(bs.borel_transform(-1.0), -b, 1e-14)
    assert cmath.isfinite(bs.stokes_discontinuity(2 - 2j))

    for j in range(1, 8):
        a = bs.leg_p_root(4, j, "sqrt")
        b = bs.leg_p_root(4, j, "finite")
        assert abs(a - b) < 1e-10, (j, a, b)
    assert bs.cs_identity_residual(10) < 1e-9
    via_v, via_p = bs.one_point(4)
    assert close(via_v, via_p, 1e-8)

    j_quad = bs.mordell_j(1.0, method="quadrature")
    j_mb = bs.mordell_j(1.0)
    assert close(j_quad, j_mb, 1e-10)
    up = bs.mordell_j(-1.0, method="dual", branch_sign=1)
    down = bs.mordell_j(-1.0, method="dual", branch_sign=-1)
    assert abs(up - down.conjugate()) < 1e-14
    print("J(1) =", j_mb.real, "| J(-1 + i0) =", up)

    try:
        bs.v(-3.0)
    except ValueError as e:
        print("v(-3) refused:", e)
    else:
        raise AssertionError("negative axis accepted")

    checks = bs.run_verify("divisor")
    assert all(ok for _, ok, _ in checks)
    print(f"divisor suite: {len(checks)} checks passed")
    print("ok")


if __name__ == "__main__":
    main()
