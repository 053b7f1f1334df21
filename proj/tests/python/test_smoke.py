import math

import pytest

import bargheat as bh


def test_operator_names():
    assert set(bh.OPERATORS) == {
        "dirac-real", "dirac-complex", "euler-real",
        "euler-complex", "harmonic-real", "harmonic-complex",
    }


def test_polygauss_basics():
    g = bh.PolyGauss(bh.Side.REAL, [1.0], alpha=-1.0)
    assert g(0.0) == 1
    assert abs(g.integral() - math.sqrt(math.pi)) < 1e-15
    assert bh.PolyGauss.from_record(g.to_record()) == g
    assert bh.PolyGauss.parse("exp(-x^2)") == g
    assert (2 * g - g) == g
    assert g.in_l2()


def test_parse_errors_surface_as_value_errors():
    with pytest.raises(bh.ParseError):
        bh.PolyGauss.parse("sin(x)")
    with pytest.raises(ValueError):
        bh.PolyGauss.parse("x + z")


def test_transform_examples():
    a = 1.0
    g = bh.PolyGauss.parse("exp(-0.5 x^2)")
    # transform parameter a/2 maps the ground state to a constant
    assert abs(bh.forward(g, a / 2, 0.3 + 0.4j) - (math.pi / a) ** 0.25) < 1e-14
    assert abs(bh.forward_quadrature(g, a / 2, 1j) - (math.pi / a) ** 0.25) < 1e-10
    one = bh.PolyGauss.parse("1", bh.Side.COMPLEX)
    x = 0.4
    want = (2 * a / math.pi) ** 0.25 * math.exp(-a * x * x)
    for method in (bh.Method.EXACT, bh.Method.SERIES, bh.Method.QUADRATURE):
        assert abs(bh.inverse(one, a, x, method) - want) < 1e-10
    with pytest.raises(bh.DivergenceError):
        bh.forward(bh.PolyGauss.parse("exp(x^2)"), 1.0, 0.0)


def test_solver_examples():
    one = bh.PolyGauss.parse("1")
    assert abs(bh.solve("dirac-real", 1.0, 1.0, one, 0.0) - math.exp(-0.5)) < 1e-15
    assert abs(bh.solve("euler-real", 1.0, 0.0, bh.PolyGauss.parse("x^2"), 0.7) - 0.49) < 1e-15
    z = bh.PolyGauss.parse("z")
    assert abs(bh.solve("euler-complex", 1.0, 1.0, z, 1.0) - math.exp(-3)) < 1e-15
    with pytest.raises(bh.UsageError):
        bh.solve("no-such-op", 1.0, 1.0, one, 0.0)


def test_residuals_and_routes():
    init = bh.PolyGauss.parse("(1 + 0.5x) exp(-0.6 x^2)")
    for op in ("dirac-real", "euler-real", "harmonic-real"):
        assert bh.exact_residual(op, 1.0, 0.4, init) < 1e-12
        direct = bh.solution_image(op, 1.0, 0.4, init)
        route = bh.conjugation_image(op, 1.0, 0.4, init)
        for x in (-1.0, 0.0, 0.8):
            assert abs(direct(x) - route(x)) < 1e-10


def test_kernels():
    assert abs(bh.mehler_kernel(1.0, 0.25, 0.0, 0.0) - 0.55265166844956) < 1e-12
    ratio = bh.mehler_kernel(1.0, 0.3, 0.2, 0.1, bh.MehlerForm.HYPERBOLIC_UNHALVED) / bh.mehler_kernel(1.0, 0.3, 0.2, 0.1)
    assert abs(ratio - math.sqrt(2)) < 1e-12
    assert abs(bh.harmonic_kernel_complex(1.0, 0.0, 0, 0, two_i=True) - 2j) < 1e-15
    with pytest.raises(bh.DomainError):
        bh.mehler_kernel(1.0, 0.0, 0.0, 0.0)


def test_suites():
    assert "intertwine" in bh.suite_names()
    reports = bh.run_suite("intertwine", a=1.0)
    assert reports and all(r["passed"] for r in reports)
    assert all(r["defect"] <= 1e-12 for r in reports)


def test_run_config():
    status, out, _ = bh.run_config("subcommand = solve\nop = dirac-real\na = 1\nt = 1\nx = 0\ninit = 1\n")
    assert status == 0
    header, row = out.strip().split("\n")
    assert header.startswith("t,x,value_re")
    assert abs(float(row.split(",")[2]) - math.exp(-0.5)) < 1e-15
    status, _, err = bh.run_config("subcommand = solve\nop = bogus\nt = 1\nx = 0\ninit = 1\n")
    assert status == 2 and "bogus" in err
