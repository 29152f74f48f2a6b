from fractions import Fraction

import symspec


def test_dimensions():
    assert symspec.dimension("stair:4") == 768
    assert symspec.dimension([3, 1]) == 3
    assert symspec.dimension("hook:7") == 6
    assert sum(symspec.dimension(p) ** 2 for p in symspec.partitions_of(6)) == 720


def test_character_ratios():
    assert symspec.theta([2, 2]) == 0
    assert symspec.theta([3, 1]) == Fraction(1, 3)
    assert symspec.ratio_mn([3, 1], 2) == Fraction(-1, 3)
    assert symspec.ratio_two([2, 2]) == 1
    approx = symspec.trace_character([3, 1], [1])
    assert abs(approx - 1 / 3) < 1e-12


def test_conjugation_and_skew():
    assert symspec.conjugate([4, 2, 1]) == [3, 2, 1, 1]
    assert symspec.skew_count([2, 1], [1]) == 2
    assert symspec.zeta([], [2, 2]) == 2


def test_coxeter_audit():
    audit = symspec.coxeter_audit([5, 2, 1])
    assert audit["dimension"] == 64
    assert audit["max"] <= 1e-12


def test_sampled_matrix_identities():
    matrix, zbar = symspec.assemble([3, 1], seed=5)
    assert matrix.shape == (3, 3)
    trace = sum(matrix[i][i] for i in range(3))
    assert abs(trace - 3 * (1 / 3) * zbar) < 1e-9
    eigenvalues = symspec.spectrum([3, 1], seed=5)
    assert abs(sum(eigenvalues) - trace) < 1e-9


def test_monte_carlo():
    report = symspec.monte_carlo([2, 2], trials=40, seed=3, smax=2)
    assert report["trials"] == 40
    assert report["dimension"] == 2
    m2 = report["estimates"][1]
    assert abs(m2["mean"] - 1) <= 3 * m2["se"]
    assert report["residuals"]["trace"] <= 1e-8
    again = symspec.monte_carlo([2, 2], trials=40, seed=3, smax=2)
    assert report["estimates"] == again["estimates"]


def test_identities():
    assert symspec.eta_zero(3, 2) == 9
    assert symspec.k2_series(5) == 32
    assert symspec.staircase(2, [1], 3) == 8


def test_hermite_and_limit():
    assert symspec.hermite_coefficients(2) == [Fraction(-1, 2), 0, Fraction(1, 2)]
    assert abs(symspec.limit_moment(2, 0.5, 1.0) - (0.25 + 0.75)) < 1e-12
    assert abs(symspec.gaussian_raw_moment(3, 1.0, 0.0) - 1.0) < 1e-12


def test_plancherel():
    mean, variance = symspec.plancherel(3)
    assert mean == 0
    assert variance == Fraction(1, 3)
