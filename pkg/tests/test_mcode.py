import numpy as np
import pytest

from griesmer.errors import (
    FileFormatError,
    NotFullRank,
    TooLarge,
    ZeroColumn,
)
from griesmer.gf import field
from griesmer.mcode import (
    PointMultiset,
    code_params,
    generator_matrix,
    hyperplane_spectrum,
    is_divisible,
    multiset_from_matrix,
    multiset_multiplicity,
    oracle_weight_distribution,
    read_gmatrix,
    read_multiset,
    write_gmatrix,
    write_multiset,
)
from griesmer.pg import enumerate_points, flat_points, hyperplane_flat, theta


def simplex(q, k):
    F = field(q)
    return PointMultiset(F, k - 1, {P: 1 for P in enumerate_points(F, k - 1)})


def test_simplex_pg2_gf2_spectrum_and_params():
    M = simplex(2, 3)
    assert hyperplane_spectrum(M) == {3: 7}
    params = code_params(M)
    assert (params.n, params.k, params.d) == (7, 3, 4)
    assert params.divisor == 4
    assert params.gamma0 == 1
    assert params.lam == (0, 7)


def test_simplex_oracle_and_divisibility():
    M = simplex(2, 3)
    assert oracle_weight_distribution(M) == {0: 1, 4: 7}
    assert is_divisible(M, 4)
    assert is_divisible(M, 2)
    assert not is_divisible(M, 3)


@pytest.mark.parametrize("q,k", [(3, 3), (4, 2), (2, 4)])
def test_simplex_parameters_general(q, k):
    M = simplex(q, k)
    params = code_params(M)
    assert (params.n, params.k, params.d) == (theta(k - 1, q), k, q ** (k - 1))
    assert params.divisor == q ** (k - 1)
    assert is_divisible(M, q ** (k - 1))


def test_multiset_multiplicity_cases():
    F = field(3)
    pts = enumerate_points(F, 2)
    M = PointMultiset(F, 2, {pts[0]: 2, pts[1]: 1, pts[5]: 3})
    assert multiset_multiplicity(M, [pts[7], pts[8]]) == 0
    assert multiset_multiplicity(M, pts) == M.n == 6
    assert multiset_multiplicity(M, [pts[0], pts[5]]) == 5
    # non-canonical representatives count once
    assert multiset_multiplicity(M, [(2, 0, 0), (1, 0, 0)]) == 2


def test_spectrum_sums_to_hyperplane_count():
    F = field(4)
    pts = enumerate_points(F, 2)
    M = PointMultiset(F, 2, {pts[i]: (i % 3) + 1 for i in range(0, 15, 2)})
    spec = hyperplane_spectrum(M)
    assert sum(spec.values()) == theta(2, 4)
    params = code_params(M)
    assert sum(params.lam) == theta(2, 4)
    assert sum(i * c for i, c in enumerate(params.lam)) == params.n


def test_distance_matches_oracle_on_irregular_multiset():
    F = field(3)
    pts = enumerate_points(F, 2)
    M = PointMultiset(F, 2, {pts[0]: 2, pts[1]: 1, pts[4]: 1, pts[9]: 2, pts[12]: 1})
    params = code_params(M)
    dist = oracle_weight_distribution(M)
    assert min(w for w in dist if w > 0) == params.d
    spec = hyperplane_spectrum(M)
    for w, count in dist.items():
        if w > 0:
            assert count == (F.q - 1) * spec.get(params.n - w, 0)
    assert sum(dist.values()) == F.q ** params.k


def test_generator_matrix_simplex_pg1_gf2():
    M = simplex(2, 2)
    G = generator_matrix(M)
    assert G.tolist() == [[1, 1, 0], [0, 1, 1]]


def test_generator_matrix_round_trip():
    F = field(4)
    pts = enumerate_points(F, 2)
    M = PointMultiset(F, 2, {pts[0]: 2, pts[3]: 1, pts[11]: 3, pts[20]: 1})
    back = multiset_from_matrix(generator_matrix(M), 4)
    assert back == M


def test_multiset_from_matrix_collapses_proportional_columns():
    M = multiset_from_matrix([[1, 2, 0], [0, 0, 1]], 3)
    # (1,0) and its double (2,0) are the same point
    assert M.mults == {(1, 0): 2, (0, 1): 1}


def test_multiset_from_matrix_errors():
    with pytest.raises(ZeroColumn):
        multiset_from_matrix([[1, 0], [0, 0]], 2)
    with pytest.raises(NotFullRank):
        multiset_from_matrix([[1, 1], [1, 1]], 2)


def test_code_params_requires_spanning_support():
    F = field(2)
    M = PointMultiset(F, 2, {(1, 0, 0): 1, (0, 1, 0): 1, (1, 1, 0): 1})
    with pytest.raises(NotFullRank):
        code_params(M)


def test_oracle_respects_bound():
    M = simplex(2, 3)
    with pytest.raises(TooLarge):
        oracle_weight_distribution(M, max_codewords=7)


def test_oracle_env_bound(monkeypatch):
    M = simplex(2, 3)
    monkeypatch.setenv("GRIESMER_MAX_ORACLE", "7")
    with pytest.raises(TooLarge):
        oracle_weight_distribution(M)
    monkeypatch.setenv("GRIESMER_MAX_ORACLE", "8")
    assert oracle_weight_distribution(M) == {0: 1, 4: 7}


def test_multiset_file_round_trip(tmp_path):
    F = field(4)
    pts = enumerate_points(F, 3)
    M = PointMultiset(
        F, 3, {pts[0]: 3, pts[2]: 1, pts[40]: 2, pts[80]: 1}, meta={"note": "demo"}
    )
    path = tmp_path / "code.ms"
    write_multiset(M, path)
    back = read_multiset(path)
    assert back == M
    assert back.meta == {"note": "demo"}
    # identical bytes on rewrite
    first = path.read_text()
    write_multiset(back, path)
    assert path.read_text() == first


def test_multiset_file_rejects_bad_input(tmp_path):
    path = tmp_path / "bad.ms"
    path.write_text("4\n1 1 0\n")
    with pytest.raises(FileFormatError):
        read_multiset(path)
    path.write_text("4 2\n1 0 0\n")  # zero vector
    with pytest.raises(FileFormatError):
        read_multiset(path)
    path.write_text("4 2\n1 2 0\n")  # not canonical
    with pytest.raises(FileFormatError):
        read_multiset(path)
    path.write_text("4 2\n1 1 0\n2 1 0\n")  # duplicate
    with pytest.raises(FileFormatError):
        read_multiset(path)
    path.write_text("6 2\n1 1 0\n")  # q not a prime power
    with pytest.raises(Exception):
        read_multiset(path)


def test_gmatrix_file_round_trip(tmp_path):
    F = field(3)
    pts = enumerate_points(F, 2)
    M = PointMultiset(F, 2, {pts[0]: 1, pts[4]: 2, pts[7]: 1})
    path = tmp_path / "code.gm"
    write_gmatrix(M, path)
    back = read_gmatrix(path)
    assert back == M
    header = path.read_text().splitlines()[0]
    assert header == "3 3 4"


def test_hyperplane_multiplicity_vs_flat_sum():
    # m(H) computed by the kernel equals a direct sum over the points of H
    F = field(3)
    pts = enumerate_points(F, 2)
    M = PointMultiset(F, 2, {pts[1]: 2, pts[6]: 1, pts[10]: 1})
    mvec = M.hyperplane_mults()
    for idx, H in enumerate(pts):
        direct = multiset_multiplicity(M, flat_points(F, hyperplane_flat(F, H)))
        assert direct == mvec[idx]
