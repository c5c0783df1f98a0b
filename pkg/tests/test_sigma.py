import pytest
from hypothesis import given, settings

from conftest import dyck_words
from middlelevels.dyck import canonic_decompose, enumerate_dyck, is_dyck_minus, rotate
from middlelevels.errors import DomainError
from middlelevels.matching import build_two_factor
from middlelevels.sigma import (
    BasePair,
    base_pairs,
    iter_path_vertices,
    last_vertex,
    path_vertices,
    prefix_vertex,
    prefix_vertex_closed_form,
    sigma,
    sigma_sub,
)
from oracles import dyck_minus_brute, hamming, sigma_recursive, trace_until_last_bit_flip


@pytest.mark.parametrize(
    "x, seq",
    [
        ("110100", (6, 1, 3, 2, 1, 3, 5, 4, 3, 5)),
        ("10", (2, 1)),
        ("1100", (4, 1, 3, 2, 1, 3)),
    ],
)
def test_sigma_examples(x, seq):
    assert sigma(x) == seq


def test_sigma_rejects_non_dyck():
    for bad in ("", "01", "1101"):
        with pytest.raises(DomainError):
            sigma(bad)


@pytest.mark.parametrize(
    "a, xp, seq", [(2, "", ()), (2, "10", (3, 2, 1, 3)), (2, "1010", (3, 2, 1, 3, 5, 4, 3, 5))]
)
def test_sigma_sub(a, xp, seq):
    assert sigma_sub(a, xp) == seq


def test_sigma_sub_needs_a_at_least_2():
    with pytest.raises(DomainError):
        sigma_sub(1, "10")


@settings(max_examples=200)
@given(dyck_words(max_n=40))
def test_sigma_matches_literal_recursion(x):
    u, _ = canonic_decompose(x)
    s = sigma(x)
    assert s == sigma_recursive(x)
    assert len(s) == 2 * len(u) + 2
    assert all(1 <= p <= len(x) for p in s)


def test_sigma_deep_word_has_no_recursion_limit():
    x = "1" * 3000 + "0" * 3000
    assert len(sigma(x)) == 2 * 5998 + 2


def test_path_examples():
    p = path_vertices("110100")
    assert p[:5] == ["110100", "110101", "010101", "011101", "001101"]
    assert p[-1] == "101001"
    assert path_vertices("10") == ["10", "11", "01"]
    assert path_vertices("1100") == ["1100", "1101", "0101", "0111", "0011", "1011", "1001"]


@given(dyck_words(max_n=10))
def test_lazy_path_is_identical(x):
    assert list(iter_path_vertices(x)) == path_vertices(x)


@pytest.mark.parametrize("x, y", [("110100", "101001"), ("10", "01"), ("1100", "1001")])
def test_last_vertex(x, y):
    assert last_vertex(x) == y
    assert path_vertices(x)[-1] == y


@pytest.mark.parametrize("n", range(1, 7))
def test_path_follows_two_factor(n):
    minus = dyck_minus_brute(n)
    ends = set()
    for x in enumerate_dyck(n):
        p = path_vertices(x)
        assert len(set(p)) == len(p)
        assert all(hamming(a, b) == 1 for a, b in zip(p, p[1:]))
        assert p == trace_until_last_bit_flip(x)
        assert is_dyck_minus(p[-1])
        ends.add(p[-1])
    assert ends == minus


@pytest.mark.parametrize("n", range(1, 7))
def test_successor_along_cycle_is_rotation(n):
    tf = build_two_factor(n)
    dyck = set(enumerate_dyck(n))
    for cyc in tf.cycles():
        marks = [i for i, v in enumerate(cyc) if v[-1] == "0" and v[:-1] in dyck]
        L = len(cyc)
        for i, j in zip(marks, marks[1:] + [marks[0] + L]):
            x, y = cyc[i][:-1], cyc[j % L][:-1]
            assert j - i == 4 * n + 2
            assert y == rotate(x) or x == rotate(y)


@pytest.mark.parametrize(
    "x, pairs",
    [
        ("10", [(1, 2)]),
        ("110100", [(1, 6), (2, 3), (4, 5)]),
        ("1100", [(1, 4), (2, 3)]),
    ],
)
def test_base_pairs(x, pairs):
    assert sorted(base_pairs(x)) == [BasePair(a, b) for a, b in pairs]


@given(dyck_words(max_n=10))
def test_base_pairs_frame_hills(x):
    u, _ = canonic_decompose(x)
    for p in base_pairs(x):
        assert 1 <= p.a < p.b <= len(u) + 2
        inner = x[p.a : p.b - 1]
        assert x[p.a - 1] == "1" and x[p.b - 1] == "0"
        assert canonic_decompose("1" + inner + "0") == (inner, "")


def test_prefix_vertex_examples():
    assert prefix_vertex("10", BasePair(1, 2), "first") == "10"
    assert prefix_vertex("1100", BasePair(1, 4), "second") == "1001"
    assert prefix_vertex("110100", BasePair(2, 3), "first") == "010101"


def test_prefix_vertex_rejects_non_base_pair():
    with pytest.raises(DomainError):
        prefix_vertex("110100", BasePair(1, 2), "first")


@pytest.mark.parametrize("n", range(1, 6))
def test_prefix_vertex_closed_forms(n):
    for x in enumerate_dyck(n):
        for p in base_pairs(x):
            for which in ("first", "second"):
                assert prefix_vertex(x, p, which) == prefix_vertex_closed_form(x, p, which)
