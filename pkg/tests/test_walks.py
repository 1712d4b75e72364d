import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilpath.gf2 import mat_from_entries, mat_pow, zero
from nilpath.walks import (
    DEFAULT_ENUM_CAP,
    EnumerationCapExceeded,
    PathSpec,
    Walk,
    count_walks_exact,
    count_walks_parity,
    enumerate_walks,
    integer_adjacency_power,
    iter_walks_from,
    path_adjacency,
    walk_is_valid,
)

from oracles import brute_force_walks


class TestPathSpec:
    def test_from_m(self):
        spec = PathSpec.from_m(3)
        assert (spec.n, spec.m) == (7, 3)

    def test_from_n_recognizes_power_of_two_minus_one(self):
        assert PathSpec.from_n(7).m == 3
        assert PathSpec.from_n(1).m == 1
        assert PathSpec.from_n(255).m == 8

    def test_from_n_leaves_other_sizes_untagged(self):
        assert PathSpec.from_n(6).m is None
        assert PathSpec.from_n(2).m is None

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            PathSpec.from_m(0)
        with pytest.raises(ValueError):
            PathSpec.from_n(0)

    def test_rejects_inconsistent_pair(self):
        with pytest.raises(ValueError):
            PathSpec(6, 3)


class TestWalk:
    def test_needs_a_vertex(self):
        with pytest.raises(ValueError):
            Walk(())

    def test_length_start_end(self):
        w = Walk((3, 4, 5, 4))
        assert (w.length, w.start, w.end) == (3, 3, 4)

    def test_zero_length_walk(self):
        w = Walk((5,))
        assert (w.length, w.start, w.end) == (0, 5, 5)

    def test_string_form(self):
        assert str(Walk((1, 2, 1))) == "1-2-1"

    def test_accepts_any_iterable_of_vertices(self):
        assert Walk(tuple([1, 2])).vertices == (1, 2)


class TestPathAdjacency:
    def test_three_path(self):
        assert path_adjacency(3).to_lists() == [
            [0, 1, 0],
            [1, 0, 1],
            [0, 1, 0],
        ]

    def test_single_vertex_has_no_edges(self):
        assert path_adjacency(1) == zero(1)

    def test_matches_entry_predicate(self):
        for n in range(1, 13):
            assert path_adjacency(n) == mat_from_entries(
                n, lambda i, j: 1 if abs(i - j) == 1 else 0
            )

    @given(st.integers(1, 40))
    def test_symmetric_tridiagonal_zero_diagonal(self, n):
        a = path_adjacency(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                expected = 1 if abs(i - j) == 1 else 0
                assert a.bit(i, j) == expected

    def test_rejects_zero_vertices(self):
        with pytest.raises(ValueError):
            path_adjacency(0)


class TestWalkIsValid:
    def test_up_and_down_the_path(self):
        assert walk_is_valid(7, Walk((3, 4, 5, 6, 7, 6, 5, 4)))

    def test_rejects_out_of_range(self):
        assert not walk_is_valid(7, Walk((7, 8)))
        assert not walk_is_valid(7, Walk((0, 1)))

    def test_rejects_self_loop(self):
        assert not walk_is_valid(7, Walk((3, 3)))

    def test_rejects_jump(self):
        assert not walk_is_valid(7, Walk((3, 5)))

    def test_single_vertex_in_range(self):
        assert walk_is_valid(7, Walk((7,)))
        assert not walk_is_valid(7, Walk((9,)))


class TestIterWalksFrom:
    def test_lexicographic_order(self):
        ws = [w.vertices for w in iter_walks_from(5, 3, 4)]
        assert ws == sorted(ws)

    def test_matches_brute_force_listing(self):
        for n in range(1, 6):
            for x in range(1, n + 1):
                for k in range(0, 8):
                    mine = [w.vertices for w in iter_walks_from(n, x, k)]
                    ref = []
                    for y in range(1, n + 1):
                        ref.extend(brute_force_walks(n, x, y, k))
                    assert mine == sorted(ref)

    def test_zero_length(self):
        assert [w.vertices for w in iter_walks_from(4, 2, 0)] == [(2,)]

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            list(iter_walks_from(3, 4, 1))
        with pytest.raises(ValueError):
            list(iter_walks_from(3, 1, -1))


class TestEnumerateWalks:
    def test_no_positive_length_walks_on_one_vertex(self):
        assert enumerate_walks(1, 1, 1, 1) == []

    def test_unique_spanning_walk(self):
        assert [w.vertices for w in enumerate_walks(7, 1, 7, 6)] == [
            (1, 2, 3, 4, 5, 6, 7)
        ]

    def test_unique_bounce_walk(self):
        assert [w.vertices for w in enumerate_walks(3, 1, 1, 2)] == [(1, 2, 1)]

    def test_matches_brute_force(self):
        for n in range(1, 7):
            for k in range(0, 9):
                for x in range(1, n + 1):
                    for y in range(1, n + 1):
                        got = [w.vertices for w in enumerate_walks(n, x, y, k)]
                        assert got == brute_force_walks(n, x, y, k)

    def test_all_walks_valid_with_right_ends(self):
        for w in enumerate_walks(6, 2, 4, 8):
            assert walk_is_valid(6, w)
            assert w.start == 2 and w.end == 4 and w.length == 8

    def test_default_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            enumerate_walks(4, 1, 1, DEFAULT_ENUM_CAP + 1)

    def test_cap_override(self):
        with pytest.raises(EnumerationCapExceeded):
            enumerate_walks(4, 1, 1, 5, cap=4)
        assert enumerate_walks(4, 1, 1, 4, cap=4) is not None

    def test_rejects_bad_vertices(self):
        with pytest.raises(ValueError):
            enumerate_walks(3, 0, 1, 2)
        with pytest.raises(ValueError):
            enumerate_walks(3, 1, 4, 2)


class TestCountWalksExact:
    def test_unique_spanning_walk(self):
        assert count_walks_exact(7, 1, 7, 6) == 1

    def test_figure_sized_example(self):
        # 28 = 8 + 8 + 12, pinned by brute-force enumeration
        assert count_walks_exact(7, 3, 2, 7) == 28

    def test_single_vertex_has_no_walks(self):
        assert count_walks_exact(1, 1, 1, 5) == 0

    def test_zero_length(self):
        assert count_walks_exact(5, 2, 2, 0) == 1
        assert count_walks_exact(5, 2, 3, 0) == 0

    def test_matches_enumeration(self):
        for n in range(1, 7):
            for k in range(0, 9):
                for x in range(1, n + 1):
                    for y in range(1, n + 1):
                        assert count_walks_exact(n, x, y, k) == len(
                            brute_force_walks(n, x, y, k)
                        )

    def test_counts_grow_past_machine_words(self):
        total = sum(
            count_walks_exact(9, 5, y, 200) for y in range(1, 10)
        )
        assert total > 2**64

    @given(
        st.integers(1, 16),
        st.integers(0, 20),
        st.data(),
    )
    def test_reversal_symmetry(self, n, k, data):
        x = data.draw(st.integers(1, n))
        y = data.draw(st.integers(1, n))
        assert count_walks_exact(n, x, y, k) == count_walks_exact(n, y, x, k)

    @given(st.integers(1, 16), st.integers(0, 20), st.data())
    def test_mirror_symmetry(self, n, k, data):
        x = data.draw(st.integers(1, n))
        y = data.draw(st.integers(1, n))
        assert count_walks_exact(n, x, y, k) == count_walks_exact(
            n, n + 1 - x, n + 1 - y, k
        )

    @given(st.integers(1, 16), st.integers(0, 20), st.data())
    def test_step_parity_forces_zero(self, n, k, data):
        x = data.draw(st.integers(1, n))
        y = data.draw(st.integers(1, n))
        if (k - abs(x - y)) % 2:
            assert count_walks_exact(n, x, y, k) == 0

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            count_walks_exact(0, 1, 1, 1)
        with pytest.raises(ValueError):
            count_walks_exact(3, 1, 1, -1)


class TestCountWalksParity:
    def test_even_figure_example(self):
        assert count_walks_parity(7, 3, 2, 7) == 0

    def test_odd_unique_walk(self):
        assert count_walks_parity(7, 1, 7, 6) == 1

    def test_all_pairs_even_at_full_length(self):
        assert all(
            count_walks_parity(7, x, y, 7) == 0
            for x in range(1, 8)
            for y in range(1, 8)
        )

    @given(st.integers(1, 16), st.integers(0, 20), st.data())
    def test_matches_exact_count_mod_two(self, n, k, data):
        x = data.draw(st.integers(1, n))
        y = data.draw(st.integers(1, n))
        assert count_walks_parity(n, x, y, k) == count_walks_exact(n, x, y, k) % 2

    @given(st.integers(1, 16), st.integers(0, 20), st.data())
    @settings(max_examples=50)
    def test_matches_matrix_power_bit(self, n, k, data):
        x = data.draw(st.integers(1, n))
        y = data.draw(st.integers(1, n))
        assert count_walks_parity(n, x, y, k) == mat_pow(
            path_adjacency(n), k
        ).bit(x, y)


class TestIntegerAdjacencyPower:
    def test_matches_brute_force_entrywise(self):
        for n in range(1, 7):
            for k in range(0, 9):
                power = integer_adjacency_power(n, k)
                for x in range(1, n + 1):
                    for y in range(1, n + 1):
                        assert power[x - 1][y - 1] == len(
                            brute_force_walks(n, x, y, k)
                        )

    def test_reduces_to_gf2_power(self):
        for n in (3, 5, 8):
            for k in (0, 1, 4, 9):
                power = integer_adjacency_power(n, k)
                bits = mat_pow(path_adjacency(n), k)
                for x in range(1, n + 1):
                    for y in range(1, n + 1):
                        assert power[x - 1][y - 1] % 2 == bits.bit(x, y)

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            integer_adjacency_power(3, -1)
