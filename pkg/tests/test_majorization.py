import math
from itertools import accumulate

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from perronmax.majorization import bfd_lambda, chain, chain_lambdas, compare, monotonicity_check
from perronmax.oracle import tree_sequences
from strategies import tree_sequences as tree_sequence_strategy


def _changed_positions(a, b):
    return [i for i, (x, y) in enumerate(zip(a, b)) if x != y]


def test_compare_examples():
    assert compare((2, 2, 1, 1), (3, 1, 1, 1)) == "less"
    assert compare((3, 1, 1, 1), (2, 2, 1, 1)) == "greater"
    assert compare((2, 2, 1, 1), (2, 2, 1, 1)) == "equal"
    assert compare((3, 3, 1, 1, 1, 1), (4, 2, 2, 1, 1, 1)) == "less"
    assert compare((3, 3, 3, 1, 1, 1, 1, 1), (4, 2, 2, 2, 2, 1, 1, 1)) == "incomparable"
    with pytest.raises(ValueError, match="length"):
        compare((3, 3, 1, 1, 1, 1), (4, 2, 2, 1, 1))


def test_compare_sorts_its_inputs():
    assert compare((1, 2, 1), (2, 1, 1)) == "equal"


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 10).flatmap(lambda n: st.tuples(*[st.sampled_from(tree_sequences(n))] * 3)))
def test_compare_is_a_partial_order(triple):
    a, b, c = triple
    ab, ba = compare(a, b), compare(b, a)
    flip = {"less": "greater", "greater": "less", "equal": "equal", "incomparable": "incomparable"}
    assert ba == flip[ab]
    if ab in ("less", "equal") and compare(b, c) in ("less", "equal"):
        assert compare(a, c) in ("less", "equal")


def test_single_step_chain():
    ch = chain((2, 2, 2, 1, 1), (3, 2, 1, 1, 1))
    assert [s.degrees for s in ch] == [(2, 2, 2, 1, 1), (3, 2, 1, 1, 1)]
    assert ch.steps == 1
    assert _changed_positions(*[s.degrees for s in ch]) == [0, 2]


def test_path_to_star_chain_for_n6():
    ch = chain((2, 2, 2, 2, 1, 1), (5, 1, 1, 1, 1, 1))
    assert ch.steps == 3
    assert monotonicity_check(ch)
    lams = chain_lambdas(ch)
    assert lams[0] == pytest.approx(2 * math.cos(math.pi / 7), abs=1e-12)
    assert lams[-1] == pytest.approx(math.sqrt(5), abs=1e-12)


def test_chain_argument_errors():
    with pytest.raises(ValueError):
        chain((2, 2, 1, 1), (2, 2, 1, 1))
    with pytest.raises(ValueError):
        chain((3, 1, 1, 1), (2, 2, 1, 1))
    with pytest.raises(ValueError):
        chain((3, 3, 3, 1, 1, 1, 1, 1), (4, 2, 2, 2, 2, 1, 1, 1))
    with pytest.raises(ValueError):
        chain((2, 2, 2), (3, 2, 1))


def test_monotonicity_examples():
    ch = chain((2, 2, 1, 1), (3, 1, 1, 1))
    assert chain_lambdas(ch) == pytest.approx([(1 + math.sqrt(5)) / 2, math.sqrt(3)], abs=1e-12)
    assert monotonicity_check(ch)
    single = type(ch)(ch.sequences[:1])
    assert monotonicity_check(single)


@settings(max_examples=150, deadline=None)
@given(st.integers(4, 16).flatmap(lambda n: st.tuples(*[tree_sequence_strategy(min_n=n, max_n=n)] * 2)))
def test_chain_steps_are_unit_transfers_between_tree_sequences(pair):
    a, b = pair
    if compare(a, b) == "greater":
        a, b = b, a
    assume(compare(a, b) == "less")
    ch = chain(a, b)
    assert ch.sequences[0].degrees == a and ch.sequences[-1].degrees == b
    for x, y in zip(ch, list(ch)[1:]):
        assert compare(x, y) == "less"
        diff = [q - p for p, q in zip(x, y)]
        assert sorted(d for d in diff if d) == [-1, 1]
        assert sum(y) == sum(x) == 2 * (len(x) - 1) and min(y) >= 1
        # prefix sums move up by exactly one on a contiguous block
        gaps = [q - p for p, q in zip(accumulate(x), accumulate(y))]
        assert set(gaps) <= {0, 1}


@pytest.mark.parametrize("n", range(3, 10))
def test_path_is_minimum_and_star_maximum(n):
    seqs = tree_sequences(n)
    path = (2,) * (n - 2) + (1, 1)
    star = (n - 1,) + (1,) * (n - 1)
    lams = {s.degrees: bfd_lambda(s) for s in seqs}
    for s in seqs:
        if s.degrees != path:
            assert compare(path, s) == "less"
        if s.degrees != star:
            assert compare(s, star) == "less"
        assert lams[path] - 1e-12 <= lams[s.degrees] <= lams[star] + 1e-12
    assert lams[star] == pytest.approx(math.sqrt(n - 1), abs=1e-12)
