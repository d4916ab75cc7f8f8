import pytest

from distinguo.ex41 import (
    GEN_B,
    GEN_C,
    GEN_D,
    IDENTITY,
    S0,
    X,
    Y,
    Ex41Element,
    ex41_multiply,
    ex41_window_action,
    is_square,
    transposition,
)

from oracles import evaluate, naive_apply, naive_window_key, words_by_form, words_up_to


def test_squares_include_zero():
    assert [i for i in range(-3, 20) if is_square(i)] == [0, 1, 4, 9, 16]


def test_involutions():
    assert ex41_multiply(GEN_D, GEN_D) == IDENTITY
    assert ex41_multiply(GEN_C, GEN_C) == IDENTITY
    assert (S0 * S0).is_identity()


def test_conjugate_of_d():
    e = GEN_B ** -9 * GEN_D * GEN_B ** 9
    assert e == Ex41Element(1, 0, frozenset({(1, -9)}))
    flipped = [i for i in range(-4, 5) if e.flipped_at(i)]
    assert flipped == [0]


def test_inverse():
    for word in words_up_to(3):
        e = evaluate(word)
        assert (e * e.inverse()).is_identity()
        assert (e.inverse() * e).is_identity()


def test_window_action_identity_and_d():
    w = ex41_window_action(IDENTITY, 2)
    assert len(w.points) == 10 and w.motion() == 0 and not w.escaped
    assert w.as_permutation().is_identity()
    w = ex41_window_action(GEN_D, 2)
    moved = {p for p in w.points if w.images[p] != p}
    assert moved == {(X, 0), (Y, 0), (X, 1), (Y, 1)}


def test_window_action_reports_escapes():
    w = ex41_window_action(GEN_B, 1)
    assert w.images[(X, -1)] == (X, 0)
    assert set(w.escaped) == {(X, 1), (Y, 1)}
    with pytest.raises(ValueError):
        w.as_permutation()


def test_normal_form_evaluation_matches_naive_action():
    pts = [(s, i) for i in range(-12, 13) for s in (X, Y)]
    for word in words_up_to(4):
        e = evaluate(word)
        for p in pts:
            assert e(p) == naive_apply(word, p), (word, p)


def test_normal_form_equality_iff_window_agreement():
    # Window keys come from the letter-by-letter action, not from the normal form.
    forms = words_by_form(6)
    key_owner = {}
    for form, words in forms.items():
        keys = {naive_window_key(w, 100) for w in words[:3]}
        assert len(keys) == 1, words[:3]
        key = keys.pop()
        assert key not in key_owner, (words[0], key_owner.get(key))
        key_owner[key] = words[0]


def test_group_b_window_motion_grows():
    # d alone moves only the 22 points at square indices within radius 100, so the
    # threshold 50 is checked at a radius with more than 25 squares.
    elements = [e for e in words_by_form(6) if not e.is_identity()]
    for e in elements:
        assert not e.explicit
        assert e.flips or e.reflect != 1 or e.shift != 0
    minima = [min(ex41_window_action(e, r).motion() for e in elements) for r in (25, 100, 400, 1600)]
    assert minima == sorted(minima) and len(set(minima)) == 4
    assert minima[1] == 20
    assert minima[-1] > 50


@pytest.mark.parametrize("radius", [0, 1, 5, 50])
def test_s0_window_motion_is_two(radius):
    assert ex41_window_action(S0, radius).motion() == 2


def test_transpositions_are_conjugates_of_s0():
    for i in range(-5, 6):
        assert GEN_B ** i * S0 * GEN_B ** -i == transposition(i)
