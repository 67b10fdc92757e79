import itertools

import pytest

import schroder


def test_counts_match_schroder_numbers():
    for n in range(1, 8):
        expected = schroder.schroder_number(n)
        assert len(schroder.inversion_sequences(n)) == expected
        assert len(schroder.permutations(n)) == expected
    assert schroder.schroder_number(7) == 1806


def test_enumeration_against_brute_force():
    def contains(w, pat):
        k = len(pat)
        for idx in itertools.combinations(range(len(w)), k):
            sub = [w[i] for i in idx]
            if all((sub[a] < sub[b]) == (pat[a] < pat[b]) and (sub[a] == sub[b]) == (pat[a] == pat[b])
                   for a in range(k) for b in range(k)):
                return True
        return False

    n = 6
    brute = [list(p) for p in itertools.permutations(range(1, n + 1))
             if not contains(p, (2, 4, 1, 3)) and not contains(p, (4, 2, 1, 3))]
    assert schroder.permutations(n) == brute


def test_worked_examples():
    e = [0, 1, 0, 0, 1, 3, 0, 7, 0, 0, 7, 10]
    p = schroder.psi(e)
    assert p == [5, 3, 6, 8, 7, 4, 9, 1, 11, 12, 10, 2]
    assert schroder.psi_inverse(p) == e
    assert schroder.phi([5, 1, 6, 4, 3, 7, 2]) == [0, 1, 0, 2, 3, 0, 5]
    assert schroder.ava([3, 1, 4, 2]) == [5, 3, 2, 1]
    assert schroder.fs_act([3, 4, 8, 6, 2, 5, 7, 1], 4) == [3, 8, 6, 4, 2, 5, 7, 1]
    assert schroder.canonical_rep([3, 4, 8, 6, 2, 5, 7, 1]) == [1, 3, 4, 6, 8, 2, 5, 7]


def test_stats_transported():
    e = [0, 1, 0, 0, 1, 3, 0, 7, 0, 0, 7, 10]
    lhs = schroder.sequence_stats(e)
    rhs = schroder.permutation_stats(schroder.psi(e))
    pairs = [("DIST", "VID"), ("ASC", "DES"), ("ZERO", "LMA"), ("EMA", "LMI"), ("RMI", "RMA"), ("EXPO", "RMI")]
    for a, b in pairs:
        assert lhs[a] == rhs[b]


def test_outline_roundtrip():
    e = [0, 1, 0, 1, 2, 0, 4]
    path = schroder.outline(e)
    assert path == "0r,1,1r,1,2,2r,4"
    assert schroder.invert_outline(path) == e
    assert "stroke-dasharray" in schroder.render_svg(path)


def test_gamma_and_series():
    assert schroder.gamma_invseq(3) == [1, 2]
    assert schroder.gamma_expand([1, 2], 3) == [1, 4, 1]
    assert schroder.gamma_perms(5) == schroder.gamma_invseq(5)
    coeffs = schroder.series(5)
    assert [sum(c.values()) for c in coeffs[1:]] == [schroder.schroder_number(n) for n in range(1, 6)]
    assert all(schroder.verify_cubic(6).values())


def test_checks_and_errors():
    assert "sextuple" in schroder.check_names()
    assert schroder.run_check("roundtrip", 5)["passed"]
    with pytest.raises(ValueError):
        schroder.psi([0, 0, 2, 1])
    with pytest.raises(ValueError):
        schroder.run_check("no-such-check", 3)
