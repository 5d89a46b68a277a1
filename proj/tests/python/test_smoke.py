import os

import pytest

import gf2g

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")

XOR = """start S
S -> A (+) C
A -> a A (+) B
B -> b B c (+) eps
C -> C c (+) D
D -> a D b (+) eps
"""


def test_parity_on_the_xor_grammar():
    g = gf2g.to_cnf(gf2g.parse_grammar(XOR))
    assert gf2g.parse_parity(g, "abbcc")
    assert not gf2g.parse_parity(g, "abc")


def test_doubling_grammar():
    g = gf2g.to_cnf(gf2g.parse_grammar("start S\nS -> S S (+) a\n"))
    assert gf2g.enumerate(g, 16) == ["a" * k for k in (1, 2, 4, 8, 16)]


def test_validation():
    ok, cycles = gf2g.validate(gf2g.parse_grammar("start S\nS -> S (+) a\n"))
    assert not ok
    assert cycles == [["S"]]


def test_series_matches_enumeration():
    g = gf2g.to_cnf(gf2g.load_grammar(os.path.join(FIXTURES, "anbn.g2")))
    solved = gf2g.extract_dual(g, "ab", [6, 6])
    assert solved["support"] == [[n, n] for n in range(7)]
    assert gf2g.series_of_words(gf2g.enumerate(g, 12), "ab", [6, 6]) == solved


def test_recurrence_and_factoring():
    g = gf2g.to_cnf(gf2g.parse_grammar("start S\nS -> a S b (+) eps\n"))
    assert gf2g.find_recurrence(g, [32, 32], 2, 2, 3) == (1, ["1", "b"])
    assert gf2g.factor("1+abc", 2) == "irreducible"
    assert gf2g.factor("1+a+b+ab", 1) == ("1 + b", "1 + a")


def test_quotient_and_identities():
    q = gf2g.quotient_grammar(gf2g.parse_grammar("start S\nS -> eps\n"), "1+ab")
    words = gf2g.enumerate(gf2g.to_cnf(q), 6)
    assert words == ["", "ab", "aabb", "aaabbb"]
    assert gf2g.ambiguity_identities_hold(9)


def test_errors_surface_as_exceptions():
    with pytest.raises(gf2g.Error):
        gf2g.parse_grammar("S -> a\n")


def test_cli_entry():
    code, out, _ = gf2g.run_cli(["irreducible", "1+abc"])
    assert code == 0
    assert out.startswith("irreducible")
