"""Seeded randomized property checks over every shipped presentation."""

import random

from propsuites import (
    suite_confluence_associativity,
    suite_mu_multiplicative,
    suite_parse_roundtrip,
    suite_ring_axioms,
)

CASES = 1000


def test_ring_axioms():
    assert suite_ring_axioms(random.Random(101), CASES) == []


def test_confluence_and_associativity():
    assert suite_confluence_associativity(random.Random(102), CASES) == []


def test_mu_is_multiplicative():
    assert suite_mu_multiplicative(random.Random(103), CASES) == []


def test_parse_render_roundtrip():
    assert suite_parse_roundtrip(random.Random(104), CASES) == []
