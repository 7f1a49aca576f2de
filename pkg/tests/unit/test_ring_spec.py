"""Unit tests for the ring spec parser and formatter."""

import random

import pytest

from jacobson_lab.rings import format_ring, parse_ring
from jacobson_lab.survey import CatalogFilter, catalog
from jacobson_lab.utils.exceptions import RingSpecError


def labels(R):
    return [f.label for f in R.factors]


class TestParseRing:
    """Tests for parse_ring."""

    def test_crt_split(self):
        """Z_n splits into prime-power factors in ascending prime order."""
        assert labels(parse_ring("Z6")) == ["Z2", "Z3"]
        assert labels(parse_ring("Z12")) == ["Z4", "Z3"]
        assert labels(parse_ring("Z9")) == ["Z9"]

    def test_written_order_is_kept(self):
        assert labels(parse_ring("Z5 x Z2")) == ["Z5", "Z2"]
        assert labels(parse_ring("GF(4) x Z2")) == ["GF(4)", "Z2"]

    def test_separators_and_whitespace(self):
        assert parse_ring("Z3*Z3") == parse_ring("  Z3   x Z3 ")

    def test_truncated_polynomial(self):
        R = parse_ring("GF(2)[x]/(x^2)")
        assert R.is_local
        assert (R.size, R.radical_size) == (4, 2)

    def test_prime_field_via_gf(self):
        assert labels(parse_ring("GF(5)")) == ["GF(5)"]
        assert parse_ring("GF(5)").size == 5

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("", 0),
            ("Q5", 0),
            ("Z1", 1),
            ("GF(6)", 3),
            ("Z3 x", 4),
            ("Z3 x Y2", 5),
            ("Z3 Z3", 3),
            ("GF(2)[x]/(x^1)", 12),
        ],
    )
    def test_errors_report_offset(self, text, offset):
        with pytest.raises(RingSpecError) as exc:
            parse_ring(text)
        assert exc.value.offset == offset
        assert exc.value.text == text

    def test_offset_counts_utf8_bytes(self):
        """An ideographic space is three bytes of UTF-8."""
        with pytest.raises(RingSpecError) as exc:
            parse_ring("Z3　xQ")
        assert exc.value.offset == 6


class TestFormatRing:
    """Tests for format_ring."""

    @pytest.mark.parametrize(
        "text",
        ["Z2 x Z2", "Z4 x Z3", "GF(4) x Z5", "GF(2)[x]/(x^3) x Z3", "Z27"],
    )
    def test_round_trip(self, text):
        R = parse_ring(text)
        assert format_ring(R) == text
        assert parse_ring(format_ring(R)) == R


TOKENS = ["Z", "GF", "(", ")", "[x]", "/", "(x^", "x", "*", " ", "^", "[", "]", "Q", "٣", "　", "é"]
TOKENS += list("0123456789")


def random_spec(rng: random.Random) -> str:
    return "".join(rng.choice(TOKENS) for _ in range(rng.randint(0, 10)))


class TestParserRobustness:
    """Arbitrary input either parses or raises RingSpecError with a valid offset."""

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("Z" + "9" * 5000, 1),
            ("GF(" + "7" * 400 + ")", 3),
            ("GF(2)[x]/(x^" + "1" * 300 + ")", 12),
            ("Z3 x Z" + "1" * 11, 6),
            ("Z4294967297", 1),
        ],
    )
    def test_huge_numbers(self, text, offset):
        with pytest.raises(RingSpecError) as exc:
            parse_ring(text)
        assert exc.value.offset == offset
        assert "too large" in str(exc.value)

    def test_largest_accepted_number(self):
        R = parse_ring("Z4294967291")
        assert R.size == 4294967291

    @pytest.mark.parametrize("seed", range(20))
    def test_random_input(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            text = random_spec(rng)
            try:
                R = parse_ring(text)
            except RingSpecError as e:
                assert 0 <= e.offset <= len(text.encode("utf-8"))
                assert e.text == text
            else:
                assert parse_ring(format_ring(R)) == R


class TestCatalogRoundTrip:
    """format_ring output parses back to the same ring."""

    def test_every_catalog_ring(self):
        for R in catalog(CatalogFilter(max_order=64, include_local=True)):
            assert parse_ring(format_ring(R)) == R, R.label
