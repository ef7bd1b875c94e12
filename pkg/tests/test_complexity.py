import random
from fractions import Fraction

import numpy as np
import pytest

from ccl import (DEFAULT_COMPRESSOR, CompressorConfig, RuleSpec,
                 SpaceTimeDiagram, ca_complexity, compressed_length, deflate,
                 encode_diagram, encode_sequence, evolve_ca, tm_complexity)
from rfc1951 import inflate
from test_automaton import action, tm_rule_from_digits


def diagram(rows):
    arr = np.array(rows, dtype=np.uint8)
    return SpaceTimeDiagram(arr.shape[1], arr)


class TestEncoding:
    def test_single_row(self):
        assert encode_diagram(diagram([[0, 1, 0]])) == b"010\n"

    def test_two_by_two_zero(self):
        assert encode_diagram(diagram([[0, 0], [0, 0]])) == b"00\n00\n"

    def test_split_on_newline_recovers_rows(self):
        d = evolve_ca(RuleSpec.eca(30), (1,), 12)
        enc = encode_diagram(d)
        rows = enc.decode().split("\n")[:-1]
        assert len(rows) == d.rows
        got = [[int(ch) for ch in row] for row in rows]
        assert got == d.cells.tolist()

    def test_values_above_nine_rejected(self):
        with pytest.raises(ValueError):
            encode_diagram(diagram([[0, 10]]))
        with pytest.raises(ValueError):
            encode_sequence([1, 12])

    def test_sequence_form(self):
        assert encode_sequence([1, 2, 2]) == b"122\n"


class TestCompressedLength:
    def test_empty_input_is_small_constant(self):
        assert 1 <= compressed_length(b"") <= 8

    def test_constant_input_collapses(self):
        assert compressed_length(b"0" * 10000) < 100

    def test_random_input_stays_incompressible(self):
        data = random.Random(1234).randbytes(10000)
        assert compressed_length(data) > 9000

    def test_stable_across_repeated_calls(self):
        data = encode_diagram(evolve_ca(RuleSpec.eca(110), (1,), 60))
        lengths = {compressed_length(data) for _ in range(100)}
        assert len(lengths) == 1

    def test_subadditive_on_doubling(self):
        rng = random.Random(5)
        for data in (
            b"article " * 250,
            rng.randbytes(1500),
            encode_diagram(evolve_ca(RuleSpec.eca(90), (1,), 40)),
        ):
            assert len(data) >= 1000
            assert (
                compressed_length(data + data)
                < 2 * compressed_length(data) + 64
            )

    def test_round_trips_through_independent_decoder(self):
        rng = random.Random(99)
        streams = [
            b"",
            b"0" * 10000,
            rng.randbytes(10000),
            encode_diagram(evolve_ca(RuleSpec.eca(30), (1,), 80)),
            encode_diagram(evolve_ca(RuleSpec.eca(110), (1,), 80)),
            encode_diagram(evolve_ca(RuleSpec.eca(151), (1,), 40)),
        ]
        for data in streams:
            for config in (
                DEFAULT_COMPRESSOR,
                CompressorConfig(level=1),
                CompressorConfig(level=9),
            ):
                assert inflate(deflate(data, config)) == data


class TestCaComplexity:
    def test_raw_length_formula(self):
        for steps in (0, 1, 7, 31):
            est = ca_complexity(RuleSpec.eca(30), (1,), steps)
            width = 1 + 2 * (steps + 1)
            assert est.raw_length == (width + 1) * (steps + 1)
            assert est.ratio == Fraction(est.compressed_length,
                                         est.raw_length)

    def test_raw_length_growth_is_exactly_the_window_widening(self):
        # raw bytes = (width + 1) * (t + 1) with width = |init| + 2(t + 1),
        # so the second difference in t is the constant 4.
        lengths = [
            ca_complexity(RuleSpec.eca(30), (1, 1), t).raw_length
            for t in range(1, 6)
        ]
        second_diffs = {
            lengths[i + 2] - 2 * lengths[i + 1] + lengths[i]
            for i in range(3)
        }
        assert second_diffs == {4}

    def test_dead_rule_near_constant_baseline(self):
        est = ca_complexity(RuleSpec.eca(0), (1,), 200)
        blank = diagram(np.zeros((201, 403), dtype=np.uint8))
        baseline = compressed_length(encode_diagram(blank))
        assert baseline / 2 <= est.compressed_length <= baseline * 2

    def test_ordering_trivial_nested_chaotic(self):
        c = {
            n: ca_complexity(RuleSpec.eca(n), (1,), 100).compressed_length
            for n in (0, 90, 30)
        }
        assert c[0] < c[90] < c[30]

    def test_chaotic_rule_grows_flat_rule_does_not(self):
        def curve(number):
            return [
                ca_complexity(RuleSpec.eca(number), (1,), t).compressed_length
                for t in (25, 50, 75, 100)
            ]

        chaotic = curve(30)
        flat = curve(95)
        assert all(a < b for a, b in zip(chaotic, chaotic[1:]))
        assert chaotic[-1] - chaotic[0] > 3 * (flat[-1] - flat[0])


class TestTmComplexity:
    def test_never_switching_machine_equals_constant_sequence(self):
        est = tm_complexity(RuleSpec.tm(2, 3, 0), 120)
        want = compressed_length(encode_sequence([1] * 121))
        assert est.compressed_length == want

    def test_zero_steps(self):
        est = tm_complexity(RuleSpec.tm(2, 3, 0), 0)
        assert est.raw_length == 2  # one value plus the row terminator

    def test_busiest_state_user_compresses_worst(self):
        still = RuleSpec.tm(2, 3, 0)
        once = tm_rule_from_digits(
            [action(1, 1, +1), 0, 0, action(1, 0, +1), action(1, 0, +1),
             action(1, 0, +1)]
        )
        pingpong = tm_rule_from_digits(
            [action(1, 0, +1), 0, 0, action(0, 0, +1), 0, 0]
        )
        t = 200
        by_changes = [
            tm_complexity(rule, t, sequence="states").compressed_length
            for rule in (still, once, pingpong)
        ]
        assert by_changes[2] == max(by_changes)
        assert tm_complexity(once, t).compressed_length >= tm_complexity(
            still, t
        ).compressed_length

    def test_unknown_sequence_kind_rejected(self):
        with pytest.raises(ValueError):
            tm_complexity(RuleSpec.tm(2, 3, 0), 5, sequence="tape")


class TestCompressorConfig:
    def test_id_is_pinned(self):
        assert DEFAULT_COMPRESSOR.config_id == "deflate-l6w15s0m8"

    def test_text_round_trip(self):
        cfg = CompressorConfig(level=4, strategy=1)
        assert CompressorConfig.from_text(cfg.to_text()) == cfg

    def test_save_load(self, tmp_path):
        path = tmp_path / "compressor.cfg"
        DEFAULT_COMPRESSOR.save(path)
        assert CompressorConfig.load(path) == DEFAULT_COMPRESSOR

    def test_bad_parameters_rejected(self):
        with pytest.raises(ValueError):
            CompressorConfig(level=10)
        with pytest.raises(ValueError):
            CompressorConfig(window_bits=15)

    def test_levels_change_length_not_content(self):
        data = encode_diagram(evolve_ca(RuleSpec.eca(110), (1,), 50))
        for level in (1, 6, 9):
            stream = deflate(data, CompressorConfig(level=level))
            assert inflate(stream) == data
