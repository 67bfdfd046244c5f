"""Code constructions, perfectness verification, decoding, code files."""

from __future__ import annotations

import math

import pytest

from oracles import bf_decode
from simplexcode import (
    AmbiguousDecodeError,
    Code,
    SimplexSpace,
    ball_size,
    binary_perfect_params,
    code_from_dict,
    construct_binary_perfect,
    construct_ternary_perfect,
    count_binary_perfect,
    decode,
    dumps_code,
    enumerate_space,
    is_perfect,
    load_code,
    min_distance,
    save_code,
)


class TestCodeType:
    def test_canonical_ordering(self):
        code = Code(SimplexSpace(1, 8), ((1, 7), (7, 1), (4, 4)))
        assert code.codewords == ((7, 1), (4, 4), (1, 7))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate codeword"):
            Code(SimplexSpace(1, 8), ((7, 1), (7, 1)))

    def test_rejects_out_of_space(self):
        with pytest.raises(ValueError, match="sum to ell"):
            Code(SimplexSpace(1, 8), ((7, 2),))

    def test_rejects_empty(self):
        with pytest.raises(ValueError, match="at least one codeword"):
            Code(SimplexSpace(1, 8), ())

    def test_rejects_negative_radius_claim(self):
        with pytest.raises(ValueError, match="radius_claim"):
            Code(SimplexSpace(1, 8), ((7, 1),), radius_claim=-1)


class TestBinaryParams:
    def test_division_identity(self):
        for ell in range(3, 40):
            for e in range(1, 5):
                if ell < 2 * e + 1:
                    continue
                p = binary_perfect_params(ell, e)
                assert p.ell == p.q * (2 * e + 1) + p.r
                assert 0 <= p.r < 2 * e + 1
                assert p.q >= 1
                assert 1 <= p.count <= e + 1

    @pytest.mark.parametrize("ell,e,expected", [(7, 1, 2), (8, 1, 1), (9, 1, 1)])
    def test_counts(self, ell, e, expected):
        assert count_binary_perfect(ell, e) == expected

    def test_count_below_threshold_is_zero(self):
        assert count_binary_perfect(2, 1) == 0
        assert count_binary_perfect(4, 2) == 0


class TestBinaryConstruction:
    def test_spacing_eight(self):
        code = construct_binary_perfect(8, 1, 1)
        assert set(code.codewords) == {(7, 1), (4, 4), (1, 7)}

    def test_both_codes_for_ell_seven(self):
        assert set(construct_binary_perfect(7, 1, 1).codewords) == {(6, 1), (3, 4), (0, 7)}
        assert set(construct_binary_perfect(7, 1, 2).codewords) == {(7, 0), (4, 3), (1, 6)}

    def test_too_short(self):
        with pytest.raises(ValueError, match="ell must be >= 2e\\+1"):
            construct_binary_perfect(2, 1)

    def test_variant_out_of_range(self):
        with pytest.raises(ValueError, match="m must be in"):
            construct_binary_perfect(8, 1, 2)

    def test_all_constructions_are_perfect(self):
        for e in range(1, 6):
            for ell in range(2 * e + 1, 61):
                m_count = count_binary_perfect(ell, e)
                for m in range(1, m_count + 1):
                    code = construct_binary_perfect(ell, e, m)
                    assert len(code) == math.ceil((ell + 1) / (2 * e + 1))
                    assert is_perfect(code, e)
                    assert min_distance(code) >= 2 * e + 1

    def test_distinct_codes_per_m(self):
        for ell, e in [(7, 1), (12, 2), (31, 1)]:
            codes = {
                construct_binary_perfect(ell, e, m).codewords
                for m in range(1, count_binary_perfect(ell, e) + 1)
            }
            assert len(codes) == count_binary_perfect(ell, e)


class TestTernaryConstruction:
    def test_radius_two_variant_two(self):
        code = construct_ternary_perfect(2, 2)
        assert set(code.codewords) == {(5, 0, 2), (2, 5, 0), (0, 2, 5)}
        assert code.space == SimplexSpace(2, 7)

    def test_radius_one_variants(self):
        assert set(construct_ternary_perfect(1, 1).codewords) == {(3, 1, 0), (0, 3, 1), (1, 0, 3)}
        assert set(construct_ternary_perfect(1, 2).codewords) == {(3, 0, 1), (1, 3, 0), (0, 1, 3)}

    def test_bad_variant(self):
        with pytest.raises(ValueError, match="variant"):
            construct_ternary_perfect(2, 3)

    def test_bad_radius(self):
        with pytest.raises(ValueError, match="e must be >= 1"):
            construct_ternary_perfect(0, 1)

    def test_both_variants_perfect_up_to_e6(self):
        for e in range(1, 7):
            for variant in (1, 2):
                code = construct_ternary_perfect(e, variant)
                assert len(code) == 3
                assert is_perfect(code, e)
                assert min_distance(code) >= 2 * e + 1


class TestMinDistance:
    def test_ternary(self):
        assert min_distance(construct_ternary_perfect(2, 2)) == 5

    def test_binary(self):
        assert min_distance(Code(SimplexSpace(1, 8), ((7, 1), (4, 4), (1, 7)))) == 3

    def test_antipodal(self):
        for ell in (1, 4, 9):
            code = Code(SimplexSpace(2, ell), ((ell, 0, 0), (0, ell, 0)))
            assert min_distance(code) == ell

    def test_needs_two_codewords(self):
        with pytest.raises(ValueError, match="at least 2"):
            min_distance(Code(SimplexSpace(1, 8), ((7, 1),)))


class TestIsPerfect:
    def test_ternary_codes(self):
        assert is_perfect(construct_ternary_perfect(2, 1), 2)
        assert is_perfect(construct_ternary_perfect(2, 2), 2)

    def test_binary_code(self):
        assert is_perfect(Code(SimplexSpace(1, 8), ((7, 1), (4, 4), (1, 7))), 1)

    def test_whole_space_is_zero_perfect(self):
        space = SimplexSpace(2, 3)
        assert is_perfect(Code(space, tuple(enumerate_space(space))), 0)

    def test_proper_subset_not_zero_perfect(self):
        space = SimplexSpace(2, 3)
        pts = list(enumerate_space(space))
        result = is_perfect(Code(space, tuple(pts[:-1])), 0)
        assert not result
        assert result.uncovered == pts[-1]

    def test_uncovered_certificate(self):
        code = Code(SimplexSpace(1, 8), ((7, 1), (4, 4)))
        result = is_perfect(code, 1)
        assert not result
        assert result.uncovered is not None
        assert all(
            abs(result.uncovered[0] - c[0]) > 1 for c in code.codewords
        )
        assert "uncovered" in result.describe()

    def test_double_cover_certificate(self):
        code = Code(SimplexSpace(1, 8), ((7, 1), (5, 3), (1, 7)))
        result = is_perfect(code, 1)
        assert not result
        point, a, b = result.double_covered
        assert a in code.codewords and b in code.codewords and a != b
        assert "covered by both" in result.describe()

    def test_wrong_radius_rejected(self):
        code = construct_ternary_perfect(2, 2)
        assert not is_perfect(code, 1)
        assert not is_perfect(code, 3)


class TestDecode:
    def test_example(self):
        code = construct_ternary_perfect(2, 2)
        assert decode(code, (4, 2, 1)) == ((5, 0, 2), 2)

    def test_codeword_decodes_to_itself(self):
        code = construct_binary_perfect(9, 1, 1)
        for c in code.codewords:
            assert decode(code, c) == (c, 0)

    def test_perfect_code_never_ambiguous(self):
        for code, e in [
            (construct_ternary_perfect(2, 2), 2),
            (construct_binary_perfect(10, 2, 1), 2),
        ]:
            for y in enumerate_space(code.space):
                word, d = decode(code, y)
                assert d <= e
                assert word in code.codewords

    def test_tie_is_an_error(self):
        code = Code(SimplexSpace(1, 8), ((7, 1), (5, 3)))
        with pytest.raises(AmbiguousDecodeError) as exc_info:
            decode(code, (6, 2))
        assert set(exc_info.value.candidates) == {(7, 1), (5, 3)}
        assert exc_info.value.score == 1

    def test_rejects_point_outside_space(self):
        code = construct_ternary_perfect(2, 2)
        with pytest.raises(ValueError):
            decode(code, (4, 2, 2))

    def test_agrees_with_linear_scan(self):
        code = Code(SimplexSpace(2, 6), ((6, 0, 0), (1, 4, 1), (0, 1, 5)))
        for y in enumerate_space(code.space):
            best_c, best_d, tied = bf_decode(code.codewords, y)
            if tied:
                with pytest.raises(AmbiguousDecodeError):
                    decode(code, y)
            else:
                assert decode(code, y) == (best_c, best_d)


def test_sphere_packing_identity():
    cases = [(construct_ternary_perfect(e, v), e) for e in (1, 2, 3) for v in (1, 2)]
    cases += [
        (construct_binary_perfect(ell, e, m), e)
        for ell, e in [(8, 1), (7, 1), (12, 2), (25, 3)]
        for m in range(1, count_binary_perfect(ell, e) + 1)
    ]
    for code, e in cases:
        total = sum(ball_size(c, e) for c in code.codewords)
        assert total == code.space.size()


class TestCodeFiles:
    def test_canonical_text(self):
        code = construct_ternary_perfect(2, 2)
        assert dumps_code(code) == (
            '{"n": 2, "ell": 7, "e": 2, '
            '"codewords": [[5, 0, 2], [2, 5, 0], [0, 2, 5]]}\n'
        )

    def test_roundtrip(self, tmp_path):
        code = construct_binary_perfect(11, 2, 2)
        path = tmp_path / "code.json"
        save_code(code, path)
        loaded = load_code(path)
        assert loaded.codewords == code.codewords
        assert loaded.space == code.space
        assert loaded.radius_claim == code.radius_claim

    def test_null_radius(self):
        code = code_from_dict({"n": 1, "ell": 3, "e": None, "codewords": [[3, 0], [0, 3]]})
        assert code.radius_claim is None

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            code_from_dict({"n": 1, "ell": 3, "e": 1, "codewords": [[3, 0], [3, 0]]})

    def test_rejects_out_of_space_points(self):
        with pytest.raises(ValueError, match="sum to ell"):
            code_from_dict({"n": 1, "ell": 3, "e": 1, "codewords": [[3, 1]]})

    def test_rejects_missing_fields(self):
        with pytest.raises(ValueError, match="missing fields"):
            code_from_dict({"n": 1, "ell": 3, "codewords": [[3, 0]]})

    def test_rejects_non_integer_coords(self):
        with pytest.raises(ValueError, match="integers"):
            code_from_dict({"n": 1, "ell": 3, "e": 1, "codewords": [[2.5, 0.5]]})

    def test_rejects_non_object(self):
        with pytest.raises(ValueError, match="JSON object"):
            code_from_dict([1, 2, 3])

    def test_rejects_invalid_json_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ValueError, match="invalid JSON"):
            load_code(path)
