"""Codes in the discrete simplex: constructions, perfectness checks, decoding.

A code is a set of points of one simplex. It is e-perfect when the radius-e
balls around its codewords are pairwise disjoint and cover the whole space,
i.e. every point is within distance e of exactly one codeword. Nontrivial
perfect codes (at least two codewords, e >= 1) exist only over binary and
ternary alphabets, and this module constructs all of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import AmbiguousDecodeError
from .simplex import (
    Point,
    SimplexSpace,
    ball,
    distance,
    enumerate_space,
    format_point,
    make_point,
)


@dataclass(frozen=True)
class Code:
    """A duplicate-free set of codewords in one simplex.

    Codewords are normalized to the canonical order (lexicographically
    decreasing, the same order the space is enumerated in). radius_claim is
    carried metadata only; call is_perfect to actually check it.
    """

    space: SimplexSpace
    codewords: tuple[Point, ...]
    radius_claim: int | None = None

    def __post_init__(self) -> None:
        words = [make_point(self.space, w) for w in self.codewords]
        if not words:
            raise ValueError("a code needs at least one codeword")
        if len(set(words)) != len(words):
            seen: set[Point] = set()
            for w in words:
                if w in seen:
                    raise ValueError(f"duplicate codeword {format_point(w)}")
                seen.add(w)
        if self.radius_claim is not None and self.radius_claim < 0:
            raise ValueError(f"radius_claim must be >= 0, got {self.radius_claim}")
        object.__setattr__(self, "codewords", tuple(sorted(words, reverse=True)))

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __repr__(self) -> str:
        words = " ".join(format_point(w) for w in self.codewords)
        return f"<Code n={self.space.n} ell={self.space.ell} e={self.radius_claim} {words}>"


@dataclass(frozen=True)
class BinaryPerfectParams:
    """Division parameters behind the binary-alphabet classification.

    q and r are the quotient and remainder of ell by the codeword spacing
    2e+1; s = min(r, e) is the largest offset the first codeword can have
    from the (ell, 0) corner; count = min(r+1, 2e+1-r) is the number of
    distinct perfect codes with these parameters.
    """

    ell: int
    e: int
    q: int
    r: int
    s: int
    count: int


def binary_perfect_params(ell: int, e: int) -> BinaryPerfectParams:
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    if ell < 2 * e + 1:
        raise ValueError(f"ell must be >= 2e+1 = {2 * e + 1}, got {ell}")
    q, r = divmod(ell, 2 * e + 1)
    return BinaryPerfectParams(
        ell=ell, e=e, q=q, r=r, s=min(r, e), count=min(r + 1, 2 * e + 1 - r)
    )


def count_binary_perfect(ell: int, e: int) -> int:
    """Number of nontrivial e-perfect codes over a binary alphabet.

    Returns 0 when ell < 2e+1 (no nontrivial code fits) or e < 1.
    """
    if e < 0:
        raise ValueError(f"e must be >= 0, got {e}")
    if e == 0 or ell < 2 * e + 1:
        return 0
    return binary_perfect_params(ell, e).count


def construct_binary_perfect(ell: int, e: int, m: int = 1) -> Code:
    """The m-th perfect code over a binary alphabet, 1 <= m <= count.

    Codewords sit at spacing 2e+1 along the path from (ell, 0) to (0, ell);
    m selects how the pattern is anchored against the endpoints.
    """
    p = binary_perfect_params(ell, e)
    if not 1 <= m <= p.count:
        raise ValueError(f"m must be in [1, {p.count}], got {m}")
    step = 2 * e + 1
    words = tuple(
        (ell - p.s + m - 1 - i * step, p.s - m + 1 + i * step) for i in range(p.q + 1)
    )
    return Code(SimplexSpace(1, ell), words, radius_claim=e)


def construct_ternary_perfect(e: int, variant: int = 1) -> Code:
    """One of the two e-perfect codes over a ternary alphabet (ell = 3e+1).

    Both variants have three codewords arranged with threefold rotational
    symmetry; they are mirror images of each other, and they are the only
    nontrivial perfect codes on three symbols.
    """
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    a = 2 * e + 1
    if variant == 1:
        words = ((a, e, 0), (0, a, e), (e, 0, a))
    else:
        words = ((a, 0, e), (e, a, 0), (0, e, a))
    return Code(SimplexSpace(2, 3 * e + 1), words, radius_claim=e)


def min_distance(code: Code) -> int:
    if len(code.codewords) < 2:
        raise ValueError("minimum distance needs at least 2 codewords")
    return min(distance(a, b) for a, b in combinations(code.codewords, 2))


@dataclass(frozen=True)
class PerfectnessResult:
    """Outcome of a perfectness check, with a witness on failure."""

    perfect: bool
    uncovered: Point | None = None
    double_covered: tuple[Point, Point, Point] | None = None

    def __bool__(self) -> bool:
        return self.perfect

    def describe(self) -> str:
        if self.perfect:
            return "perfect: codeword balls partition the space"
        if self.double_covered is not None:
            p, a, b = self.double_covered
            return (
                f"not perfect: point {format_point(p)} is covered by both "
                f"{format_point(a)} and {format_point(b)}"
            )
        assert self.uncovered is not None
        return f"not perfect: point {format_point(self.uncovered)} is uncovered"


def is_perfect(code: Code, e: int) -> PerfectnessResult:
    """Check that radius-e balls around the codewords partition the space.

    On failure the result carries a witness: a point claimed by two
    codewords, or the first uncovered point in enumeration order.
    """
    if e < 0:
        raise ValueError(f"radius must be >= 0, got {e}")
    owner: dict[Point, Point] = {}
    for c in code.codewords:
        for p in ball(c, e):
            prev = owner.get(p)
            if prev is not None:
                return PerfectnessResult(False, double_covered=(p, prev, c))
            owner[p] = c
    if len(owner) != code.space.size():
        for p in enumerate_space(code.space):
            if p not in owner:
                return PerfectnessResult(False, uncovered=p)
    return PerfectnessResult(True)


def decode(code: Code, y: Point) -> tuple[Point, int]:
    """Nearest-codeword decoding of a point of the space.

    Returns the unique nearest codeword and the distance achieved. A tie is
    reported as AmbiguousDecodeError rather than broken silently: against a
    perfect code ties cannot happen, so one showing up means the code (or
    its claimed radius) is defective.
    """
    y = make_point(code.space, y)
    best = min(distance(c, y) for c in code.codewords)
    tied = [c for c in code.codewords if distance(c, y) == best]
    if len(tied) > 1:
        raise AmbiguousDecodeError(y, tied, best)
    return tied[0], best


def code_to_dict(code: Code) -> dict:
    return {
        "n": code.space.n,
        "ell": code.space.ell,
        "e": code.radius_claim,
        "codewords": [list(w) for w in code.codewords],
    }


def code_from_dict(obj) -> Code:
    """Build a Code from parsed JSON, rejecting anything malformed.

    Out-of-space points, duplicates, wrong lengths and non-integer entries
    are all errors; the claimed radius may be null.
    """
    if not isinstance(obj, dict):
        raise ValueError("code file must contain a JSON object")
    missing = {"n", "ell", "e", "codewords"} - obj.keys()
    if missing:
        raise ValueError(f"code file missing fields: {', '.join(sorted(missing))}")
    n, ell, e, words = obj["n"], obj["ell"], obj["e"], obj["codewords"]
    for name, value in (("n", n), ("ell", ell)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer")
    if e is not None and (not isinstance(e, int) or isinstance(e, bool) or e < 0):
        raise ValueError("e must be null or a nonnegative integer")
    if not isinstance(words, list) or not words:
        raise ValueError("codewords must be a nonempty list")
    for w in words:
        if not isinstance(w, list):
            raise ValueError("each codeword must be a list of integers")
    return Code(SimplexSpace(n, ell), tuple(tuple(w) for w in words), radius_claim=e)


def dumps_code(code: Code) -> str:
    """Canonical JSON text of a code: fixed key order, codewords sorted."""
    return json.dumps(code_to_dict(code)) + "\n"


def save_code(code: Code, path) -> None:
    Path(path).write_text(dumps_code(code), encoding="utf-8")


def load_code(path) -> Code:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in code file {path}: {exc}") from exc
    return code_from_dict(obj)
