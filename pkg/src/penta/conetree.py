"""The quaternary tree of saddle-connection vectors on the golden L.

The positive cone {x > 0, y >= 0} is partitioned into four sectors by the
lines of slope 1/phi, 1 and phi; each sector is the image of the cone under
one of four shears/rotation-like maps sigma_0..sigma_3.  Words over the
digits 0..3, with first digit restricted to 1..3, enumerate the set of long
saddle connection vectors bijectively: the word d1 d2 ... dn (digits in
order of application) names the vector sigma_dn ... sigma_d1 [1, 0].

Every vector in the tree is [a + b*phi, c + d*phi] with nonnegative integer
coefficients, so tree traversal runs on plain integer 4-tuples; GoldenNum
vectors are materialized only in the public TreeNode objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .golden import GMat2, GVec2, GoldenNum, PHI, PHI_BAR

#: sigma_0..sigma_3 as printed: row-major [[a, b], [c, d]].
SIGMA: tuple[GMat2, ...] = (
    GMat2(1, PHI, 0, 1),
    GMat2(PHI, PHI, 1, PHI),
    GMat2(PHI, 1, PHI, PHI),
    GMat2(1, 0, PHI, 1),
)

SIGMA_INV: tuple[GMat2, ...] = tuple(m.inverse() for m in SIGMA)

ROOT_ABCD = (1, 0, 0, 0)


def sigma(i: int) -> GMat2:
    """The sector map sigma_i, i in 0..3."""
    if i not in (0, 1, 2, 3):
        raise DomainError(f"sector index out of range: {i}")
    return SIGMA[i]


def apply_sigma_abcd(i: int, t: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """sigma_i acting on coefficient 4-tuples: [a+b*phi, c+d*phi] coordinates."""
    a, b, c, d = t
    if i == 0:
        return (a + d, b + c + d, c, d)
    if i == 1:
        return (b + d, a + b + c + d, a + d, b + c + d)
    if i == 2:
        return (b + c, a + b + d, b + d, a + b + c + d)
    if i == 3:
        return (a, b, b + c, a + b + d)
    raise DomainError(f"sector index out of range: {i}")


def classify_sector(v: GVec2) -> int:
    """The unique i with v in Sigma_i, half-open boundaries as printed.

    Sigma_0: 0 <= y < x/phi;  Sigma_1: x/phi <= y < x;
    Sigma_2: x <= y < phi*x;  Sigma_3: phi*x <= y.
    """
    if v.x.sign() <= 0 or v.y.sign() < 0:
        raise DomainError(f"vector {v} is outside the positive cone")
    ratio = v.y - v.x * PHI_BAR_LOCAL
    if ratio.sign() < 0:
        return 0
    if (v.y - v.x).sign() < 0:
        return 1
    if (v.y - v.x * PHI).sign() < 0:
        return 2
    return 3


# local alias; PHI_BAR lives in golden but the sector test reads better inline
from .golden import PHI_BAR as PHI_BAR_LOCAL  # noqa: E402


@dataclass(frozen=True)
class TreeNode:
    """A node of the saddle-connection tree."""

    word: str
    abcd: tuple[int, int, int, int]

    @property
    def vector(self) -> GVec2:
        return GVec2.from_abcd(self.abcd)

    @property
    def depth(self) -> int:
        return len(self.word)

    def to_json_dict(self) -> dict:
        a, b, c, d = self.abcd
        v = self.vector
        return {"word": self.word, "a": a, "b": b, "c": c, "d": d,
                "x": str(v.x), "y": str(v.y)}


def check_word(word: str, canonical: bool = False) -> str:
    """Validate a tree word; with canonical=True also require d1 in 1..3."""
    if any(ch not in "0123" for ch in word):
        raise DomainError(f"tree word must use digits 0-3: {word!r}")
    if canonical and word and word[0] == "0":
        raise DomainError(f"canonical tree words do not start with 0: {word!r}")
    return word


def tree_vector(word: str) -> TreeNode:
    """The node sigma_dn ... sigma_d1 [1, 0] for word d1 ... dn."""
    check_word(word)
    t = ROOT_ABCD
    for ch in word:
        t = apply_sigma_abcd(int(ch), t)
    return TreeNode(word, t)


def accumulated_matrix(word: str) -> GMat2:
    """The matrix product sigma_dn ... sigma_d1 (determinant 1)."""
    check_word(word)
    m = GMat2.identity()
    for ch in word:
        m = SIGMA[int(ch)] @ m
    return m


def mirror_word(word: str) -> str:
    """The word of the reflected direction (across y = x).

    First digit swaps 1<->3 with 2 fixed; later digits swap 0<->3 and 1<->2.
    """
    check_word(word)
    if not word:
        raise DomainError("mirror_word needs a nonempty word")
    if word[0] not in "123":
        raise DomainError(f"mirror_word needs a canonical first digit: {word!r}")
    first = {"1": "3", "2": "2", "3": "1"}[word[0]]
    rest = word[1:].translate(str.maketrans("0123", "3210"))
    return first + rest


def enumerate_tree(max_depth: int) -> Iterator[TreeNode]:
    """All canonical nodes of depth <= max_depth, in lexicographic word order."""
    if max_depth < 0:
        raise DomainError("max_depth must be >= 0")
    yield TreeNode("", ROOT_ABCD)

    def walk(word: str, t: tuple[int, int, int, int]) -> Iterator[TreeNode]:
        for i in range(4):
            child = apply_sigma_abcd(i, t)
            node = TreeNode(word + str(i), child)
            yield node
            if node.depth < max_depth:
                yield from walk(node.word, child)

    if max_depth >= 1:
        for i in (1, 2, 3):
            child = apply_sigma_abcd(i, ROOT_ABCD)
            node = TreeNode(str(i), child)
            yield node
            if max_depth > 1:
                yield from walk(node.word, child)


def _fits(t: tuple[int, int, int, int], np: int, nq: int) -> bool:
    # a + b*phi <= np + nq*phi, exactly, via the integer sign rule
    a, b, c, d = t
    return (_gsign(a - np, b - nq) <= 0) and (_gsign(c - np, d - nq) <= 0)


def _gsign(p: int, q: int) -> int:
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    sp, sq = (p > 0) - (p < 0), (q > 0) - (q < 0)
    if sp == sq:
        return sp
    n = p * p + p * q - q * q
    if sq > 0:
        return 1 if n < 0 else -1
    return 1 if n > 0 else -1


def enumerate_in_box(bound: GoldenNum | int) -> list[TreeNode]:
    """All tree nodes with both coordinates <= bound, by pruned DFS.

    Coordinates are monotone non-decreasing along tree edges, so a branch is
    abandoned as soon as either coordinate of a node exceeds the bound.
    """
    if not isinstance(bound, GoldenNum):
        bound = GoldenNum(bound)
    if bound.sign() <= 0:
        raise DomainError("box bound must be positive")
    if not (bound.p.denominator == 1 and bound.q.denominator == 1):
        raise DomainError("box bound must lie in Z[phi]")
    np_, nq = int(bound.p), int(bound.q)

    out: list[TreeNode] = []
    if not _fits(ROOT_ABCD, np_, nq):
        return out
    out.append(TreeNode("", ROOT_ABCD))
    stack: list[tuple[str, tuple[int, int, int, int]]] = []
    for i in (3, 2, 1):
        child = apply_sigma_abcd(i, ROOT_ABCD)
        if _fits(child, np_, nq):
            stack.append((str(i), child))
    while stack:
        word, t = stack.pop()
        out.append(TreeNode(word, t))
        for i in (3, 2, 1, 0):
            child = apply_sigma_abcd(i, t)
            if _fits(child, np_, nq):
                stack.append((word + str(i), child))
    out.sort(key=lambda n: n.word)
    return out
