"""Finitely generated subgroups of free groups as folded Stallings graphs.

Words use signed 1-based generator indices: ``2`` is the second generator,
``-2`` its inverse.  In text, ``a..z`` are generators and ``A..Z`` their
inverses, so ``"abA"`` is ``[1, 2, -1]``.
"""

from __future__ import annotations

import math
import string
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels
from .errors import InputError, ResourceError, UnsupportedInput

INFINITE = math.inf

DEFAULT_MAX_RANK = 4
DEFAULT_MAX_INDEX = 7

# fault injection hook for the verification harness; never set in normal use
_SKIP_FOLDING = False


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word in the free group of rank ``n``."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"free rank must be positive, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.n:
                raise InputError(f"letter {x} out of range for rank {self.n}")
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def _trusted(cls, letters: tuple[int, ...], n: int) -> "Word":
        # letters already reduced and in range
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "n", n)
        return w

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        """Parse ``a..z`` / ``A..Z`` notation; ``1`` or empty is the identity."""
        text = text.strip()
        if text in ("", "1", "e"):
            return cls((), n)
        letters = []
        for pos, ch in enumerate(text):
            if ch in string.ascii_lowercase:
                letters.append(ord(ch) - ord("a") + 1)
            elif ch in string.ascii_uppercase:
                letters.append(-(ord(ch) - ord("A") + 1))
            elif ch.isspace():
                continue
            else:
                raise InputError(f"bad character {ch!r} at column {pos + 1} in {text!r}")
        return cls(tuple(letters), n)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(
            chr(ord("a") + x - 1) if x > 0 else chr(ord("A") - x - 1) for x in self.letters
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise InputError("words live in free groups of different rank")
        return Word(self.letters + other.letters, self.n)

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)), self.n)


def _as_word(w, n: int) -> Word:
    if isinstance(w, Word):
        if w.n != n:
            raise InputError(f"word {w} has rank {w.n}, expected {n}")
        return w
    if isinstance(w, str):
        return Word.parse(w, n)
    return Word(tuple(w), n)


@dataclass(frozen=True)
class SubgroupGraph:
    """Folded, based core graph of a subgroup of the free group of rank ``n``.

    Vertex 0 is the base.  ``out[v][i]`` is the target of the edge labelled
    ``i + 1`` leaving ``v``, or -1.  Vertices are numbered canonically
    (breadth-first from the base), so two graphs are equal as objects exactly
    when they represent the same subgroup.
    """

    n: int
    out: tuple[tuple[int, ...], ...]
    inn: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        V = len(self.out)
        inn = [[-1] * self.n for _ in range(V)]
        for v, row in enumerate(self.out):
            if len(row) != self.n:
                raise InputError("transition row has wrong length")
            for i, w in enumerate(row):
                if w == -1:
                    continue
                if not 0 <= w < V:
                    raise InputError(f"edge target {w} out of range")
                if inn[w][i] != -1:
                    raise InputError(f"vertex {w} has two incoming edges labelled {i + 1}")
                inn[w][i] = v
        object.__setattr__(self, "inn", tuple(tuple(r) for r in inn))

    @classmethod
    def _from_flat(cls, n: int, V: int, flat: Sequence[int]) -> "SubgroupGraph":
        return cls(n, tuple(tuple(flat[v * n:(v + 1) * n]) for v in range(V)))

    @classmethod
    def from_permutations(cls, perms: Sequence[Sequence[int]]) -> "SubgroupGraph":
        """Graph of the stabilizer of point 0 under a transitive action in which
        generator ``i + 1`` acts as ``perms[i]``.  Renumbered canonically."""
        n = len(perms)
        m = len(perms[0]) if perms else 1
        if any(sorted(p) != list(range(m)) for p in perms):
            raise InputError("each action must be a permutation of the same points")
        orbit = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for p in perms:
                if p[v] not in orbit:
                    orbit.add(p[v])
                    stack.append(p[v])
        if len(orbit) != m:
            raise InputError("permutation action is not transitive")
        words = _spanning_words(n, [tuple(p[v] for p in perms) for v in range(m)])
        V, flat = _kernels.fold(n, words)
        return cls._from_flat(n, V, flat)

    @property
    def num_vertices(self) -> int:
        return len(self.out)

    @property
    def num_edges(self) -> int:
        return sum(1 for row in self.out for w in row if w != -1)

    def edges(self) -> list[tuple[int, int, int]]:
        """``(source, label, target)`` triples with 1-based labels."""
        return [(v, i + 1, w) for v, row in enumerate(self.out) for i, w in enumerate(row) if w != -1]

    def trace(self, w: Word | str | Sequence[int], start: int = 0) -> int | None:
        """Endpoint of the path spelled by ``w`` from ``start``, or None."""
        w = _as_word(w, self.n)
        v = start
        for x in w.letters:
            v = self.out[v][x - 1] if x > 0 else self.inn[v][-x - 1]
            if v == -1:
                return None
        return v

    def to_dict(self) -> dict:
        return {
            "rank_ambient": self.n,
            "vertices": self.num_vertices,
            "base": 0,
            "edges": [list(e) for e in self.edges()],
            "index": None if index(self) == INFINITE else index(self),
            "rank": rank(self),
        }

    def to_text(self) -> str:
        lines = [f"vertices: {self.num_vertices} (base 0)", "edges:"]
        for v, lab, w in self.edges():
            lines.append(f"  {v} --{chr(ord('a') + lab - 1)}--> {w}")
        return "\n".join(lines)

    def to_dot(self) -> str:
        lines = ["digraph subgroup {", "  0 [shape=doublecircle];"]
        for v, lab, w in self.edges():
            lines.append(f'  {v} -> {w} [label="{chr(ord("a") + lab - 1)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _spanning_words(n: int, out: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    # one loop word per non-tree edge of a breadth-first spanning tree
    V = len(out)
    inn = [[-1] * n for _ in range(V)]
    for v in range(V):
        for i in range(n):
            if out[v][i] != -1:
                inn[out[v][i]][i] = v
    path: dict[int, tuple[int, ...]] = {0: ()}
    tree: set[tuple[int, int]] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = out[v][i]
            if w != -1 and w not in path:
                path[w] = path[v] + (i + 1,)
                tree.add((v, i))
                queue.append(w)
            u = inn[v][i]
            if u != -1 and u not in path:
                path[u] = path[v] + (-(i + 1),)
                tree.add((u, i))
                queue.append(u)
    words = []
    for v in range(V):
        for i in range(n):
            w = out[v][i]
            if w == -1 or (v, i) in tree:
                continue
            back = tuple(-x for x in reversed(path[w]))
            words.append(_reduce(path[v] + (i + 1,) + back))
    return words


def from_generators(n: int, gens: Iterable[Word | str | Sequence[int]]) -> SubgroupGraph:
    """Folded core graph of the subgroup of F_n generated by ``gens``."""
    if n < 1:
        raise InputError(f"free rank must be positive, got {n}")
    words = [_as_word(w, n).letters for w in gens]
    V, flat = _kernels.fold(n, words, not _SKIP_FOLDING)
    return SubgroupGraph._from_flat(n, V, flat)


def contains(g: SubgroupGraph, w: Word | str | Sequence[int]) -> bool:
    return g.trace(w) == 0


def index(g: SubgroupGraph) -> int | float:
    """Number of vertices for a covering of the bouquet, ``INFINITE`` otherwise."""
    for row in g.out:
        if -1 in row:
            return INFINITE
    for row in g.inn:
        if -1 in row:
            return INFINITE
    return g.num_vertices


def rank(g: SubgroupGraph) -> int:
    """First Betti number E - V + 1."""
    return g.num_edges - g.num_vertices + 1


def spanning_words(g: SubgroupGraph) -> list[Word]:
    """Free basis read off a breadth-first spanning tree; works for any core graph."""
    return [Word._trusted(w, g.n) for w in _spanning_words(g.n, g.out)]


def schreier_generators(g: SubgroupGraph) -> list[Word]:
    """Schreier free basis of a finite-index subgroup: one word per non-tree edge."""
    if index(g) == INFINITE:
        raise UnsupportedInput("Schreier generators are only produced for finite-index subgroups")
    return spanning_words(g)


def enumerate_subgroups(
    n: int, m: int, max_rank: int = DEFAULT_MAX_RANK, max_index: int = DEFAULT_MAX_INDEX
) -> list[SubgroupGraph]:
    """Every index-``m`` subgroup of F_n, each exactly once.

    Runs over n-tuples of permutations of m points; keeps the transitive ones
    whose breadth-first numbering from point 0 is already canonical, so each
    point-0 stabilizer is produced once.
    """
    if n < 1 or m < 1:
        raise InputError("rank and index must be positive")
    if n > max_rank or m > max_index:
        raise ResourceError(f"enumeration of index {m} in rank {n} exceeds caps (rank <= {max_rank}, index <= {max_index})")
    seen = set()
    result = []
    for perms in _kernels.canonical_tuples(n, m):
        out = tuple(tuple(perms[i][v] for i in range(n)) for v in range(m))
        g = SubgroupGraph(n, out)
        if g in seen:
            continue
        seen.add(g)
        result.append(g)
    return result


def permutation_action(g: SubgroupGraph) -> list[tuple[int, ...]]:
    """The coset action of a finite-index subgroup: generator ``i + 1`` acts
    on vertices as ``result[i]``."""
    if index(g) == INFINITE:
        raise UnsupportedInput("infinite index subgroup has no finite coset action")
    return [tuple(g.out[v][i] for v in range(g.num_vertices)) for i in range(g.n)]
