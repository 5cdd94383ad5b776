"""Isomorph-free generation of free trees as canonical level sequences.

A tree is stored by the level sequence of its canonical rooting: depths in
preorder with child subtrees in non-increasing lexicographic order, rooted at
the center (for bicentral trees, at the center whose side is larger). These
sequences are the "codes" used as checkpoint cursors. Both generators below
emit codes in strictly decreasing lexicographic order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Graph

MAX_FULL_ENUMERATION_N = 40

Code = tuple[int, ...]


def code_to_graph(code: Sequence[int]) -> Graph:
    stack: list[int] = []
    edges = []
    for i, depth in enumerate(code):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(code), edges)


def _split(code: Sequence[int]) -> tuple[list[int], list[int]]:
    """(first subtree of the root shifted to depth 0, tree with that subtree removed)."""
    m = len(code)
    for i in range(2, len(code)):
        if code[i] == 1:
            m = i
            break
    left = [x - 1 for x in code[1:m]]
    rest = [0] + list(code[m:])
    return left, rest


def is_free_canonical(code: Sequence[int]) -> bool:
    """Whether a canonical rooted sequence is the chosen representative of its free tree."""
    if len(code) <= 2:
        return True
    left, rest = _split(code)
    hl, hr = max(left), max(rest)
    if hr != hl:
        return hr > hl
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _next_rooted(code: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence (decreasing order)."""
    if p is None:
        p = len(code) - 1
        while code[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while code[q] != code[p] - 1:
        q -= 1
    out = list(code)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _advance_to_valid(code: list[int]) -> list[int]:
    """Return ``code`` if it is a free-tree representative, else jump to the next candidate."""
    left, _ = _split(code)
    if is_free_canonical(code):
        return code
    p = len(left)
    nxt = _next_rooted(code, p)
    if code[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def _path_code(n: int) -> list[int]:
    return list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))


def free_tree_codes(n: int, start_after: Code | None = None) -> Iterator[Code]:
    """Codes of all free trees on n vertices, each isomorphism class once.

    With ``start_after`` the stream resumes immediately after that code.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_FULL_ENUMERATION_N:
        raise ValueError(f"full enumeration capped at n = {MAX_FULL_ENUMERATION_N}")
    if n <= 2:
        if start_after is None:
            yield tuple(range(n))
        return
    if start_after is None:
        code: list[int] | None = _path_code(n)
    else:
        if len(start_after) != n:
            raise ValueError("resume code has the wrong length")
        code = _next_rooted(list(start_after))
    while code is not None:
        code = _advance_to_valid(code)
        yield tuple(code)
        code = _next_rooted(code)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    for code in free_tree_codes(n):
        yield code_to_graph(code)


def _canonical_rooted(g: Graph, root: int, parent: int) -> list[int]:
    # iterative postorder so deep paths do not hit the recursion limit
    seqs: dict[int, list[int]] = {}
    order = []
    stack = [(root, parent)]
    parents = {}
    while stack:
        v, p = stack.pop()
        parents[v] = p
        order.append(v)
        for w in g.adjacency[v]:
            if w != p:
                stack.append((w, v))
    for v in reversed(order):
        kids = sorted((seqs.pop(w) for w in g.adjacency[v] if w != parents[v]), reverse=True)
        seq = [0]
        for k in kids:
            seq.extend(x + 1 for x in k)
        seqs[v] = seq
    return seqs[root]


def tree_centers(g: Graph) -> list[int]:
    if g.n <= 2:
        return list(range(g.n))
    deg = g.degrees()
    layer = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def tree_code(g: Graph) -> Code:
    """Canonical code of a tree; equal codes iff isomorphic trees."""
    if not g.is_tree():
        raise ValueError("tree_code needs a tree")
    centers = tree_centers(g)
    if len(centers) == 1:
        return tuple(_canonical_rooted(g, centers[0], -1))
    for c in centers:
        code = _canonical_rooted(g, c, -1)
        if is_free_canonical(code):
            return tuple(code)
    raise AssertionError("neither center rooting is canonical")


def in_family(g: Graph, d: int) -> bool:
    """Tree whose non-leaf vertices all have degree >= d (K_1 has none, so it qualifies)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if not g.is_tree():
        raise ValueError("in_family needs a tree")
    return all(k <= 1 or k >= d for k in g.degrees())


def code_in_family(code: Sequence[int], d: int) -> bool:
    """in_family evaluated directly on a level sequence."""
    n = len(code)
    children = [0] * n
    stack: list[int] = []
    for i, depth in enumerate(code):
        del stack[depth:]
        if stack:
            children[stack[-1]] += 1
        stack.append(i)
    for i in range(n):
        deg = children[i] + (1 if i else 0)
        if 1 < deg < d:
            return False
    return True


def nonleaf_count(code: Sequence[int]) -> int:
    n = len(code)
    if n <= 2:
        return 0
    children = [0] * n
    stack: list[int] = []
    for i, depth in enumerate(code):
        del stack[depth:]
        if stack:
            children[stack[-1]] += 1
        stack.append(i)
    return sum(1 for i in range(n) if children[i] + (1 if i else 0) >= 2)


# -- generation restricted to trees with all non-leaf degrees >= d ------------

@lru_cache(maxsize=None)
def _planted(size: int, height: int, d: int) -> tuple[Code, ...]:
    """Canonical rooted trees hanging below a parent edge.

    Exactly ``size`` vertices and ``height``; every vertex has either no
    children or at least d-1 of them. Sorted in decreasing order.
    """
    if height == 0:
        return ((0,),) if size == 1 else ()
    if size < 1 + height:
        return ()
    pool = _pool(size - 1, height - 1, d)
    out = [
        _join(kids)
        for kids in _child_lists(pool, size - 1, max(1, d - 1), lead_height=height - 1, lead_count=1)
    ]
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _pool(max_size: int, max_height: int, d: int) -> tuple[Code, ...]:
    items = [
        t
        for h in range(max_height + 1)
        for s in range(1, max_size + 1)
        for t in _planted(s, h, d)
    ]
    items.sort(reverse=True)
    return tuple(items)


def _height(code: Code) -> int:
    return max(code)


def _child_lists(pool, total, min_count, lead_height, lead_count):
    """Non-increasing lists from ``pool`` summing to ``total`` vertices.

    At least ``min_count`` children; the first ``lead_count`` must have height
    ``lead_height``.
    """
    chosen: list[Code] = []

    def rec(start, remaining):
        if remaining == 0:
            if len(chosen) >= min_count:
                yield list(chosen)
            return
        for j in range(start, len(pool)):
            t = pool[j]
            if len(t) > remaining:
                continue
            if len(chosen) < lead_count and _height(t) != lead_height:
                continue
            chosen.append(t)
            yield from rec(j, remaining - len(t))
            chosen.pop()

    yield from rec(0, total)


def _join(kids: Sequence[Code]) -> Code:
    seq = [0]
    for k in kids:
        seq.extend(x + 1 for x in k)
    return tuple(seq)


def family_tree_codes_pruned(n: int, d: int) -> list[Code]:
    """All codes of trees on n vertices whose non-leaf vertices have degree >= d.

    Built from planted pieces that already satisfy the degree rule, so no
    tree with an internal vertex of degree 2..d-1 is ever constructed.
    Returned in the same decreasing order as :func:`free_tree_codes`.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if n <= 2:
        return [tuple(range(n))] if n >= 1 else []
    codes: list[Code] = []
    # unicentral: radius h, root of degree >= d with two deepest branches
    for h in range(1, n):
        if 2 * h + 1 > n:
            break
        pool = _pool(n - 1, h - 1, d)
        for kids in _child_lists(pool, n - 1, max(d, 2), lead_height=h - 1, lead_count=2):
            codes.append(_join(kids))
    # bicentral: central edge with a planted side of height h on each end
    for h in range(1, n):
        if 2 * h + 2 > n:
            break
        for sa in range(h + 1, n - h):
            sb = n - sa
            if sb > sa:
                continue
            for a in _planted(sa, h, d):
                for b in _planted(sb, h, d):
                    if sa == sb and b > a:
                        continue
                    codes.append((0,) + tuple(x + 1 for x in b) + a[1:])
    codes.sort(reverse=True)
    return codes


def family_codes(n: int, d: int, pruned: bool, start_after: Code | None = None) -> Iterator[Code]:
    """Stream of family codes; with ``pruned=False`` every free tree is yielded (filter downstream)."""
    if not pruned:
        yield from free_tree_codes(n, start_after)
        return
    for code in family_tree_codes_pruned(n, d):
        if start_after is not None and code >= tuple(start_after):
            continue
        yield code
