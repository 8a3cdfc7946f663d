# app/services/structure.py

from __future__ import annotations

from dataclasses import dataclass

from app.services.graph import Graph, VertexSet, iter_bits, lowest_bit


def reach(g: Graph, start: int, allowed: int) -> int:
    """Mask of vertices reachable from start inside the allowed mask (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components as vertex masks, ordered by lowest vertex."""
    left = g.vertex_mask if within is None else within
    out = []
    while left:
        comp = reach(g, lowest_bit(left), left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return reach(g, 0, g.vertex_mask) == g.vertex_mask


def is_2connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex (K_2 is not 2-connected)."""
    if g.n < 3 or not is_connected(g):
        return False
    full = g.vertex_mask
    for v in range(g.n):
        rest = full & ~(1 << v)
        if reach(g, lowest_bit(rest), rest) != rest:
            return False
    return True


# ---------------------------
# Blocks
# ---------------------------

@dataclass(frozen=True)
class BlockCutTree:
    """
    blocks: vertex masks of the blocks (maximal 2-connected subgraphs and bridges);
            isolated vertices carry no edge and are not listed.
    cut_vertices: mask of cut vertices.
    tree_edges: (block index, cut vertex) incidences.
    """

    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet
    tree_edges: tuple[tuple[int, int], ...]

    def block_edge_counts(self, g: Graph) -> list[int]:
        return [sum((g.adj[v] & b.bits).bit_count() for v in b) // 2 for b in self.blocks]


def _biconnected(g: Graph) -> tuple[list[int], int]:
    """Hopcroft-Tarjan lowpoint DFS. Returns (block masks, cut-vertex mask)."""
    depth = [-1] * g.n
    low = [0] * g.n
    blocks: list[int] = []
    cuts = 0
    edge_stack: list[tuple[int, int]] = []

    for root in range(g.n):
        if depth[root] != -1:
            continue
        depth[root] = 0
        root_children = 0
        # Iterative DFS; each frame is (vertex, parent, remaining neighbour mask).
        stack = [(root, -1, g.adj[root])]
        while stack:
            v, parent, todo = stack[-1]
            if todo:
                u = lowest_bit(todo)
                stack[-1] = (v, parent, todo & (todo - 1))
                if depth[u] == -1:
                    depth[u] = depth[v] + 1
                    low[u] = depth[u]
                    edge_stack.append((v, u))
                    if v == root:
                        root_children += 1
                    stack.append((u, v, g.adj[u]))
                elif u != parent and depth[u] < depth[v]:
                    low[v] = min(low[v], depth[u])
                    edge_stack.append((v, u))
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= depth[parent]:
                # parent separates v's subtree: pop one block.
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= 1 << a | 1 << b
                    if (a, b) == (parent, v):
                        break
                blocks.append(block)
                if parent != root:
                    cuts |= 1 << parent
        if root_children > 1:
            cuts |= 1 << root
    return blocks, cuts


def cut_vertices(g: Graph) -> VertexSet:
    return VertexSet(_biconnected(g)[1])


def block_cut_tree(g: Graph) -> BlockCutTree:
    blocks, cuts = _biconnected(g)
    blocks.sort(key=lambda b: (lowest_bit(b), b))
    tree_edges = [
        (i, c)
        for i, b in enumerate(blocks)
        for c in iter_bits(b & cuts)
    ]
    return BlockCutTree(
        blocks=tuple(VertexSet(b) for b in blocks),
        cut_vertices=VertexSet(cuts),
        tree_edges=tuple(tree_edges),
    )
