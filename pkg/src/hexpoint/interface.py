"""Corner graph between oppositely colored faces, and its decomposition.

Every tile of a fully colored board is a hexagon; the four strips of the
plane outside the board count as faces too, colored like the player that
owns that edge (W/E belong to H, N/S belong to V).  The interface graph
keeps exactly the tile sides whose two faces carry different colors, plus
the four stub edges at the board corners, each ending in a boundary node
of degree one.  Every other node then has degree 0 or 2, so the whole
graph splits into isolated vertices, simple paths and simple cycles, and
the two paths that start at boundary nodes encode the winner.

Geometry is exact: tile (z1, z2) gets corner c (0..5, counterclockwise
from the upper-right corner) at integer coordinates

    (2*z1 - z2 + DU[c], 3*z2 + DV[c])

in a sheared basis (actual plane position is x = u*sqrt(3)/2, y = v/2).
Adjacent tiles compute identical integers for shared corners, so no
floating point or equivalence bookkeeping is needed.
"""

from dataclasses import dataclass, field

from .board import Board, Coord
from .errors import BoardNotFull, DegreeTooHigh

Node = tuple
Edge = tuple  # canonical: tuple(sorted((a, b)))

#: corner offsets in the sheared integer basis, index 0..5
_CORNER = ((1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1))
#: side a of a tile faces the neighbour in direction _DIR[a]
_DIR = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))

_REGION_COLOR = {"W": "H", "E": "H", "N": "V", "S": "V"}

#: boundary-node rendering offsets, pointing away from the board
_U_OFFSET = {"NW": (-2, 2), "NE": (1, 3), "SE": (2, -2), "SW": (-1, -3)}


def corner_node(z: Coord, c: int) -> Node:
    u = 2 * z[0] - z[1] + _CORNER[c][0]
    v = 3 * z[1] + _CORNER[c][1]
    return ("c", u, v)


def _region_for(z: Coord, k: int, a: int) -> str:
    """Outside region met by side a of boundary tile z.

    Sides 0/2/3/5 face E/N/W/S directly.  The two diagonal sides are shared
    claims at the acute board corners; we hand them to the vertical player's
    region (side 1 of a tile on the N edge belongs to N, side 4 of a tile on
    the S edge belongs to S), which fixes where the corner stubs attach.
    """
    if a == 0:
        return "E"
    if a == 3:
        return "W"
    if a == 2:
        return "N"
    if a == 5:
        return "S"
    if a == 1:
        return "N" if z[1] == k else "E"
    return "S" if z[1] == 1 else "W"


@dataclass(frozen=True)
class InterfaceGraph:
    """Nodes, canonical edges, and positions for rendering.

    `u_nodes` maps the four compass corners to their boundary nodes; those
    are the only odd-degree nodes a full board can produce.
    """

    nodes: frozenset
    edges: frozenset
    positions: dict = field(default_factory=dict, compare=False)
    u_nodes: dict = field(default_factory=dict, compare=False)

    def degree(self, node: Node) -> int:
        return sum(1 for e in self.edges if node in e)

    def adjacency(self) -> dict:
        adj = {n: [] for n in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def interface_graph(board: Board) -> InterfaceGraph:
    """Build the bichromatic-face graph of a fully colored board."""
    if not board.is_full():
        raise BoardNotFull("interface graph requires a fully colored board")
    k = board.k
    nodes = set()
    edges = set()
    positions = {}

    for z2 in range(1, k + 1):
        for z1 in range(1, k + 1):
            z = (z1, z2)
            mine = board.cell(z)
            corners = [corner_node(z, c) for c in range(6)]
            for c, node in enumerate(corners):
                nodes.add(node)
                positions[node] = (node[1], node[2])
            for a in range(6):
                nb = (z1 + _DIR[a][0], z2 + _DIR[a][1])
                if board.in_bounds(nb):
                    if a > 2:
                        continue  # interior edges emitted from the other side
                    other = board.cell(nb)
                else:
                    other = _REGION_COLOR[_region_for(z, k, a)]
                if mine != other:
                    e = tuple(sorted((corners[a - 1], corners[a])))
                    edges.add(e)

    # corner stubs: each sits between one H region and one V region, so it
    # is always part of the graph and pins its boundary node at degree one
    anchors = {
        "NW": corner_node((1, k), 2),
        "NE": corner_node((k, k), 0),
        "SE": corner_node((k, 1), 5),
        "SW": corner_node((1, 1), 3),
    }
    u_nodes = {}
    for name, anchor in anchors.items():
        u = ("u", name)
        u_nodes[name] = u
        nodes.add(u)
        au, av = positions[anchor]
        du, dv = _U_OFFSET[name]
        positions[u] = (au + du, av + dv)
        edges.add(tuple(sorted((u, anchor))))

    return InterfaceGraph(frozenset(nodes), frozenset(edges), positions, u_nodes)


@dataclass(frozen=True)
class Decomposition:
    """Partition of a degree-<=2 graph into isolated nodes, paths, cycles."""

    isolated: frozenset
    paths: tuple  # tuples of nodes, endpoints first/last
    cycles: tuple  # tuples of nodes, first node repeated implicitly

    def edge_set(self) -> frozenset:
        out = set()
        for p in self.paths:
            out.update(tuple(sorted((p[i], p[i + 1]))) for i in range(len(p) - 1))
        for cyc in self.cycles:
            out.update(
                tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)])))
                for i in range(len(cyc))
            )
        return frozenset(out)


def decompose(nodes, edges) -> Decomposition:
    """Split a graph with max degree 2 into isolated vertices, simple paths
    and simple cycles.  Deterministic: traversals start at minimal nodes."""
    nodes = set(nodes)
    adj = {n: [] for n in nodes}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for n, nbrs in adj.items():
        if len(nbrs) > 2:
            raise DegreeTooHigh(f"node {n} has degree {len(nbrs)}")

    isolated = frozenset(n for n, nbrs in adj.items() if not nbrs)
    seen = set(isolated)
    paths = []
    endpoints = sorted(n for n, nbrs in adj.items() if len(nbrs) == 1)
    for start in endpoints:
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        cur = start
        while True:
            nxt = [n for n in adj[cur] if n not in seen]
            if not nxt:
                break
            cur = min(nxt)
            walk.append(cur)
            seen.add(cur)
        paths.append(tuple(walk))

    cycles = []
    for start in sorted(n for n in nodes if n not in seen):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        cur = min(adj[start])
        while cur != start:
            walk.append(cur)
            seen.add(cur)
            nxt = [n for n in adj[cur] if n not in seen]
            cur = nxt[0] if nxt else start
        cycles.append(tuple(walk))

    return Decomposition(isolated, tuple(paths), tuple(cycles))


def u_paths(g: InterfaceGraph) -> list[tuple[str, str, tuple]]:
    """The paths whose endpoints are boundary nodes, as
    (corner name, corner name, node sequence) triples."""
    dec = decompose(g.nodes, g.edges)
    by_node = {u: name for name, u in g.u_nodes.items()}
    out = []
    for p in dec.paths:
        a, b = p[0], p[-1]
        if a in by_node and b in by_node:
            out.append((by_node[a], by_node[b], p))
    return out


def boundary_paths(board: Board) -> list[tuple[str, str, tuple]]:
    return u_paths(interface_graph(board))


def winner_via_interface(board: Board) -> str:
    """Read the winner off the boundary-node pairing of the interface paths.

    The NW node pairs with NE exactly when a horizontal chain spans the
    board (and then SW pairs with SE); it pairs with SW when a vertical
    chain does.  A NW-SE pairing would force two disjoint paths to cross,
    so it cannot occur.
    """
    pairs = {frozenset((a, b)) for a, b, _ in boundary_paths(board)}
    if len(pairs) != 2:
        raise AssertionError(f"expected two boundary paths, got {pairs}")
    if frozenset(("NW", "NE")) in pairs:
        return "H"
    if frozenset(("NW", "SW")) in pairs:
        return "V"
    raise AssertionError(f"impossible boundary pairing {pairs}")
