"""
Exact graph parameters used as weight generators
"""

import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from config.guards import GuardConfig, get_guard_config
from models import Graph, ParamKind

logger = logging.getLogger(__name__)

# parameters solved by exponential exact search
EXACT_SEARCH_PARAMS = {
    ParamKind.CLIQUE_NUMBER,
    ParamKind.INDEPENDENCE_NUMBER,
    ParamKind.CHROMATIC_NUMBER,
}


class GraphParamUtils:
    """Exact parameter computation on networkx graphs"""

    @staticmethod
    def to_networkx(graph: Graph) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(graph.n))
        g.add_edges_from(graph.edges)
        return g

    @staticmethod
    def subgraph(vertices: List[int], edges: List[Tuple[int, int]]) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(vertices)
        g.add_edges_from(edges)
        return g

    @staticmethod
    def clique_number(g: nx.Graph) -> int:
        """Size of a maximum clique (via ``nx.find_cliques``)"""
        return max((len(clique) for clique in nx.find_cliques(g)), default=0)

    @staticmethod
    def independence_number(g: nx.Graph) -> int:
        return GraphParamUtils.clique_number(nx.complement(g))

    @staticmethod
    def chromatic_number(g: nx.Graph) -> int:
        """
        Exact chromatic number by DSATUR branch and bound

        The DSATUR greedy colouring gives the initial upper bound and the
        clique number a lower bound; backtracking proves optimality.
        """
        n = g.number_of_nodes()
        if n == 0:
            return 0
        if g.number_of_edges() == 0:
            return 1

        nodes = list(g.nodes())
        adj: Dict[int, List[int]] = {v: list(g.neighbors(v)) for v in nodes}
        greedy = nx.coloring.greedy_color(g, strategy='DSATUR')
        best_k = max(greedy.values()) + 1
        lower = GraphParamUtils.clique_number(g)
        if best_k == lower:
            return best_k

        colors: Dict[int, int] = {v: -1 for v in nodes}
        neighbor_colors: Dict[int, set] = {v: set() for v in nodes}

        def choose_vertex() -> Optional[int]:
            uncolored = [v for v in nodes if colors[v] == -1]
            if not uncolored:
                return None
            # highest saturation, then highest degree
            return max(uncolored, key=lambda v: (len(neighbor_colors[v]), len(adj[v])))

        def backtrack(current_k: int):
            nonlocal best_k
            if best_k == lower:
                return
            v = choose_vertex()
            if v is None:
                best_k = min(best_k, current_k)
                return
            for c in range(current_k + 1):
                if c in neighbor_colors[v]:
                    continue
                new_k = max(current_k, c + 1)
                if new_k >= best_k:
                    continue
                colors[v] = c
                changed = []
                for u in adj[v]:
                    if colors[u] == -1 and c not in neighbor_colors[u]:
                        neighbor_colors[u].add(c)
                        changed.append(u)
                backtrack(new_k)
                colors[v] = -1
                for u in changed:
                    neighbor_colors[u].discard(c)

        backtrack(0)
        return best_k

    @staticmethod
    def parameter(g: nx.Graph, param: ParamKind, guards: Optional[GuardConfig] = None) -> int:
        """Exact value of ``param`` on a networkx graph"""
        param = ParamKind(param)
        if param in EXACT_SEARCH_PARAMS:
            (guards or get_guard_config()).check('params', g.number_of_nodes())

        if param == ParamKind.MAX_DEGREE:
            return max((degree for _, degree in g.degree()), default=0)
        if param == ParamKind.CLIQUE_NUMBER:
            return GraphParamUtils.clique_number(g)
        if param == ParamKind.INDEPENDENCE_NUMBER:
            return GraphParamUtils.independence_number(g)
        if param == ParamKind.CHROMATIC_NUMBER:
            return GraphParamUtils.chromatic_number(g)
        if param == ParamKind.COMPONENT_COUNT:
            return nx.number_connected_components(g) if g.number_of_nodes() else 0
        if param == ParamKind.ORDER:
            return g.number_of_nodes()
        return g.number_of_edges()

    @staticmethod
    def graph_parameter(graph: Graph, param: ParamKind, guards: Optional[GuardConfig] = None) -> int:
        """Exact value of ``param`` on a whole graph"""
        value = GraphParamUtils.parameter(GraphParamUtils.to_networkx(graph), param, guards)
        logger.debug(f"[GraphParams] {ParamKind(param).value} = {value} on n={graph.n}")
        return value
