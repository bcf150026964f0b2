"""
Subgraph families as indexed posets: containment, join and chain enumeration
"""

import hashlib
import logging
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from config.guards import GuardConfig, get_guard_config
from models import ExplicitFamilySpec, FamilyKind, Graph
from models.errors import InputError, JoinUndefinedError, PosetAxiomError

logger = logging.getLogger(__name__)


class Family:
    """Immutable family of non-empty subgraph elements.

    Bit-set kinds (vertex-induced, edge-subsets) hold every non-empty subset of
    ``width`` ground bits; element id = mask - 1, which is the ascending
    bit-pattern order. Explicit families hold a closed containment matrix.
    """

    def __init__(self, kind: FamilyKind, width: int, labels: List[str],
                 graph: Optional[Graph] = None, leq_matrix: Optional[np.ndarray] = None,
                 top: Optional[int] = None):
        self.kind = kind
        self.width = width
        self.graph = graph
        self._labels = labels
        self._index: Dict[str, int] = {label: i for i, label in enumerate(labels)}
        self._leq = leq_matrix
        self._join_table: Optional[np.ndarray] = None
        self._covers: Optional[List[List[int]]] = None
        if leq_matrix is not None:
            leq_matrix.setflags(write=False)
        self.top = top
        self.key = self._fingerprint()

    # ------------------------------------------------------------------
    # identity
    # ------------------------------------------------------------------
    def _fingerprint(self) -> str:
        digest = hashlib.sha1()
        digest.update(f"{self.kind.value}|{self.width}|{self.size}".encode())
        if self.kind == FamilyKind.EDGE_SUBSETS and self.graph is not None:
            digest.update(repr(self.graph.edges).encode())
        if self.kind == FamilyKind.EXPLICIT:
            digest.update("\x1f".join(self._labels).encode())
            digest.update(np.packbits(self._leq).tobytes())
        return f"{self.kind.value}:{digest.hexdigest()[:16]}"

    @property
    def is_bitset(self) -> bool:
        return self.kind != FamilyKind.EXPLICIT

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.width) - 1

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Family(kind={self.kind.value}, width={self.width}, size={self.size})"

    # ------------------------------------------------------------------
    # element access
    # ------------------------------------------------------------------
    def check_id(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.size:
            raise InputError(f"element id {a!r} is outside 0..{self.size - 1}")
        return int(a)

    def mask(self, a: int) -> int:
        return self.check_id(a) + 1

    def id_of_mask(self, mask: int) -> int:
        if not 0 < mask <= self.full_mask:
            raise InputError(f"mask {mask} is not a family element")
        return mask - 1

    def label(self, a: int) -> str:
        return self._labels[self.check_id(a)]

    @property
    def labels(self) -> List[str]:
        return list(self._labels)

    def lookup(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"'{label}' is not an element of the {self.kind.value} family")

    def vertices(self, a: int) -> List[int]:
        """Vertices of the subgraph represented by element ``a``"""
        mask = self.mask(a) if self.is_bitset else None
        if self.kind == FamilyKind.VERTEX_INDUCED:
            return [v for v in range(self.width) if mask >> v & 1]
        if self.kind == FamilyKind.EDGE_SUBSETS:
            ends = set()
            for e in range(self.width):
                if mask >> e & 1:
                    ends.update(self.graph.edges[e])
            return sorted(ends)
        raise InputError("explicit families have no underlying subgraph")

    def edges(self, a: int) -> List[Tuple[int, int]]:
        """Edges of the subgraph represented by element ``a``"""
        if self.kind == FamilyKind.VERTEX_INDUCED:
            chosen = set(self.vertices(a))
            return [(u, v) for u, v in self.graph.edges if u in chosen and v in chosen]
        if self.kind == FamilyKind.EDGE_SUBSETS:
            mask = self.mask(a)
            return [self.graph.edges[e] for e in range(self.width) if mask >> e & 1]
        raise InputError("explicit families have no underlying subgraph")

    # ------------------------------------------------------------------
    # order structure
    # ------------------------------------------------------------------
    def leq(self, a: int, b: int) -> bool:
        a, b = self.check_id(a), self.check_id(b)
        if self.is_bitset:
            ma, mb = a + 1, b + 1
            return ma & mb == ma
        return bool(self._leq[a, b])

    def join(self, a: int, b: int) -> int:
        a, b = self.check_id(a), self.check_id(b)
        if self.is_bitset:
            return ((a + 1) | (b + 1)) - 1
        joined = int(self.join_table()[a, b])
        if joined < 0:
            raise JoinUndefinedError(a, b)
        return joined

    def leq_matrix(self) -> np.ndarray:
        """Dense containment matrix; only materialised for explicit families"""
        if self._leq is None:
            raise InputError("dense containment matrix is only kept for explicit families")
        return self._leq

    def join_table(self) -> np.ndarray:
        """Least upper bounds of every pair, -1 where none exists (explicit only)"""
        if self._join_table is None:
            leq = self.leq_matrix()
            m = self.size
            table = np.full((m, m), -1, dtype=np.int64)
            for a in range(m):
                for b in range(a, m):
                    upper = np.flatnonzero(leq[a] & leq[b])
                    for u in upper:
                        if leq[u, upper].all():
                            table[a, b] = table[b, a] = u
                            break
            table.setflags(write=False)
            self._join_table = table
        return self._join_table

    def is_join_closed(self) -> bool:
        return self.is_bitset or bool((self.join_table() >= 0).all())

    def upper_covers(self, a: int) -> List[int]:
        a = self.check_id(a)
        if self.is_bitset:
            mask = a + 1
            return [(mask | 1 << bit) - 1 for bit in range(self.width) if not mask >> bit & 1]
        if self._covers is None:
            strict = self._leq & ~np.eye(self.size, dtype=bool)
            through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
            cover = strict & ~through
            self._covers = [np.flatnonzero(row).tolist() for row in cover]
        return list(self._covers[a])

    def minimal_elements(self) -> List[int]:
        if self.is_bitset:
            return [(1 << bit) - 1 for bit in range(self.width)]
        below = self._leq.sum(axis=0)
        return np.flatnonzero(below == 1).tolist()


class LatticeUtils:
    """Construction and enumeration over subgraph families"""

    @staticmethod
    def build_family(graph: Optional[Graph], kind: FamilyKind,
                     explicit: Optional[ExplicitFamilySpec] = None,
                     guards: Optional[GuardConfig] = None) -> Family:
        """
        Materialise the family of non-empty subgraphs of ``graph``

        Args:
            graph: Underlying graph (optional for explicit families)
            kind: Family kind
            explicit: Element list and generating relation for explicit families
            guards: Size guards (defaults from the environment)

        Returns:
            Family with elements in ascending bit-pattern order
        """
        guards = guards or get_guard_config()
        kind = FamilyKind(kind)

        if kind == FamilyKind.VERTEX_INDUCED:
            guards.check('family', graph.n)
            width = graph.n
            labels = [LatticeUtils._bits_label(mask) for mask in range(1, 1 << width)]
            family = Family(kind, width, labels, graph=graph, top=(1 << width) - 2)

        elif kind == FamilyKind.EDGE_SUBSETS:
            if graph.edge_count == 0:
                raise InputError("edge-subsets family of an edgeless graph is empty")
            guards.check('family', graph.edge_count)
            width = graph.edge_count
            labels = [LatticeUtils._bits_label(mask) for mask in range(1, 1 << width)]
            family = Family(kind, width, labels, graph=graph, top=(1 << width) - 2)

        else:
            if explicit is None:
                raise InputError("explicit family requires an element list and containment relation")
            guards.check('family', len(explicit.elements).bit_length())
            leq = LatticeUtils._close_relation(len(explicit.elements), explicit.leq)
            top = explicit.top
            if top is not None and not leq[:, top].all():
                raise InputError(f"declared top '{explicit.elements[top]}' does not contain every element")
            family = Family(kind, len(explicit.elements).bit_length(), list(explicit.elements),
                            graph=graph, leq_matrix=leq, top=top)

        logger.info(f"[Lattice] Built {family!r}")
        return family

    @staticmethod
    def _bits_label(mask: int) -> str:
        return ",".join(str(bit) for bit in range(mask.bit_length()) if mask >> bit & 1)

    @staticmethod
    def _close_relation(m: int, pairs: List[Tuple[int, int]]) -> np.ndarray:
        """Reflexive-transitive closure of ``pairs``; rejects cycles"""
        leq = np.eye(m, dtype=bool)
        for i, j in pairs:
            leq[i, j] = True
        for k in range(m):
            leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
        both = leq & leq.T & ~np.eye(m, dtype=bool)
        if both.any():
            i, j = (int(x) for x in np.argwhere(both)[0])
            raise PosetAxiomError(f"relation is not antisymmetric: elements {i} and {j} contain each other")
        return leq

    @staticmethod
    def leq(family: Family, a: int, b: int) -> bool:
        return family.leq(a, b)

    @staticmethod
    def join(family: Family, a: int, b: int) -> int:
        return family.join(a, b)

    @staticmethod
    def strict_supersets(family: Family, a: int) -> Iterator[int]:
        """Ids strictly above ``a``, ascending"""
        if family.is_bitset:
            mask = family.mask(a)
            free = family.full_mask ^ mask
            sub = 0
            while True:
                sub = (sub - free) & free
                if sub == 0:
                    return
                yield (mask | sub) - 1
        else:
            row = family.leq_matrix()[family.check_id(a)]
            for b in np.flatnonzero(row):
                if b != a:
                    yield int(b)

    @staticmethod
    def strict_pairs(family: Family, guards: Optional[GuardConfig] = None) -> Iterator[Tuple[int, int]]:
        """Every (a, b) with a strictly below b, ordered by a then b"""
        (guards or get_guard_config()).check('pairs', family.width)
        for a in range(family.size):
            for b in LatticeUtils.strict_supersets(family, a):
                yield a, b

    @staticmethod
    def strict_triples(family: Family, guards: Optional[GuardConfig] = None) -> Iterator[Tuple[int, int, int]]:
        """Every strict 3-chain (a, b, c), ordered lexicographically"""
        (guards or get_guard_config()).check('triples', family.width)
        for a in range(family.size):
            for b in LatticeUtils.strict_supersets(family, a):
                for c in LatticeUtils.strict_supersets(family, b):
                    yield a, b, c

    @staticmethod
    def maximal_chains(family: Family, guards: Optional[GuardConfig] = None) -> List[List[int]]:
        """All saturated chains from a minimal to a maximal element"""
        (guards or get_guard_config()).check('chains', family.width)
        chains: List[List[int]] = []

        def extend(chain: List[int]):
            covers = family.upper_covers(chain[-1])
            if not covers:
                chains.append(list(chain))
                return
            for nxt in covers:
                chain.append(nxt)
                extend(chain)
                chain.pop()

        for start in family.minimal_elements():
            extend([start])
        logger.info(f"[Lattice] Enumerated {len(chains)} maximal chains of {family!r}")
        return chains

    @staticmethod
    def random_graph(n: int, p: float, seed: int) -> Graph:
        """Erdős–Rényi G(n, p) graph, deterministic per seed"""
        if not 0.0 <= p <= 1.0:
            raise InputError(f"edge probability must lie in [0, 1], got {p}")
        g = nx.gnp_random_graph(n, p, seed=seed)
        return Graph(n=n, edges=[tuple(edge) for edge in g.edges()])
