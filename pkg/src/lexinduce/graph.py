"""Immutable undirected translation graph with per-language indexes.

Vertices are interned to dense integer ids so that cycle enumeration can
work on plain int adjacency lists; everything exposed publicly speaks in
:class:`LexicalEntry` triples.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .entries import LexicalEntry
from .errors import IntraLanguagePair, UnknownLanguage, UnknownVertex

Pair = tuple[LexicalEntry, LexicalEntry]


class TranslationGraph:
    """Simple undirected graph over lexical entries.

    No self-loops, no duplicate edges, and no edge joins two entries of
    the same language. Instances are immutable once built; all query
    methods are read-only and safe to call concurrently.
    """

    __slots__ = ("_entries", "_ids", "_adj", "_adj_sets", "_edge_count", "_lang_ids", "_pair_edges")

    def __init__(self, pairs: Iterable[Pair], extra_vertices: Iterable[LexicalEntry] = ()):
        self._entries: list[LexicalEntry] = []
        self._ids: dict[LexicalEntry, int] = {}
        self._adj: list[list[int]] = []
        self._adj_sets: list[set[int]] = []
        self._lang_ids: dict[str, list[int]] = {}
        self._pair_edges: dict[tuple[str, str], list[tuple[int, int]]] = {}
        self._edge_count = 0
        for u, v in pairs:
            if u.lang == v.lang:
                raise IntraLanguagePair(f"{u} -- {v}")
            iu = self._intern(u)
            iv = self._intern(v)
            if iv in self._adj_sets[iu]:
                continue
            self._adj_sets[iu].add(iv)
            self._adj_sets[iv].add(iu)
            self._edge_count += 1
            key = (u.lang, v.lang) if u.lang < v.lang else (v.lang, u.lang)
            edge = (iu, iv) if iu < iv else (iv, iu)
            self._pair_edges.setdefault(key, []).append(edge)
        for v in extra_vertices:
            self._intern(v)
        for i, nbrs in enumerate(self._adj_sets):
            self._adj.append(sorted(nbrs))
        for ids in self._lang_ids.values():
            ids.sort()

    def _intern(self, entry: LexicalEntry) -> int:
        vid = self._ids.get(entry)
        if vid is None:
            vid = len(self._entries)
            self._ids[entry] = vid
            self._entries.append(entry)
            self._adj_sets.append(set())
            self._lang_ids.setdefault(entry.lang, []).append(vid)
        return vid

    # -- public queries -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._entries)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def vertices(self) -> tuple[LexicalEntry, ...]:
        return tuple(self._entries)

    @property
    def languages(self) -> tuple[str, ...]:
        return tuple(sorted(self._lang_ids))

    def __contains__(self, entry: LexicalEntry) -> bool:
        return entry in self._ids

    def entries_of_lang(self, lang: str) -> tuple[LexicalEntry, ...]:
        return tuple(self._entries[i] for i in self.ids_of_lang(lang))

    def edges(self) -> Iterator[Pair]:
        for u in range(len(self._adj)):
            for v in self._adj[u]:
                if u < v:
                    yield (self._entries[u], self._entries[v])

    def edges_between(self, lang_a: str, lang_b: str) -> tuple[Pair, ...]:
        """All edges joining the two languages, endpoints ordered (lang_a, lang_b)."""
        key = (lang_a, lang_b) if lang_a < lang_b else (lang_b, lang_a)
        out = []
        for iu, iv in self._pair_edges.get(key, ()):
            u, v = self._entries[iu], self._entries[iv]
            out.append((u, v) if u.lang == lang_a else (v, u))
        return tuple(out)

    def has_edge(self, u: LexicalEntry, v: LexicalEntry) -> bool:
        iu, iv = self._ids.get(u), self._ids.get(v)
        if iu is None or iv is None:
            return False
        return iv in self._adj_sets[iu]

    def neighbors(self, entry: LexicalEntry) -> tuple[LexicalEntry, ...]:
        return tuple(self._entries[i] for i in self._adj[self.id_of(entry)])

    # -- id-level access (used by the inference algorithms) --------------

    def id_of(self, entry: LexicalEntry) -> int:
        try:
            return self._ids[entry]
        except KeyError:
            raise UnknownVertex(repr(entry)) from None

    def entry_of(self, vid: int) -> LexicalEntry:
        return self._entries[vid]

    def ids_of_lang(self, lang: str) -> Sequence[int]:
        try:
            return self._lang_ids[lang]
        except KeyError:
            raise UnknownLanguage(lang) from None

    def adj(self, vid: int) -> Sequence[int]:
        return self._adj[vid]

    def adj_set(self, vid: int) -> frozenset[int] | set[int]:
        return self._adj_sets[vid]

    def bfs_distances(self, start: int, max_depth: int) -> dict[int, int]:
        """Shortest-path distances from `start`, capped at `max_depth`."""
        dist = {start: 0}
        frontier = deque([start])
        while frontier:
            u = frontier.popleft()
            d = dist[u]
            if d == max_depth:
                continue
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = d + 1
                    frontier.append(w)
        return dist


def build_graph(pairs: Iterable[Pair], extra_vertices: Iterable[LexicalEntry] = ()) -> TranslationGraph:
    """Assemble an immutable graph from translation pairs.

    Duplicate pairs (in either orientation) collapse to one edge. A pair
    joining two entries of the same language raises IntraLanguagePair.
    """
    return TranslationGraph(pairs, extra_vertices)


def context_subgraph(g: TranslationGraph, source: LexicalEntry, depth: int) -> TranslationGraph:
    """Induced subgraph on vertices within BFS distance `depth` of `source`."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    sid = g.id_of(source)
    kept = g.bfs_distances(sid, depth)
    pairs = []
    for u in kept:
        for v in g.adj(u):
            if u < v and v in kept:
                pairs.append((g.entry_of(u), g.entry_of(v)))
    return TranslationGraph(pairs, extra_vertices=(source,))
