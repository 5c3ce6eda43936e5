"""
Prefix trie used only as a parametrization of a string set.

Every prefix of every string is a node; a node's thickness is the number of
strings that start with it. No end-of-string sentinel is added, so a string
that is a proper prefix of another is an inner node.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List

import pandas as pd

from app.components.base.exceptions import CorpusError
from app.components.probe.models import StringKey


@dataclass
class TrieNode:
    prefix: bytes
    thickness: int = 0
    children: Dict[int, bytes] = field(default_factory=dict)  # next symbol -> child prefix

    @property
    def depth(self) -> int:
        return len(self.prefix)

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class PrefixTrie:
    nodes: Dict[bytes, TrieNode] = field(default_factory=dict)
    size: int = 0

    ROOT = b""

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, prefix: bytes) -> bool:
        return prefix in self.nodes

    def __iter__(self) -> Iterator[TrieNode]:
        return iter(self.nodes.values())

    def thickness(self, prefix: bytes) -> int:
        node = self.nodes.get(prefix)
        return node.thickness if node else 0

    def thickness_vector(self) -> List[int]:
        return sorted((node.thickness for node in self), reverse=True)

    def leaves(self) -> List[TrieNode]:
        return [node for node in self if node.is_leaf]

    def to_frame(self) -> pd.DataFrame:
        """One row per node: prefix length and thickness."""
        frame = pd.DataFrame(
            [(node.depth, node.thickness) for node in self],
            columns=["prefix_length", "thickness"],
        )
        return frame.sort_values(["prefix_length", "thickness"], kind="mergesort").reset_index(drop=True)

    def histogram(self) -> pd.DataFrame:
        """Node counts per (prefix length, thickness)."""
        frame = self.to_frame()
        return frame.groupby(["prefix_length", "thickness"]).size().reset_index(name="nodes")


def build_trie(strings: Iterable[StringKey]) -> PrefixTrie:
    trie = PrefixTrie()
    seen = set()
    for key in strings:
        if key.data in seen:
            raise CorpusError(
                "Duplicate string in corpus",
                component="trie_model",
                details={"string": key.data.decode("utf-8", errors="replace")},
            )
        seen.add(key.data)
        trie.size += 1
        parent = trie.nodes.setdefault(PrefixTrie.ROOT, TrieNode(PrefixTrie.ROOT))
        parent.thickness += 1
        for depth in range(1, len(key.data) + 1):
            prefix = key.data[:depth]
            node = trie.nodes.get(prefix)
            if node is None:
                node = trie.nodes[prefix] = TrieNode(prefix)
                parent.children[key.data[depth - 1]] = prefix
            node.thickness += 1
            parent = node
    return trie


def reduced_trie(trie: PrefixTrie) -> PrefixTrie:
    """Subtrie induced by the nodes of thickness above one."""
    reduced = PrefixTrie(size=trie.size)
    for prefix, node in trie.nodes.items():
        if node.thickness > 1:
            kept = {s: child for s, child in node.children.items() if trie.nodes[child].thickness > 1}
            reduced.nodes[prefix] = TrieNode(prefix, node.thickness, kept)
    return reduced
