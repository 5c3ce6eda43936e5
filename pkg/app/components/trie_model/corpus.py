"""Corpus ingestion and synthetic corpora."""

from pathlib import Path
from typing import List

from app.components.base.exceptions import CorpusError
from app.components.probe.models import StringKey
from app.components.probe.rng import SplitMix64


def parse_corpus(data: bytes, source: str = "<inline>") -> List[StringKey]:
    """Newline-delimited byte strings; a single trailing newline is allowed."""
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    seen = set()
    keys = []
    for number, line in enumerate(lines, start=1):
        if not line:
            raise CorpusError("Empty line in corpus", component="trie_model", details={"source": source, "line": number})
        if line in seen:
            raise CorpusError(
                "Duplicate string in corpus",
                component="trie_model",
                details={"source": source, "line": number},
            )
        seen.add(line)
        keys.append(StringKey(line))
    return keys


def load_corpus(path: Path) -> List[StringKey]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise CorpusError(f"Cannot read corpus: {e}", component="trie_model", details={"path": str(path)})
    return parse_corpus(data, source=str(path))


def random_corpus(size: int, length: int, seed: int, alphabet: bytes = b"ab") -> List[StringKey]:
    """`size` distinct strings of one fixed length over `alphabet` (prefix-free)."""
    if size > len(alphabet) ** length:
        raise CorpusError(
            "Not enough distinct strings of that length",
            component="trie_model",
            details={"size": size, "length": length, "alphabet": len(alphabet)},
        )
    rng = SplitMix64(seed)
    chosen: List[bytes] = []
    seen = set()
    while len(chosen) < size:
        word = bytes(alphabet[rng.below(len(alphabet))] for _ in range(length))
        if word not in seen:
            seen.add(word)
            chosen.append(word)
    return [StringKey(word) for word in chosen]
