from .trie import PrefixTrie, TrieNode, build_trie, reduced_trie
from .costs import (
    COST_FUNCTIONS,
    harmonic,
    load_cost_table,
    nlogn_cost,
    predict_cost,
    quicksort_cost,
    resolve_cost,
    table_cost,
)
from .corpus import load_corpus, parse_corpus, random_corpus
from .measure import SymbolCostSample, measure_symbol_cost
from .models import TriePredictRequest, TriePredictResponse
from .service import TrieModelService
from .router import router

__all__ = [
    "PrefixTrie",
    "TrieNode",
    "build_trie",
    "reduced_trie",
    "COST_FUNCTIONS",
    "harmonic",
    "load_cost_table",
    "nlogn_cost",
    "predict_cost",
    "quicksort_cost",
    "resolve_cost",
    "table_cost",
    "load_corpus",
    "parse_corpus",
    "random_corpus",
    "SymbolCostSample",
    "measure_symbol_cost",
    "TriePredictRequest",
    "TriePredictResponse",
    "TrieModelService",
    "router",
]
