from app.components.base.component import BaseComponent
from app.components.base.config import get_settings
from app.components.combinatorics.tables import render

from .corpus import parse_corpus
from .costs import predict_cost, resolve_cost
from .measure import measure_symbol_cost
from .models import TriePredictRequest, TriePredictResponse
from .trie import build_trie, reduced_trie


class TrieModelService(BaseComponent[TriePredictRequest, TriePredictResponse]):
    """Trie-sum prediction for a corpus, optionally checked against Quicksort."""

    def __init__(self):
        self.config = get_settings()

    @property
    def component_name(self) -> str:
        return "trie_model"

    async def process(self, request: TriePredictRequest) -> TriePredictResponse:
        keys = parse_corpus("\n".join(request.strings).encode("utf-8"))
        trie = build_trie(keys)
        prediction = predict_cost(trie, resolve_cost(request.cost))
        response = TriePredictResponse(
            size=trie.size,
            nodes=len(trie),
            reduced_nodes=len(reduced_trie(trie)),
            cost=request.cost,
            prediction=render(prediction, self.config.csv_decimals),
            prediction_value=float(prediction),
        )
        if request.trials:
            seed = self.config.seed if request.seed is None else request.seed
            sample = measure_symbol_cost(keys, request.trials, seed)
            response.measured_mean = sample.mean
            response.relative_error = abs(sample.mean - float(prediction)) / float(prediction) if prediction else 0.0
        self.log.info("trie_predicted", size=trie.size, nodes=len(trie), cost=request.cost, prediction=float(prediction))
        return response
