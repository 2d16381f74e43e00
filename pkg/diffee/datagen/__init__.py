from diffee.core.errors import InvalidInputError
from diffee.datagen.model1 import gen_model1, power_law_graph
from diffee.datagen.model2 import gen_model2
from diffee.datagen.rng import Stream, child_rng
from diffee.datagen.sampler import mvn_sample, sample_pair
from diffee.models.truth import GraphModel, GroundTruth


def generate(model: GraphModel | str | int, p: int, s: float, seed: int) -> GroundTruth:
    """Dispatch to the Model 1 or Model 2 generator"""
    try:
        kind = GraphModel.parse(model)
    except ValueError:
        raise InvalidInputError(f"unknown model {model!r}; choose 1 or 2") from None
    if kind is GraphModel.MODEL1:
        return gen_model1(p, s, seed)
    return gen_model2(p, s, seed)


__all__ = [
    "Stream",
    "child_rng",
    "gen_model1",
    "gen_model2",
    "generate",
    "mvn_sample",
    "power_law_graph",
    "sample_pair",
]
