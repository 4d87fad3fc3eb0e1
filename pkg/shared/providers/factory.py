from .generators import GeneratorDegreeComplex
from .symbolic import SymbolicDegreeComplex

PROVIDERS = {
    "generators": GeneratorDegreeComplex,
    "symbolic": SymbolicDegreeComplex,
}


def get_provider(name: str, *args, cfg=None):
    cls = PROVIDERS[name]
    return cls(*args, cfg=cfg)
