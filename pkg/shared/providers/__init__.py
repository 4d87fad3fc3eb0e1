from .factory import get_provider, PROVIDERS
from .base import DegreeComplexProvider
from .generators import GeneratorDegreeComplex
from .symbolic import SymbolicDegreeComplex
