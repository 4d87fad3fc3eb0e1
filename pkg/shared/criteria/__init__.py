from .audit import oracle_equivalences, paper_audit
from .checks import condition3_check, depth2_criterion, link_diameter_condition, s2_criterion
from .explore import exhaustive_pure_complexes, explore_random, random_pure_complex
