from . import check, complex, explore, generate, ideal, reproduce

COMMANDS = (complex, ideal, check, generate, reproduce, explore)
