from . import core, lang, linalg, states
