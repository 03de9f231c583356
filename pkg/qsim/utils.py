import logging
import os
from typing import Optional

import torch

logger = logging.getLogger(__name__)

SEED_ENV_VAR = "QSIM_SEED"


def setup_logger(level):
    logging.basicConfig(
        format="%(asctime)s | %(name)s | %(funcName)s | %(message)s",
        level=level.upper(),
    )


def resolve_seed(seed: Optional[int] = None) -> int:
    """Pick the RNG seed for a machine or a CLI run.

    An explicit seed wins, then the :code:`QSIM_SEED` environment variable,
    then a non-deterministic seed drawn by torch.

    :param seed: Explicitly requested seed.
    :type seed: Optional[int]

    :returns: The seed to use.
    :rtype: int

    :raises ValueError: :code:`QSIM_SEED` is set but is not an integer.
    """
    if seed is not None:
        return int(seed)

    env_seed = os.environ.get(SEED_ENV_VAR)
    if env_seed:
        logger.debug(f"Using seed from {SEED_ENV_VAR}: {env_seed}")
        return int(env_seed)

    return torch.Generator().seed()
