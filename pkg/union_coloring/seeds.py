"""Golden seed colorings for the cycle doubling.

Seed files are JSON documents in the :mod:`union_coloring.io` format,
named ``c{n}_seed.json``. The directory is taken from the ``seed_dir``
argument, then from the ``UVD_SEED_DIR`` environment variable, then from
the package's ``data`` directory.
"""

import logging
import os
from pathlib import Path
from typing import Optional, Union

from .constructions.cycles import check_seed
from .exceptions import FormatError, SeedInvariantError
from .io import from_json, read_text, to_json, write_text
from .models import CycleSeedColoring
from .utils import validate_int

logger = logging.getLogger(__name__)

SEED_DIR_ENV = "UVD_SEED_DIR"
PACKAGE_DATA = Path(__file__).parent / "data"


def resolve_seed_dir(override: Optional[Union[str, Path]] = None) -> Path:
    """Directory seed files are read from."""
    if override is not None:
        return Path(override)
    env = os.getenv(SEED_DIR_ENV)
    if env:
        return Path(env)
    return PACKAGE_DATA


def seed_filename(k: int) -> str:
    return f"c{(1 << k) - 1}_seed.json"


def load_seed(k: int = 4, seed_dir: Optional[Union[str, Path]] = None) -> CycleSeedColoring:
    """
    Load and check the seed coloring of C_{2^k - 1}.

    Args:
        k: Palette of the seed
        seed_dir: Directory to read from instead of the default

    Raises:
        FileNotFoundError: If the seed file does not exist
        FormatError: If the file cannot be parsed
        SeedInvariantError: If the stored coloring cannot seed the doubling
    """
    k = validate_int(k, "k", minimum=2)
    path = resolve_seed_dir(seed_dir) / seed_filename(k)
    graph, coloring = from_json(read_text(path))
    if coloring is None:
        raise FormatError(f"{path} has no coloring")
    if coloring.k != k:
        raise SeedInvariantError(f"{path} declares palette {coloring.k}, expected {k}")
    seed = CycleSeedColoring(graph=graph, coloring=coloring, k=k)
    check_seed(seed)
    logger.debug(f"loaded seed for C_{graph.n} from {path}")
    return seed


def save_seed(seed: CycleSeedColoring, path: Optional[Union[str, Path]] = None) -> Path:
    """
    Check ``seed`` and write it as JSON.

    Args:
        seed: Seed coloring
        path: File or directory; defaults to the seed directory

    Returns:
        Path of the written file
    """
    check_seed(seed)
    target = Path(path) if path is not None else resolve_seed_dir()
    if target.is_dir():
        target = target / seed_filename(seed.k)
    return write_text(target, to_json(seed.graph, seed.coloring))
