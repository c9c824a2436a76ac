"""Exact cohomology of A-infinity and C-infinity algebras at finite weight."""
import os

_threads = os.environ.get("INFTY_THREADS")
if _threads and _threads.isdigit():
    # bound BLAS threads before numpy is imported
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

from .errors import *  # noqa: E402,F401,F403
from .gradedspace import GradedBasis, LinComb  # noqa: E402
from .inftystruct import InftyMorphism, InftyStructure  # noqa: E402

__version__ = "0.1.0"
__all__ = ["GradedBasis", "LinComb", "InftyStructure", "InftyMorphism"]
