"""Select the index kernel at import time.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python twin is loaded. Setting ``HYPERZAGREB_PURE_PYTHON=1`` forces the
fallback, which the test-suite uses to check both against each other.
"""

import os

from . import _pykernels as python_backend

try:
    if os.environ.get("HYPERZAGREB_PURE_PYTHON"):
        raise ImportError("pure-Python kernel forced by environment")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

backend = compiled_backend or python_backend
BACKEND_NAME = "cython" if compiled_backend is not None else "python"

index_sums = backend.index_sums
neighbor_degree_sums = backend.neighbor_degree_sums
