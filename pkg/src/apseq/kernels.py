"""Backend selection for the difference kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is.  Set ``APSEQ_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("APSEQ_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

difference_rows = _impl.difference_rows
leading_column = _impl.leading_column
direct_difference = _impl.direct_difference
difference_rows_float = _impl.difference_rows_float
float_row_vanishes = _impl.float_row_vanishes
newton_eval = _impl.newton_eval
