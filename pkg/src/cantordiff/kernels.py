"""Select the rule kernel backend at import time.

The compiled extension ``cantordiff._kernel`` is used when it was built;
otherwise the pure-Python module with the same functions is used.  Setting
``CANTORDIFF_PURE_PYTHON=1`` forces the fallback.
"""

import os

from cantordiff import _kernel_py

if os.environ.get("CANTORDIFF_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from cantordiff import _kernel as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND = "python" if _impl is _kernel_py else "compiled"

compose_rules = _impl.compose_rules
reduce_rules = _impl.reduce_rules
expand_rule = _impl.expand_rule
