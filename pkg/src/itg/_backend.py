"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``ITG_PURE`` (to any non-empty value) before import
forces the pure-Python kernels. The compiled kernels have size limits
(single-word bitsets); calls outside those limits route to the pure
implementations transparently.
"""

import os

from . import _purecore

if os.environ.get("ITG_PURE"):
    _fast = None
else:
    try:
        from . import _fastcore as _fast
    except ImportError:
        _fast = None

#: Largest host the compiled embedding search accepts.
_FAST_EMBED_MAX = 64
#: Largest order the compiled canonical-form kernel accepts (mask in uint64).
_FAST_FORM_MAX = 11


def backend_name():
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return "compiled" if _fast is not None else "pure"


def all_pairs_distances(n, masks):
    if _fast is not None:
        return _fast.all_pairs_distances(n, masks)
    return _purecore.all_pairs_distances(n, masks)


def find_embedding(hn, hmasks, pn, pmasks, induced):
    if _fast is not None and hn <= _FAST_EMBED_MAX:
        return _fast.find_embedding(hn, hmasks, pn, pmasks, induced)
    return _purecore.find_embedding(hn, hmasks, pn, pmasks, induced)


def min_form_mask(n, masks, cells):
    if _fast is not None and n <= _FAST_FORM_MAX:
        return _fast.min_form_mask(n, masks, cells)
    return _purecore.min_form_mask(n, masks, cells)
