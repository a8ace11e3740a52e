"""Backend selection for the hot loops.

The compiled extension is used when it imports; setting
``TREESPAN_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernels

if os.environ.get("TREESPAN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND

OK = _pykernels.OK
NO_DEGREE2 = _pykernels.NO_DEGREE2
NOT_HAMILTONIAN = _pykernels.NOT_HAMILTONIAN
CROSSING = _pykernels.CROSSING

biconnected_edge_labels = _impl.biconnected_edge_labels
outer_cycle = _impl.outer_cycle
chord_faces = _impl.chord_faces
solve_sd = _impl.solve_sd
root_tree = _impl.root_tree
tree_distances = _impl.tree_distances
regroup_parts = _impl.regroup_parts
group_by = _impl.group_by


def available_backends():
    """Map backend name -> kernel module, for benchmarks and parity tests."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["compiled"] = _ckernels
    return found
