"""Graph kernel backend selection.

The hot inner loops (BFS, Dijkstra, biconnectivity, unit max-flow, bitmask
graph sweeps) exist twice: a Cython extension (``_ckernels``) and a pure
Python fallback (``_pykernels``) with identical semantics.  The compiled
backend is picked at import time when available; set ``VBACKBONE_PURE=1``
to force the fallback (used by the parity tests and the kernel benchmark).
"""

import os

_FORCE_PURE = os.environ.get("VBACKBONE_PURE", "") not in ("", "0")

if _FORCE_PURE:
    from . import _pykernels as _impl

    BACKEND = "pure"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "pure"

bfs_hops = _impl.bfs_hops
bfs_restricted = _impl.bfs_restricted
num_components = _impl.num_components
articulation_info = _impl.articulation_info
bcc_decompose = _impl.bcc_decompose
st_vertex_disjoint = _impl.st_vertex_disjoint
member_neighbor_counts = _impl.member_neighbor_counts
dijkstra_pair = _impl.dijkstra_pair
dijkstra_layered = _impl.dijkstra_layered
bitmask_graph_stats = _impl.bitmask_graph_stats
badpoint_free_violations = _impl.badpoint_free_violations


def available_backends():
    """Mapping backend name -> kernel module, for everything importable
    in this environment."""
    from . import _pykernels

    backends = {"pure": _pykernels}
    try:
        from . import _ckernels

        backends["compiled"] = _ckernels
    except ImportError:
        pass
    return backends
