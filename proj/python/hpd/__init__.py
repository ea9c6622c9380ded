"""Edge decompositions of hypercube graphs into fixed-length paths.

The heavy lifting lives in the compiled extension; this package just
re-exports it under a stable name.
"""

from ._core import (
    Decomposition,
    NotDivisibleError,
    Report,
    ResourceLimitError,
    UnsupportedError,
    advance,
    base_partition,
    brute_force_decompose,
    check_divisibility,
    decompose,
    dvop_path,
    edge_index,
    f_gamma,
    flip,
    force_even,
    force_odd,
    g_eval,
    g_inverse,
    ham_cycle,
    parity,
    plan,
    rho1,
    rho2,
    verify_dvop,
    verify_file,
)
from ._core import __version__

__all__ = [
    "Decomposition",
    "NotDivisibleError",
    "Report",
    "ResourceLimitError",
    "UnsupportedError",
    "advance",
    "base_partition",
    "brute_force_decompose",
    "check_divisibility",
    "decompose",
    "dvop_path",
    "edge_index",
    "f_gamma",
    "flip",
    "force_even",
    "force_odd",
    "g_eval",
    "g_inverse",
    "ham_cycle",
    "parity",
    "plan",
    "rho1",
    "rho2",
    "verify_dvop",
    "verify_file",
    "__version__",
]
