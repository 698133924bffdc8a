"""Metadata for the classical families handled by the package.

Each family fixes a base ring, the form flavour (sigma, epsilon) and the
determinant-type condition cutting out the group.  The ``size`` field says
how the CLI size parameters translate into the total size of a partition:
``n`` (partition of n), ``2n`` (partition of 2n) or ``pq`` (partition of
p+q with a target signature).
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Ring


@dataclass(frozen=True)
class FamilyInfo:
    name: str
    ring: Ring
    sigma: str | None      # 'id', 'conj' or None when there is no form
    epsilon: int | None    # +1 / -1 or None
    det_condition: str     # 'det_one', 'nrd_one' or 'none'
    size: str              # 'n', '2n' or 'pq'


FAMILIES: dict[str, FamilyInfo] = {
    "sl_r": FamilyInfo("sl_r", Ring.R, None, None, "det_one", "n"),
    "sl_c": FamilyInfo("sl_c", Ring.C, None, None, "det_one", "n"),
    "sl_h": FamilyInfo("sl_h", Ring.H, None, None, "nrd_one", "n"),
    "so_c": FamilyInfo("so_c", Ring.C, "id", 1, "det_one", "n"),
    "sp_c": FamilyInfo("sp_c", Ring.C, "id", -1, "det_one", "2n"),
    "su": FamilyInfo("su", Ring.C, "conj", 1, "det_one", "pq"),
    "so": FamilyInfo("so", Ring.R, "id", 1, "det_one", "pq"),
    "so_star": FamilyInfo("so_star", Ring.H, "conj", -1, "nrd_one", "n"),
    "sp_r": FamilyInfo("sp_r", Ring.R, "id", -1, "det_one", "2n"),
    "sp_hq": FamilyInfo("sp_hq", Ring.H, "conj", 1, "nrd_one", "pq"),
    # supporting groups used by witnesses (full general linear, full orthogonal)
    "gl_r": FamilyInfo("gl_r", Ring.R, None, None, "none", "n"),
    "gl_c": FamilyInfo("gl_c", Ring.C, None, None, "none", "n"),
    "gl_h": FamilyInfo("gl_h", Ring.H, None, None, "none", "n"),
    "o_c": FamilyInfo("o_c", Ring.C, "id", 1, "none", "n"),
}

#: Families a user can ask the CLI / enumeration for.
ORBIT_FAMILIES = (
    "sl_r", "sl_c", "sl_h", "so_c", "sp_c",
    "su", "so", "so_star", "sp_r", "sp_hq",
)

#: Families whose diagrams carry a target signature (p, q).
SIGNATURE_FAMILIES = ("su", "so", "sp_hq")


def family_info(name: str) -> FamilyInfo:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None
