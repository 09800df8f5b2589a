"""Small classical string C-groups used as inputs and test fixtures."""
from __future__ import annotations

from .cstring import StringCGroup
from .kernel import Permutation


def polygon(p: int) -> StringCGroup:
    """[p], the dihedral group of the p-gon, acting on 2p flags."""
    if p < 2:
        raise ValueError("p >= 2")
    # flags (k, side): rho0 flips side, rho1 steps k
    n = 2 * p
    r0 = [0] * n
    r1 = [0] * n
    for k in range(p):
        r0[2 * k], r0[2 * k + 1] = 2 * k + 1, 2 * k
        r1[2 * k + 1] = (2 * k + 2) % n
        r1[(2 * k + 2) % n] = 2 * k + 1
    return StringCGroup([Permutation(r0), Permutation(r1)], name=f"[{p}]")


def cube() -> StringCGroup:
    """[4,3] as signed permutations of the six points +-e1, +-e2, +-e3."""
    # point 2i is +e_i, 2i+1 is -e_i
    r0 = Permutation([1, 0, 2, 3, 4, 5])
    r1 = Permutation([2, 3, 0, 1, 4, 5])
    r2 = Permutation([0, 1, 4, 5, 2, 3])
    return StringCGroup([r0, r1, r2], name="[4,3]")
