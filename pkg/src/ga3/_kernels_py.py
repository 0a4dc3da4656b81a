"""Pure-Python geometric-product kernel (fallback for the compiled extension)."""

from ._tables import MUL_SIGN, MUL_SLOT

_SLOT = tuple(tuple(row) for row in MUL_SLOT)
_SIGN = tuple(tuple(row) for row in MUL_SIGN)


def gp(a, b, out) -> None:
    """Geometric product of two length-8 coefficient arrays, written into out."""
    av = a.tolist() if hasattr(a, "tolist") else list(a)
    bv = b.tolist() if hasattr(b, "tolist") else list(b)
    acc = [0.0] * 8
    for i in range(8):
        ai = av[i]
        if ai == 0.0:
            continue
        slot_row = _SLOT[i]
        sign_row = _SIGN[i]
        for j in range(8):
            bj = bv[j]
            if bj != 0.0:
                acc[slot_row[j]] += sign_row[j] * ai * bj
    out[:] = acc
