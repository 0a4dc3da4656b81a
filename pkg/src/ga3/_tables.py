"""Blade product table for the 8-dimensional geometric algebra of 3-space.

Coefficient slots are ordered [1, e1, e2, e3, e23, e13, e12, e123].  The
table is generated from the anticommutation rules (e_j e_k = -e_k e_j for
j != k, e_k^2 = +1) rather than written out by hand, so every sign can be
audited against the generator below.
"""

BASIS_LABELS = ("1", "e1", "e2", "e3", "e23", "e13", "e12", "e123")

# bit k of a mask means the factor e_{k+1} is present in the blade
SLOT_MASKS = (0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111)
MASK_TO_SLOT = {mask: slot for slot, mask in enumerate(SLOT_MASKS)}

GRADES = tuple(bin(mask).count("1") for mask in SLOT_MASKS)
GRADE_SLOTS = {k: tuple(s for s in range(8) if GRADES[s] == k) for k in range(4)}


def _blade_product(mask_a: int, mask_b: int) -> tuple[int, int]:
    """Multiply two basis blades; returns (sign, result mask)."""
    sign = 1
    factors = {k for k in range(3) if mask_a >> k & 1}
    for k in range(3):
        if not mask_b >> k & 1:
            continue
        # anticommute e_{k+1} leftwards past every higher factor
        swaps = sum(1 for x in factors if x > k)
        if swaps % 2:
            sign = -sign
        if k in factors:
            factors.remove(k)  # e_k^2 = +1
        else:
            factors.add(k)
    mask = 0
    for k in factors:
        mask |= 1 << k
    return sign, mask


def _build_tables() -> tuple[list[list[int]], list[list[float]]]:
    slot = [[0] * 8 for _ in range(8)]
    sign = [[0.0] * 8 for _ in range(8)]
    for i in range(8):
        for j in range(8):
            sg, mask = _blade_product(SLOT_MASKS[i], SLOT_MASKS[j])
            slot[i][j] = MASK_TO_SLOT[mask]
            sign[i][j] = float(sg)
    return slot, sign


MUL_SLOT, MUL_SIGN = _build_tables()
