from app.components.base.exceptions import InvalidExponentError
from app.components.probe.models import Key, RedRange

from .models import HeapArray


def adversarial_size(k: int) -> tuple[int, int]:
    """(n, r) for the degenerate heap of exponent k: n = 2^k - 1, r = 2*floor(log2 n) + 1."""
    n = (1 << k) - 1
    return n, 2 * (k - 1) + 1


def adversarial_red_red(k: int) -> int:
    """Sort-phase red/red count on the degenerate heap of exponent k: k(k+1)/2 = (r+1)(r+3)/8."""
    _, r = adversarial_size(k)
    return (r + 1) * (r + 3) // 8


def adversarial_red_range(k: int) -> RedRange:
    n, r = adversarial_size(k)
    return RedRange.top(n, r)


def construct_adversarial_heap(k: int) -> HeapArray:
    """Heap on ranks 0..2^k-2 whose top r ranks sit on the right spine and its left siblings.

    Spine positions 2^(d+1)-1 carry the k largest ranks top-down; the left
    siblings 2^(d+1)-2 carry the next k-1 ranks top-down. Blue ranks fill the
    remaining positions in decreasing breadth-first order.
    """
    if k < 2:
        raise InvalidExponentError(
            f"Adversarial heap needs k >= 2, got {k}",
            component="heap_core",
            details={"k": k},
        )
    n, r = adversarial_size(k)
    slots = [None] * (n + 1)
    for depth in range(k):
        slots[(1 << (depth + 1)) - 1] = Key.real(n - 1 - depth)
    for depth in range(1, k):
        slots[(1 << (depth + 1)) - 2] = Key.real(n - k - depth)
    blue_rank = n - r - 1
    for position in range(1, n + 1):
        if slots[position] is None:
            slots[position] = Key.real(blue_rank)
            blue_rank -= 1
    return HeapArray(slots=slots, heap_size=n)
