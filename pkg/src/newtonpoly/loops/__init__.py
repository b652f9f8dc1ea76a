"""
Legal moves, legal loops and the twelve identity.
"""

from .legal_loops import (
    LegalLoop,
    LegalMove,
    TwelveCheck,
    dual_loop,
    is_legal_move,
    loop_bounds,
    loop_equals_up_to_rotation,
    loop_length,
    loop_of_polytope,
    move_length,
    verify_twelve,
    winding_number,
)

__all__ = [
    "LegalLoop",
    "LegalMove",
    "TwelveCheck",
    "dual_loop",
    "is_legal_move",
    "loop_bounds",
    "loop_equals_up_to_rotation",
    "loop_length",
    "loop_of_polytope",
    "move_length",
    "verify_twelve",
    "winding_number",
]
