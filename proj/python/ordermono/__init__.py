"""Monotone representations of finite preorders and the uncertainty order.

Rationals are exchanged as :class:`fractions.Fraction`; ints and strings such
as ``"3/4"`` or ``"0.6"`` are accepted on input, floats are not.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
