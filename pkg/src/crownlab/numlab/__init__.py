"""Floating-point verification lab for matrix-model identities and asymptotics."""

from .tolerances import TOL
from .quadrature import QuadratureSpec, adaptive_quad
from .iwasawa import iwasawa_a_part, im_log_a, majorized_by
from . import so12, regions, slphase, hypergeom, bessel, stirling
