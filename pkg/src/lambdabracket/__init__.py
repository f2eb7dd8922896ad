"""Exact lambda-bracket calculus for vertex-algebra modules and intertwiners.

Submodules: ``lambda_core`` (divided powers and Fourier transforms),
``virasoro`` and ``affine`` (the two algebra engines), ``vertex`` and
``intertwiner`` (intertwiners and their identities), ``fusion`` (fusion rules
from singular vectors) and ``cli``.
"""

__version__ = "0.1.0"
