"""Shared constants for both kernel backends."""

import numpy as np

GL15_X, GL15_W = np.polynomial.legendre.leggauss(15)

#: maximum bisection depth for one strip of the inner time integral
MAX_STACK = 256
