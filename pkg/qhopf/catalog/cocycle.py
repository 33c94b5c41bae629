"""Function algebras on Z_n twisted by the standard 3-cocycles."""
from typing import Optional

import numpy as np
from loguru import logger

from qhopf.algebra.quasi_hopf import QuasiHopfAlgebra, build_quasi_hopf
from qhopf.catalog.spec_io import validate_algebra
from qhopf.core.fields import Field, get_field
from qhopf.utils.config import get_settings


def omega(n: int, q: int, zeta, F: Field, a: int, b: int, c: int):
    """zeta^(q a (b + c - [b + c]) / n); the exponent is q * a * carry(b + c)."""
    carry = (b + c) // n
    return F.scalar(pow(zeta, q * a * carry, F.p) if F.p else zeta ** (q * a * carry))


def cocycle_algebra(n: int, q: int = 1, field: Optional[Field] = None, validate: bool = True) -> QuasiHopfAlgebra:
    """k^{Z_n} with Phi = sum omega(a, b, c) d_a (x) d_b (x) d_c, alpha = sum omega(a, -a, a)^{-1} d_a, beta = 1.

    Needs a primitive n-th root of unity in the field (FieldError otherwise).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    F = field or get_field(get_settings().default_field)
    zeta = F.root_of_unity(n)
    w = np.vectorize(lambda a, b, c: omega(n, q, zeta, F, int(a), int(b), int(c)), otypes=[object])

    a, b, c = np.meshgrid(range(n), range(n), range(n), indexing="ij")
    phi = F.array(w(a, b, c).tolist())
    phi_inv = F.array([[[F.inv(x) for x in row] for row in plane] for plane in phi.tolist()])

    mult = F.zeros((n, n, n))
    comult = F.zeros((n, n, n))
    antipode = F.zeros((n, n))
    alpha = F.zeros(n)
    for x in range(n):
        mult[x, x, x] = F.one
        antipode[(-x) % n, x] = F.one
        alpha[x] = F.inv(omega(n, q, zeta, F, x, (-x) % n, x))
        for y in range(n):
            comult[x, y, (x - y) % n] = F.one
    unit = F.array([1] * n)
    counit = F.zeros(n)
    counit[0] = F.one

    basis = tuple(f"d{x}" for x in range(n))
    H = build_quasi_hopf(F, basis, mult, unit, comult, counit, phi, antipode, antipode.copy(), alpha, unit,
                         phi_inv=phi_inv, name=f"Z{n}^w{q}")
    if validate:
        validate_algebra(H)
    logger.debug(f"Cocycle algebra {H.name} over {F} built")
    return H
