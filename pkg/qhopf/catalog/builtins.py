"""Catalog of small verified quasi-Hopf algebras.

Every entry is validated when it is first requested (the full quasi-Hopf
axiom suite, plus the R-matrix checks for the quasitriangular ones) and then
cached per field.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from loguru import logger

from qhopf.algebra.quasi_hopf import QuasiHopfAlgebra, build_quasi_hopf
from qhopf.algebra.quasitriangular import QTStructure
from qhopf.core.fields import Field, get_field
from qhopf.core.tensor import AlgebraElement
from qhopf.catalog.spec_io import validate_algebra
from qhopf.utils.config import get_settings
from qhopf.utils.errors import UnknownAlgebra

Entry = Tuple[QuasiHopfAlgebra, Optional[QTStructure]]


def _sparse(F: Field, shape, entries) -> np.ndarray:
    out = F.zeros(shape)
    for *idx, value in entries:
        out[tuple(idx)] = F.scalar(out[tuple(idx)] + F.scalar(value))
    return F.reduce(out)


def _z2_group_data(F: Field):
    """k[g]/(g^2 - 1) with g grouplike; basis (1, g)."""
    mult = _sparse(F, (2, 2, 2), [(a, b, (a + b) % 2, 1) for a in range(2) for b in range(2)])
    comult = _sparse(F, (2, 2, 2), [(a, a, a, 1) for a in range(2)])
    return mult, F.array([1, 0]), comult, F.array([1, 1])


def _trivial_phi(F: Field, unit: np.ndarray) -> np.ndarray:
    return F.reduce(np.multiply.outer(np.multiply.outer(unit, unit), unit))


def _kz2(F: Field, name: str) -> QuasiHopfAlgebra:
    mult, unit, comult, counit = _z2_group_data(F)
    eye = F.eye(2)
    return build_quasi_hopf(F, ("1", "g"), mult, unit, comult, counit, _trivial_phi(F, unit),
                            eye, eye, unit, unit, name=name)


def _element(F: Field, shape, entries) -> AlgebraElement:
    return AlgebraElement(F, _sparse(F, shape, entries))


def _z2_triangular_r(F: Field) -> AlgebraElement:
    """1/2 (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g)."""
    half = Fraction(1, 2)
    return _element(F, (2, 2), [(0, 0, half), (0, 1, half), (1, 0, half), (1, 1, -half)])


def kz2(F: Field) -> Entry:
    H = _kz2(F, "kZ2")
    return H, validate_algebra(H, H.one(2))


def kz2_rt(F: Field) -> Entry:
    H = _kz2(F, "kZ2_Rt")
    return H, validate_algebra(H, _z2_triangular_r(F))


def sweedler4(F: Field) -> Entry:
    """Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.

    Basis g^a x^b at index a + 2b, i.e. (1, g, x, gx).
    """
    def word(a, b):
        return a + 2 * b

    mult = []
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b + d < 2:
                        mult.append((word(a, b), word(c, d), word((a + c) % 2, b + d), (-1) ** (b * c)))
    comult = [(word(a, 0), word(a, 0), word(a, 0), 1) for a in range(2)]
    for a in range(2):
        comult.append((word(a, 1), word(a, 1), word(a, 0), 1))
        comult.append((word(a, 1), word((a + 1) % 2, 0), word(a, 1), 1))
    # S(x) = -gx, S(gx) = x
    antipode = _sparse(F, (4, 4), [(0, 0, 1), (1, 1, 1), (3, 2, -1), (2, 3, 1)])
    antipode_inv = _sparse(F, (4, 4), [(0, 0, 1), (1, 1, 1), (3, 2, 1), (2, 3, -1)])
    unit = F.array([1, 0, 0, 0])
    H = build_quasi_hopf(F, ("1", "g", "x", "gx"), _sparse(F, (4, 4, 4), mult), unit,
                         _sparse(F, (4, 4, 4), comult), F.array([1, 1, 0, 0]), _trivial_phi(F, unit),
                         antipode, antipode_inv, unit, unit, name="sweedler4_Rtri")
    half = Fraction(1, 2)
    R = _element(F, (4, 4), [(0, 0, half), (0, 1, half), (1, 0, half), (1, 1, -half),
                             (2, 2, half), (2, 3, -half), (3, 2, half), (3, 3, half)])
    return H, validate_algebra(H, R)


def _h2(F: Field, name: str) -> QuasiHopfAlgebra:
    """kZ2 with Phi = 1 (x) 1 (x) 1 - 2 p (x) p (x) p, p = (1 - g)/2, S = id, alpha = g, beta = 1."""
    mult, unit, comult, counit = _z2_group_data(F)
    p = F.array([Fraction(1, 2), Fraction(-1, 2)])
    ppp = np.multiply.outer(np.multiply.outer(p, p), p)
    phi = F.reduce(_trivial_phi(F, unit) - ppp * F.scalar(2))
    eye = F.eye(2)
    return build_quasi_hopf(F, ("1", "g"), mult, unit, comult, counit, phi, eye, eye,
                            F.array([0, 1]), unit, phi_inv=phi, name=name)


def h2(F: Field) -> Entry:
    H = _h2(F, "H2")
    return H, validate_algebra(H)


def h2_ri(F: Field) -> Entry:
    """H2 with R = 1 (x) 1 + (c - 1) p (x) p, c^2 = -1; quasitriangular, not triangular."""
    H = _h2(F, "H2_Ri")
    c = F.sqrt(-1)
    p = F.array([Fraction(1, 2), Fraction(-1, 2)])
    R = F.reduce(np.multiply.outer(H.unit, H.unit) + np.multiply.outer(p, p) * F.scalar(c - 1))
    return H, validate_algebra(H, AlgebraElement(F, R))


def dz2(F: Field) -> Entry:
    """The double of kZ2: basis p_y g^a at index 2y + a, names (p0, p0g, p1, p1g).

    Commutative, Delta(p_y g^a) = sum p_{y1} g^a (x) p_{y2} g^a, R = sum_y p_y (x) g^y.
    """
    def idx(y, a):
        return 2 * y + a

    pairs = [(y, a) for y in range(2) for a in range(2)]
    mult = [(idx(y, a), idx(y, b), idx(y, (a + b) % 2), 1) for y, a in pairs for b in range(2)]
    comult = [(idx(y, a), idx(y1, a), idx((y + y1) % 2, a), 1) for y, a in pairs for y1 in range(2)]
    unit = _sparse(F, (4,), [(idx(0, 0), 1), (idx(1, 0), 1)])
    eye = F.eye(4)
    H = build_quasi_hopf(F, ("p0", "p0g", "p1", "p1g"), _sparse(F, (4, 4, 4), mult), unit,
                         _sparse(F, (4, 4, 4), comult), F.array([1, 1, 0, 0]), _trivial_phi(F, unit),
                         eye, eye, unit, unit, name="dZ2")
    # p_y (x) g^y with p_y = p_y g^0 and g^y = p_0 g^y + p_1 g^y
    R = _element(F, (4, 4), [(idx(y, 0), idx(z, y), 1) for y in range(2) for z in range(2)])
    return H, validate_algebra(H, R)


BUILTINS: Dict[str, Callable[[Field], Entry]] = {
    "kZ2": kz2,
    "kZ2_Rt": kz2_rt,
    "sweedler4_Rtri": sweedler4,
    "H2": h2,
    "H2_Ri": h2_ri,
    "dZ2": dz2,
}

# entries that need a particular field unless one is given explicitly
_DEFAULT_FIELDS = {"H2_Ri": "fp:101"}


def builtin_names() -> Tuple[str, ...]:
    return tuple(BUILTINS)


def default_field_for(name: str) -> str:
    return _DEFAULT_FIELDS.get(name, get_settings().default_field)


@lru_cache(maxsize=None)
def _load(name: str, descriptor: str) -> Entry:
    H, qt = BUILTINS[name](get_field(descriptor))
    logger.debug(f"Builtin {name} over {descriptor} loaded{' with R' if qt else ''}")
    return H, qt


def builtin(name: str, field: Optional[str] = None) -> Entry:
    """(H, qt) for a catalog name; qt is None for algebras shipped without an R-matrix."""
    if name not in BUILTINS:
        raise UnknownAlgebra(f"unknown builtin '{name}' (known: {', '.join(BUILTINS)})")
    descriptor = get_field(field or default_field_for(name)).describe()
    return _load(name, descriptor)
