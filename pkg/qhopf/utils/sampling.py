"""Seeded random modules, Yetter-Drinfeld modules and morphisms for the suites."""
from typing import List, Optional

import numpy as np
from loguru import logger

from qhopf.core import linalg
from qhopf.categories.hmod import HModule, change_basis, cyclic_submodule, direct_sum, regular_module, trivial_module
from qhopf.categories.yd import (YDModule, adjoint_yd_module, qt_embed, trivial_yd, yd_change_basis,
                                 yd_cyclic_submodule, yd_direct_sum, yd_tensor)
from qhopf.categories.functors import functor_F_inv, functor_G_inv, functor_K
from qhopf.utils.config import get_settings

# ad (x) ad is only formed for algebras up to dimension 4
TENSOR_PIECE_LIMIT = 16


def random_invertible(F, rng: np.random.Generator, d: int, attempts: int = 50) -> np.ndarray:
    for _ in range(attempts):
        P = F.random(rng, (d, d))
        if linalg.rank(F, P) == d:
            return P
    logger.warning(f"No invertible {d}x{d} matrix in {attempts} draws over {F}; using the identity")
    return F.eye(d)


def _pieces(H, side: str, rng: np.random.Generator, max_dim: int) -> List[HModule]:
    """Trivial module plus cyclic submodules of the regular module of small dimension."""
    out = [trivial_module(H, side)]
    reg = regular_module(H, side)
    for _ in range(4):
        v = _random_vector(H, rng)
        if not H.field.is_zero(v):
            sub = cyclic_submodule(reg, v)
            if sub.dim <= max_dim:
                out.append(sub)
    if reg.dim <= max_dim:
        out.append(reg)
    return out


def _random_vector(H, rng: np.random.Generator) -> np.ndarray:
    return H.field.random(rng, (H.dim,))


def random_module(H, rng: np.random.Generator, side: str = "left", max_dim: Optional[int] = None) -> HModule:
    """A direct sum of small cyclic pieces, in a random basis."""
    max_dim = max_dim or get_settings().max_module_dim
    pieces = _pieces(H, side, rng, max_dim)
    M = pieces[int(rng.integers(len(pieces)))]
    while True:
        fitting = [P for P in pieces if M.dim + P.dim <= max_dim]
        if not fitting or rng.random() < 0.5:
            break
        M = direct_sum(M, fitting[int(rng.integers(len(fitting)))])
    M = change_basis(M, random_invertible(H.field, rng, M.dim))
    return HModule(H, M.action, side, name=f"M{int(rng.integers(1000))}")


def _ll_pieces(H, rng: np.random.Generator, max_dim: int) -> List[YDModule]:
    """k, the adjoint module, their tensor products and cyclic YD submodules of ad (x) ad that fit in max_dim."""
    out = [trivial_yd(H, "LL")]
    if H.dim > max_dim and H.dim * H.dim > TENSOR_PIECE_LIMIT:
        return out
    ad = adjoint_yd_module(H)
    if H.dim <= max_dim:
        out += [ad, yd_tensor(out[0], ad), yd_tensor(ad, out[0])]
    if H.dim * H.dim <= TENSOR_PIECE_LIMIT:
        square = yd_tensor(ad, ad)
        F = H.field
        generators = [F.eye(square.dim)[:, i] for i in range(square.dim)] + [F.random(rng, (square.dim,))]
        for v in generators:
            if F.is_zero(v):
                continue
            sub = yd_cyclic_submodule(square, v)
            if sub.dim <= max_dim:
                out.append(sub)
    return out


def random_ll_module(H, rng: np.random.Generator, qt=None, max_dim: Optional[int] = None) -> YDModule:
    """An LL module: an R-matrix embedding of a random module when qt is given
    (with R or its reverse), otherwise a sum of the pieces from ``_ll_pieces``."""
    max_dim = max_dim or get_settings().max_module_dim
    if qt is not None:
        which = qt if rng.random() < 0.5 else qt.reverse()
        return qt_embed(random_module(H, rng, "left", max_dim), which)
    pieces = _ll_pieces(H, rng, max_dim)
    M = pieces[int(rng.integers(len(pieces)))]
    while True:
        fitting = [P for P in pieces if M.dim + P.dim <= max_dim]
        if not fitting or rng.random() < 0.5:
            break
        M = yd_direct_sum(M, fitting[int(rng.integers(len(fitting)))])
    return yd_change_basis(M, random_invertible(H.field, rng, M.dim)).renamed(f"Y{int(rng.integers(1000))}")


def random_yd_module(H, flavor: str, rng: np.random.Generator, qt=None, max_dim: Optional[int] = None) -> YDModule:
    """A module of the given flavor, transported from a random LL one through the flavor functors."""
    M = random_ll_module(H, rng, qt, max_dim)
    if flavor == "LL":
        return M
    if flavor == "LR":
        return functor_F_inv(M)
    if flavor == "RR":
        return functor_K(M)
    if flavor == "RL":
        return functor_G_inv(functor_F_inv(M))
    raise ValueError(f"unknown flavor '{flavor}'")


def sample_yd_modules(H, flavor: str, rng: np.random.Generator, count: int, qt=None) -> List[YDModule]:
    out = [random_yd_module(H, flavor, rng, qt) for _ in range(count)]
    logger.debug(f"Sampled {count} {flavor} modules over {H.name}")
    return out
