"""Left and right H-modules: tensor products, associators, duals and the QT braiding."""
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np
from loguru import logger

from qhopf.core import linalg
from qhopf.core.linear_map import LinearMap
from qhopf.core.tensor import AlgebraElement, compare
from qhopf.utils.errors import ConsistencyFailure, DimensionMismatch, FlavorMismatch
from qhopf.utils.reports import IdentityResult, VerificationReport

SIDES = ("left", "right")


@dataclass(frozen=True, eq=False)
class HModule:
    """A finite-dimensional module given by one d x d matrix per basis element of H.

    For a left module ``action[h]`` is the matrix of v -> e_h . v; for a right
    module it is the matrix of v -> v . e_h.
    """

    H: object
    action: np.ndarray
    side: str = "left"
    name: str = "M"

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be 'left' or 'right', got '{self.side}'")
        n = self.H.dim
        if self.action.ndim != 3 or self.action.shape[0] != n or self.action.shape[1] != self.action.shape[2]:
            raise DimensionMismatch(f"module action must have shape ({n}, d, d), got {self.action.shape}")

    @property
    def field(self):
        return self.H.field

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    def matrix_of(self, h: AlgebraElement) -> np.ndarray:
        """The d x d matrix by which h acts."""
        return self.field.reduce(np.tensordot(h.coeffs, self.action, axes=(0, 0)))

    def identity(self) -> LinearMap:
        return LinearMap.identity(self.field, self.dim)

    def __repr__(self) -> str:
        return f"HModule({self.name}, {self.side}, dim {self.dim})"


@dataclass(frozen=True, eq=False)
class ModuleMorphism:
    src: HModule
    dst: HModule
    map: LinearMap

    def __matmul__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        return ModuleMorphism(other.src, self.dst, self.map @ other.map)


@dataclass(frozen=True, eq=False)
class DualData:
    dual: HModule
    ev: LinearMap
    coev: LinearMap
    side: str
    report: VerificationReport


def _same_side(*modules: HModule) -> None:
    sides = {m.side for m in modules}
    if len(sides) != 1:
        raise FlavorMismatch(f"cannot combine modules of sides {sorted(sides)}")


# ----------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------
def regular_module(H, side: str = "left") -> HModule:
    """H acting on itself by multiplication."""
    if side == "left":
        action = np.transpose(H.mult, (0, 2, 1)).copy()
    else:
        action = np.transpose(H.mult, (1, 2, 0)).copy()
    return HModule(H, action, side, name=f"{H.name}_reg")


def trivial_module(H, side: str = "left") -> HModule:
    """The unit object k, with h acting as eps(h)."""
    return HModule(H, H.counit.reshape(-1, 1, 1).copy(), side, name="k")


def direct_sum(M: HModule, N: HModule) -> HModule:
    _same_side(M, N)
    F = M.field
    d1, d2 = M.dim, N.dim
    action = F.zeros((M.H.dim, d1 + d2, d1 + d2))
    action[:, :d1, :d1] = M.action
    action[:, d1:, d1:] = N.action
    return HModule(M.H, action, M.side, name=f"({M.name}+{N.name})")


def change_basis(M: HModule, P: np.ndarray) -> HModule:
    """The module transported along the invertible matrix P (new coordinates = P^{-1} old)."""
    F = M.field
    Pinv = linalg.inverse(F, P)
    action = np.stack([linalg.matmul(F, linalg.matmul(F, Pinv, M.action[h]), P) for h in range(M.H.dim)])
    return HModule(M.H, action, M.side, name=M.name)


def submodule(M: HModule, basis: np.ndarray, name: Optional[str] = None) -> HModule:
    """Restriction of M to the invariant subspace spanned by the columns of ``basis``."""
    F = M.field
    blocks = []
    for h in range(M.H.dim):
        image = linalg.matmul(F, M.action[h], basis)
        blocks.append(linalg.solve(F, basis, image))
    return HModule(M.H, np.stack(blocks), M.side, name=name or f"sub({M.name})")


def cyclic_submodule(M: HModule, v: np.ndarray) -> HModule:
    """H . v inside M."""
    F = M.field
    span = F.reduce(np.tensordot(M.action, v, axes=(2, 0)).T)
    red, pivots = linalg.row_reduce(F, span.T.copy())
    basis = F.array(red[:len(pivots)].T)
    return submodule(M, basis, name=f"H.v<{M.name}")


# ----------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------
def verify_module(M: HModule) -> VerificationReport:
    F = M.field
    H = M.H
    d = M.dim
    report = VerificationReport(subject=f"{M.side} module {M.name}")
    P = H.program
    lhs = P().ident("a", "i").ident("b", "j").mul("a", "b").ident("m", "mi", d).act("a", "m", M.action) \
        .output("m", "mi", "i", "j").run()
    first, second = ("b", "a") if M.side == "left" else ("a", "b")
    rhs = P().ident("a", "i").ident("b", "j").ident("m", "mi", d).act(first, "m", M.action) \
        .act(second, "m", M.action).output("m", "mi", "i", "j").run()
    report.add(compare(F, "representation", lhs, rhs, 2))
    report.add(compare(F, "unit acts as identity", M.matrix_of(H.one()), F.eye(d)))
    return report


def verify_morphism(f: ModuleMorphism) -> VerificationReport:
    F = f.src.field
    report = VerificationReport(subject=f"morphism {f.src.name} -> {f.dst.name}")
    m = f.map.matrix
    if m.shape != (f.dst.dim, f.src.dim):
        raise DimensionMismatch(f"map of shape {m.shape} between modules of dims {f.src.dim}, {f.dst.dim}")
    lhs = F.reduce(np.tensordot(m, f.src.action, axes=(1, 1)).transpose(1, 0, 2))
    rhs = F.reduce(np.tensordot(f.dst.action, m, axes=(2, 0)))
    report.add(compare(F, "intertwines action", lhs, rhs))
    return report


def intertwiner_space(field, src: np.ndarray, dst: np.ndarray) -> List[np.ndarray]:
    """All f with f src[k] = dst[k] f for every k, as a basis of dN x dM matrices."""
    dm, dn = src.shape[1], dst.shape[1]
    rows = []
    for k in range(src.shape[0]):
        # vec(f A) - vec(B f) with row-major vec
        rows.append(field.reduce(linalg.kron(field, field.eye(dn), src[k].T.copy())
                                 - linalg.kron(field, dst[k], field.eye(dm))))
    basis = linalg.nullspace(field, np.concatenate(rows, axis=0))
    return [basis[:, j].reshape(dn, dm).copy() for j in range(basis.shape[1])]


def hom_space(M: HModule, N: HModule) -> List[np.ndarray]:
    """A basis of Hom_H(M, N), each element a dN x dM matrix."""
    _same_side(M, N)
    return intertwiner_space(M.field, M.action, N.action)


def random_morphism(M: HModule, N: HModule, rng: np.random.Generator) -> ModuleMorphism:
    F = M.field
    out = F.zeros((N.dim, M.dim))
    for b in hom_space(M, N):
        out = F.reduce(out + b * F.scalar(int(rng.integers(-3, 4))))
    return ModuleMorphism(M, N, LinearMap(F, out))


# ----------------------------------------------------------------------
# monoidal structure
# ----------------------------------------------------------------------
def tensor_modules(M: HModule, N: HModule) -> HModule:
    """h . (m (x) n) = h_1 . m (x) h_2 . n (and the mirror formula on the right)."""
    _same_side(M, N)
    if M.H is not N.H:
        raise DimensionMismatch("modules over different algebras")
    H = M.H
    arr = (H.program().ident("h", "hi").delta("h", "a", "b")
           .ident("m", "mi", M.dim).ident("n", "ni", N.dim)
           .act("a", "m", M.action).act("b", "n", N.action)
           .output("hi", "m", "n", "mi", "ni").run())
    action = arr.reshape(H.dim, M.dim * N.dim, M.dim * N.dim)
    return HModule(H, action, M.side, name=f"{M.name}{N.name}")


def associator_map(U: HModule, V: HModule, W: HModule, inverse: bool = False) -> LinearMap:
    """a_{U,V,W} (or its inverse) on the common coordinate space U (x) V (x) W.

    Left modules use Phi, right modules Phi^{-1}.
    """
    _same_side(U, V, W)
    H = U.H
    use_phi = (U.side == "left") != inverse
    element = H.phi if use_phi else H.phi_inv
    mat = (H.program().ident("u", "ui", U.dim).ident("v", "vi", V.dim).ident("w", "wi", W.dim)
           .act_legwise(element, ("u", U), ("v", V), ("w", W))
           .output("u", "v", "w", "ui", "vi", "wi").matrix(3))
    return LinearMap(U.field, mat)


def associator(U: HModule, V: HModule, W: HModule) -> ModuleMorphism:
    src = tensor_modules(tensor_modules(U, V), W)
    dst = tensor_modules(U, tensor_modules(V, W))
    return ModuleMorphism(src, dst, associator_map(U, V, W))


def check_pentagon(U, V, W, X, assoc: Callable = associator_map, tensor: Callable = tensor_modules,
                   tag: str = "pentagon"):
    """a_{U,V,W(x)X} a_{U(x)V,W,X} = (U (x) a_{V,W,X}) a_{U,V(x)W,X} (a_{U,V,W} (x) X)."""
    F = U.field
    ident = lambda M: LinearMap.identity(F, M.dim)
    lhs = assoc(U, V, tensor(W, X)) @ assoc(tensor(U, V), W, X)
    rhs = ident(U).tensor(assoc(V, W, X)) @ assoc(U, tensor(V, W), X) @ assoc(U, V, W).tensor(ident(X))
    return compare(F, tag, lhs.matrix, rhs.matrix)


def check_hexagons(U, V, W, braid: Callable, assoc: Callable = associator_map,
                   tensor: Callable = tensor_modules, prefix: str = "hexagon") -> VerificationReport:
    """Both hexagon identities for a braiding ``braid(X, Y): X (x) Y -> Y (x) X``."""
    F = U.field
    ident = lambda M: LinearMap.identity(F, M.dim)
    inv = lambda X, Y, Z: assoc(X, Y, Z, inverse=True)
    report = VerificationReport(subject=f"hexagons on {U.name}, {V.name}, {W.name}")
    lhs = assoc(V, W, U) @ braid(U, tensor(V, W)) @ assoc(U, V, W)
    rhs = ident(V).tensor(braid(U, W)) @ assoc(V, U, W) @ braid(U, V).tensor(ident(W))
    report.add(compare(F, f"{prefix} (1)", lhs.matrix, rhs.matrix))
    lhs = inv(W, U, V) @ braid(tensor(U, V), W) @ inv(U, V, W)
    rhs = braid(U, W).tensor(ident(V)) @ inv(U, W, V) @ ident(U).tensor(braid(V, W))
    report.add(compare(F, f"{prefix} (2)", lhs.matrix, rhs.matrix))
    return report


def check_associator_naturality(f: ModuleMorphism, g: ModuleMorphism, h: ModuleMorphism):
    """a_{U',V',W'} ((f (x) g) (x) h) = (f (x) (g (x) h)) a_{U,V,W}."""
    F = f.src.field
    fgh = f.map.tensor(g.map).tensor(h.map)
    lhs = associator_map(f.dst, g.dst, h.dst) @ fgh
    rhs = fgh @ associator_map(f.src, g.src, h.src)
    return compare(F, "associator natural", lhs.matrix, rhs.matrix)


# ----------------------------------------------------------------------
# rigidity
# ----------------------------------------------------------------------
def dual_module(M: HModule, side: str = "left_dual") -> DualData:
    """V* (left dual) or *V (right dual) with ev/coev, checked against both snake identities."""
    if M.side != "left":
        raise FlavorMismatch("duals are built for left modules")
    H = M.H
    F = M.field
    d = M.dim
    if side == "left_dual":
        # <h . phi, v> = <phi, S(h) v>
        twisted = np.tensordot(H.antipode, M.action, axes=(0, 0))
        alpha, beta = M.matrix_of(H.alpha), M.matrix_of(H.beta)
    elif side == "right_dual":
        twisted = np.tensordot(H.antipode_inv, M.action, axes=(0, 0))
        alpha, beta = M.matrix_of(H.Sinv(H.alpha)), M.matrix_of(H.Sinv(H.beta))
    else:
        raise ValueError(f"side must be left_dual or right_dual, got '{side}'")
    dual_action = F.reduce(np.transpose(twisted, (0, 2, 1))).copy()
    dual = HModule(H, dual_action, "left", name=f"{M.name}*" if side == "left_dual" else f"*{M.name}")

    ev = F.zeros((1, d * d))
    coev = F.zeros((d * d, 1))
    for i in range(d):
        for j in range(d):
            if side == "left_dual":
                # ev(v^i (x) v_j) = v^i(alpha v_j); coev(1) = beta v_i (x) v^i
                ev[0, i * d + j] = alpha[i, j]
                coev[i * d + j, 0] = beta[i, j]
            else:
                # ev'(v_j (x) v^i) = v^i(S^-1(alpha) v_j); coev'(1) = v^i (x) S^-1(beta) v_i
                ev[0, j * d + i] = alpha[i, j]
                coev[i * d + j, 0] = beta[j, i]
    data = DualData(dual=dual, ev=LinearMap(F, ev), coev=LinearMap(F, coev), side=side,
                    report=VerificationReport(subject=f"{side} of {M.name}"))
    data.report.merge(check_snakes(M, data))
    if not data.report.passed:
        bad = data.report.failures()[0]
        raise ConsistencyFailure(bad.tag, bad.detail, bad.lhs, bad.rhs)
    return data


def zigzag_matrix(M: HModule, data: DualData, which: int) -> np.ndarray:
    """Snake composite ``which`` (0 on M, 1 on the dual) as one contraction; no d^3 x d^3 associator is built."""
    H = M.H
    d = M.dim
    left = data.side == "left_dual"
    # coev lands in M (x) D for left duals and in D (x) M for right duals
    coev_mods = (M, data.dual) if left else (data.dual, M)
    mods = {"coev1": coev_mods[0], "coev2": coev_mods[1], "x": M if which == 0 else data.dual}
    if left == (which == 1):
        element, legs, ev_legs, out = H.phi_inv, ("x", "coev1", "coev2"), ("x", "coev1"), "coev2"
    else:
        element, legs, ev_legs, out = H.phi, ("coev1", "coev2", "x"), ("coev2", "x"), "coev1"
    return (H.program().ident("x", "xi", d).load(data.coev.matrix.reshape(d, d), "coev1", "coev2")
            .act_legwise(element, *[(leg, mods[leg]) for leg in legs])
            .load(data.ev.matrix.reshape(d, d), "ev1", "ev2").pair(ev_legs[0], "ev1").pair(ev_legs[1], "ev2")
            .output(out, "xi").matrix(1))


SNAKE_TAGS = {
    "left_dual": ("snake (V ev)(coev V)", "snake (ev V*)(V* coev)"),
    "right_dual": ("snake (ev' V)(V coev')", "snake (*V ev')(coev' *V)"),
}


def check_snakes(M: HModule, data: DualData) -> VerificationReport:
    """The two zig-zag identities for a left or right dual, and ev, coev as module maps."""
    F = M.field
    D = data.dual
    report = VerificationReport(subject=f"snake identities for {D.name}")
    tags = SNAKE_TAGS[data.side]
    report.add(compare(F, tags[0], zigzag_matrix(M, data, 0), F.eye(M.dim)))
    report.add(compare(F, tags[1], zigzag_matrix(M, data, 1), F.eye(D.dim)))
    ev_legs, coev_legs = ((D, M), (M, D)) if data.side == "left_dual" else ((M, D), (D, M))
    report.add(functional_intertwines(*ev_legs, data.ev, "ev intertwines action"))
    report.add(vector_intertwines(*coev_legs, data.coev, "coev intertwines action"))
    return report


def functional_intertwines(U: HModule, V: HModule, ev: LinearMap, tag: str) -> IdentityResult:
    """ev(h_1 . u (x) h_2 . v) = epsilon(h) ev(u (x) v), for ev: U (x) V -> k."""
    H = U.H
    pairing = ev.matrix.reshape(U.dim, V.dim)
    lhs = (H.program().ident("h", "hi").delta("h", "a", "b").ident("u", "ui", U.dim).ident("v", "vi", V.dim)
           .act("a", "u", U.action).act("b", "v", V.action).load(pairing, "e1", "e2").pair("u", "e1").pair("v", "e2")
           .output("hi", "ui", "vi").run())
    return compare(U.field, tag, lhs, U.field.reduce(np.multiply.outer(H.counit, pairing)))


def vector_intertwines(U: HModule, V: HModule, coev: LinearMap, tag: str) -> IdentityResult:
    """h_1 . c^1 (x) h_2 . c^2 = epsilon(h) c, for c = coev(1) in U (x) V."""
    H = U.H
    vec = coev.matrix.reshape(U.dim, V.dim)
    lhs = (H.program().ident("h", "hi").delta("h", "a", "b").load(vec, "u", "v")
           .act("a", "u", U.action).act("b", "v", V.action).output("hi", "u", "v").run())
    return compare(U.field, tag, lhs, U.field.reduce(np.multiply.outer(H.counit, vec)))


def _tagged(report: VerificationReport, prefix: str) -> VerificationReport:
    for r in report.results:
        r.tag = f"{prefix} {r.tag}"
    return report


# ----------------------------------------------------------------------
# braiding from an R-matrix
# ----------------------------------------------------------------------
def braiding_map(M: HModule, N: HModule, R: AlgebraElement) -> LinearMap:
    """c_{M,N}(m (x) n) = R^2 . n (x) R^1 . m."""
    mat = (M.H.program().load(R, "r1", "r2")
           .ident("m", "mi", M.dim).ident("n", "ni", N.dim)
           .act("r2", "n", N.action).act("r1", "m", M.action)
           .output("n", "m", "mi", "ni").matrix(2))
    return LinearMap(M.field, mat)


def qt_braiding(M: HModule, N: HModule, qt) -> ModuleMorphism:
    _same_side(M, N)
    if M.side != "left":
        raise FlavorMismatch("the R-matrix braiding is defined on left modules")
    c = braiding_map(M, N, qt.R)
    logger.debug(f"Braiding c_{{{M.name},{N.name}}} built ({c.dst_dim}x{c.src_dim})")
    return ModuleMorphism(tensor_modules(M, N), tensor_modules(N, M), c)


def check_braiding_naturality(f: ModuleMorphism, g: ModuleMorphism, braid: Callable,
                              tag: str = "braiding natural"):
    """c_{M',N'} (f (x) g) = (g (x) f) c_{M,N}."""
    F = f.src.field
    lhs = braid(f.dst, g.dst) @ f.map.tensor(g.map)
    rhs = g.map.tensor(f.map) @ braid(f.src, g.src)
    return compare(F, tag, lhs.matrix, rhs.matrix)
