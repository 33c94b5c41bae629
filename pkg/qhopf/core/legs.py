"""Leg programs: Sweedler-style expressions evaluated as exact tensor contractions.

A program acts on a working tensor whose axes carry string labels ("legs"),
held as separate factors until a step joins them. Each step loads a
constant, contracts legs against the structure tensors of
the ambient algebra (product, coproduct, antipode, counit) or against module
data (actions and coactions), and the final ``output`` step fixes the order
of the remaining legs.

Conventions for the ambient data (basis e_0..e_{n-1}):

    mult[i, j, k]      e_i e_j = sum_k mult[i, j, k] e_k
    comult[i, j, k]    Delta(e_i) = sum_{j,k} comult[i, j, k] e_j (x) e_k
    counit[i]          epsilon(e_i)
    antipode[k, i]     S(e_i) = sum_k antipode[k, i] e_k
    action[h, a, b]    e_h acting on v_b = sum_a action[h, a, b] v_a
    coaction[h, a, b]  v_b -> sum coaction[h, a, b] e_h (x) v_a   (left)
                       v_b -> sum coaction[h, a, b] v_a (x) e_h   (right)

Right actions and right coactions use the same tensors; only the reading of
the formula changes.
"""
from dataclasses import dataclass, field as dc_field
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from qhopf.core.fields import Field
from qhopf.utils.errors import DimensionMismatch


def rank_one_split(field: Field, arr: np.ndarray) -> Optional[Tuple[List[np.ndarray], Any]]:
    """Vectors v_k and a scalar c with arr = c v_1 (x) ... (x) v_k, when arr is a pure tensor.

    Returns None for zero tensors and for tensors of rank above one.
    """
    if arr.ndim < 2:
        return None
    nonzero = np.argwhere(arr != 0)
    if len(nonzero) == 0:
        return None
    idx = tuple(int(i) for i in nonzero[0])
    vectors = []
    for k in range(arr.ndim):
        cut = list(idx)
        cut[k] = slice(None)
        vectors.append(np.asarray(arr[tuple(cut)]))
    scale = field.scalar(field.inv(arr[idx]) ** (arr.ndim - 1))
    rebuilt = np.array(scale, dtype=object if field.dtype is object else np.int64)
    for v in vectors:
        rebuilt = field.reduce(np.multiply.outer(rebuilt, v))
    if not field.equal(rebuilt, arr):
        return None
    return vectors, scale


class _Factor:
    __slots__ = ("array", "labels")

    def __init__(self, array: np.ndarray, labels: List[str]):
        self.array = array
        self.labels = labels


class _State:
    """The working tensor, kept as a product of factors with disjoint legs.

    Loading a tensor only appends a factor; factors are contracted pairwise
    when a step joins their legs, and multiplied out at the ``output`` step.
    """

    __slots__ = ("field", "factors", "scalar")

    def __init__(self, field: Field):
        self.field = field
        self.factors: List[_Factor] = []
        self.scalar = field.one

    @property
    def labels(self) -> List[str]:
        return [l for f in self.factors for l in f.labels]

    def locate(self, label: str) -> Tuple[_Factor, int]:
        for f in self.factors:
            if label in f.labels:
                return f, f.labels.index(label)
        raise DimensionMismatch(f"no leg named '{label}' (legs: {self.labels})")

    def dim(self, label: str) -> int:
        f, axis = self.locate(label)
        return f.array.shape[axis]

    def _absorb(self, factor: _Factor) -> None:
        if factor.labels:
            self.factors.append(factor)
        else:
            self.scalar = self.field.scalar(self.scalar * factor.array.item())

    def _dot(self, a: _Factor, b: _Factor, pairs: Sequence[Tuple[int, int]]) -> _Factor:
        ia, ib = [i for i, _ in pairs], [j for _, j in pairs]
        arr = self.field.reduce(np.tensordot(a.array, b.array, axes=(ia, ib)))
        labels = [l for i, l in enumerate(a.labels) if i not in ia] + [l for j, l in enumerate(b.labels) if j not in ib]
        return _Factor(np.asarray(arr), labels)

    def attach(self, arr: np.ndarray, labels: Sequence[str]) -> None:
        if arr.ndim != len(labels):
            raise DimensionMismatch(f"{arr.ndim}-leg tensor loaded with labels {list(labels)}")
        live = self.labels
        for label in labels:
            if label in live:
                raise DimensionMismatch(f"leg '{label}' is already in use")
        if len(set(labels)) != len(labels):
            raise DimensionMismatch(f"duplicate labels {list(labels)}")
        if self.field.dtype is object and arr.dtype != object:
            arr = arr.astype(object)
        # pure tensors (Phi = 1 (x) 1 (x) 1, f = 1 (x) 1, ...) load as one factor per leg
        split = rank_one_split(self.field, arr)
        if split is None:
            self._absorb(_Factor(arr, list(labels)))
            return
        vectors, scale = split
        self.scale(scale)
        for v, label in zip(vectors, labels):
            self._absorb(_Factor(v, [label]))

    def contract(self, tensor: np.ndarray, legs: Sequence[str], tensor_axes: Sequence[int],
                 new_labels: Sequence[str]) -> None:
        """Contract ``legs`` against ``tensor_axes``; the free axes of ``tensor`` become ``new_labels``."""
        owners = [self.locate(l) for l in legs]
        for label, (f, axis), tax in zip(legs, owners, tensor_axes):
            if f.array.shape[axis] != tensor.shape[tax]:
                raise DimensionMismatch(f"leg '{label}' has dimension {f.array.shape[axis]}, "
                                        f"expected {tensor.shape[tax]}")
        if len(new_labels) != tensor.ndim - len(tensor_axes):
            raise DimensionMismatch(f"{tensor.ndim}-leg tensor contracted on {len(tensor_axes)} legs "
                                    f"cannot produce {list(new_labels)}")
        kept = [l for l in self.labels if l not in legs]
        for label in new_labels:
            if label in kept:
                raise DimensionMismatch(f"leg '{label}' is already in use")

        free = iter(new_labels)
        placeholder = {tax: f"\0{tax}" for tax in tensor_axes}
        current = _Factor(tensor, [placeholder[k] if k in placeholder else next(free) for k in range(tensor.ndim)])
        touched: List[_Factor] = []
        for f, _ in owners:
            if not any(f is t for t in touched):
                touched.append(f)
        for f in touched:
            pairs = [(axis, current.labels.index(placeholder[tax]))
                     for (g, axis), tax in zip(owners, tensor_axes) if g is f]
            current = self._dot(f, current, pairs)
            self.factors = [g for g in self.factors if g is not f]
        self._absorb(current)

    def join(self, labels: Sequence[str]) -> _Factor:
        """Merge the factors owning ``labels`` into one factor."""
        owners: List[_Factor] = []
        for label in labels:
            f, _ = self.locate(label)
            if not any(f is o for o in owners):
                owners.append(f)
        if len(owners) == 1:
            return owners[0]
        arr, labs = owners[0].array, list(owners[0].labels)
        for f in owners[1:]:
            arr = self.field.reduce(np.multiply.outer(arr, f.array))
            labs += f.labels
        merged = _Factor(np.asarray(arr), labs)
        self.factors = [g for g in self.factors if not any(g is o for o in owners)] + [merged]
        return merged

    def act_terms(self, coeffs: np.ndarray, targets: Sequence[Tuple[str, np.ndarray]]) -> None:
        """Act with sum_t coeffs[t] A_1[t_1] (x) ... (x) A_k[t_k] on the target legs.

        Only nonzero coefficients contribute; unit matrices are skipped.
        """
        if coeffs.ndim != len(targets):
            raise DimensionMismatch(f"{coeffs.ndim}-leg element acting on {len(targets)} legs")
        labels = [label for label, _ in targets]
        if len(set(labels)) != len(labels):
            raise DimensionMismatch(f"duplicate target legs {labels}")
        for (label, action), n in zip(targets, coeffs.shape):
            if action.shape[0] != n or action.shape[2] != self.dim(label):
                raise DimensionMismatch(f"action of shape {action.shape} does not fit leg '{label}'")
        split = rank_one_split(self.field, coeffs) if coeffs.ndim > 1 else ([coeffs], self.field.one)
        if split is not None:
            # a pure tensor acts by one matrix per leg, factor by factor
            vectors, scale = split
            self.scale(scale)
            for (label, action), v in zip(targets, vectors):
                mat = self.field.reduce(np.tensordot(v, action, axes=(0, 0)))
                if not self._is_unit(mat):
                    f, ax = self.locate(label)
                    f.array = self._apply(mat, f.array, ax)
            return
        f = self.join(labels)
        axes = [f.labels.index(label) for label in labels]
        total = None
        for idx in zip(*np.nonzero(coeffs != 0)):
            term = f.array
            for ax, (_, action), h in zip(axes, targets, idx):
                if not self._is_unit(action[h]):
                    term = self._apply(action[h], term, ax)
            c = coeffs[idx]
            if c != 1:
                term = term * c
            total = term if total is None else total + term
        f.array = self.field.zeros(f.array.shape) if total is None else np.asarray(self.field.reduce(total))

    def _is_unit(self, mat: np.ndarray) -> bool:
        return self.field.equal(mat, self.field.eye(mat.shape[0]))

    def _apply(self, mat: np.ndarray, arr: np.ndarray, axis: int) -> np.ndarray:
        return np.moveaxis(np.asarray(self.field.reduce(np.tensordot(mat, arr, axes=(1, axis)))), 0, axis)

    def trace(self, left: str, right: str) -> None:
        (fa, i), (fb, j) = self.locate(left), self.locate(right)
        if fa.array.shape[i] != fb.array.shape[j]:
            raise DimensionMismatch(f"cannot pair legs '{left}' and '{right}'")
        if fa is fb:
            arr = self.field.reduce(np.trace(fa.array, axis1=i, axis2=j))
            merged = _Factor(np.asarray(arr), [l for k, l in enumerate(fa.labels) if k not in (i, j)])
        else:
            merged = self._dot(fa, fb, [(i, j)])
        self.factors = [g for g in self.factors if g is not fa and g is not fb]
        self._absorb(merged)

    def scale(self, factor) -> None:
        self.scalar = self.field.scalar(self.scalar * self.field.scalar(factor))

    def rename(self, old: str, new: str) -> None:
        f, axis = self.locate(old)
        if new != old and new in self.labels:
            raise DimensionMismatch(f"leg '{new}' is already in use")
        f.labels[axis] = new

    def permute(self, labels: Sequence[str]) -> None:
        live = self.labels
        if sorted(labels) != sorted(live):
            raise DimensionMismatch(f"output legs {list(labels)} do not match live legs {live}")
        if not labels:
            return
        merged = np.transpose(self.result(), [live.index(l) for l in labels])
        self.factors = [_Factor(merged, list(labels))]
        self.scalar = self.field.one

    def result(self) -> np.ndarray:
        """Multiply the factors out (in order) and apply the pending scalar."""
        dtype = object if self.field.dtype is object else np.int64
        out = np.array(self.scalar, dtype=dtype)
        for f in self.factors:
            out = self.field.reduce(np.multiply.outer(out, f.array))
        return np.asarray(out)


# ----------------------------------------------------------------------
# steps
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Step:
    def run(self, state: _State, program: "LegProgram", inputs: Sequence[np.ndarray]) -> None:
        raise NotImplementedError


@dataclass(frozen=True)
class LoadConstant(Step):
    value: Any
    labels: Tuple[str, ...]

    def run(self, state, program, inputs):
        state.attach(np.asarray(self.value), self.labels)


@dataclass(frozen=True)
class LoadInput(Step):
    slot: int
    labels: Tuple[str, ...]

    def run(self, state, program, inputs):
        if self.slot >= len(inputs):
            raise DimensionMismatch(f"input slot {self.slot} not supplied")
        state.attach(np.asarray(_coeffs(inputs[self.slot])), self.labels)


@dataclass(frozen=True)
class IdentityLegs(Step):
    """Load the identity matrix on (label, in_label): a batch over a basis."""
    label: str
    in_label: str
    dim: int

    def run(self, state, program, inputs):
        state.attach(program.field.eye(self.dim), (self.label, self.in_label))


@dataclass(frozen=True)
class EmbedAt(Step):
    """Load the unit of H on the given legs."""
    labels: Tuple[str, ...]

    def run(self, state, program, inputs):
        for label in self.labels:
            state.attach(program.algebra.unit, (label,))


@dataclass(frozen=True)
class MultiplyLegs(Step):
    labels: Tuple[str, ...]
    out: str

    def run(self, state, program, inputs):
        mult = program.algebra.mult
        current = self.labels[0]
        for i, nxt in enumerate(self.labels[1:]):
            target = self.out if i == len(self.labels) - 2 else f"__mul{i}_{self.out}"
            state.contract(mult, (current, nxt), (0, 1), (target,))
            current = target
        if len(self.labels) == 1 and self.out != current:
            state.rename(current, self.out)


@dataclass(frozen=True)
class CoproductAt(Step):
    label: str
    left: str
    right: str

    def run(self, state, program, inputs):
        state.contract(program.algebra.comult, (self.label,), (0,), (self.left, self.right))


@dataclass(frozen=True)
class ApplyMatrixAt(Step):
    label: str
    matrix: Any

    def run(self, state, program, inputs):
        state.contract(np.asarray(self.matrix), (self.label,), (1,), (self.label,))


@dataclass(frozen=True)
class AntipodeAt(Step):
    label: str
    power: int = 1

    def run(self, state, program, inputs):
        for _ in range(self.power):
            state.contract(program.algebra.antipode, (self.label,), (1,), (self.label,))


@dataclass(frozen=True)
class AntipodeInvAt(Step):
    label: str
    power: int = 1

    def run(self, state, program, inputs):
        for _ in range(self.power):
            state.contract(program.algebra.antipode_inv, (self.label,), (1,), (self.label,))


@dataclass(frozen=True)
class CounitAt(Step):
    label: str

    def run(self, state, program, inputs):
        state.contract(program.algebra.counit, (self.label,), (0,), ())


@dataclass(frozen=True)
class ContractAction(Step):
    """Let the algebra leg act on the module leg; the algebra leg is consumed."""
    alg_label: str
    mod_label: str
    action: Any

    def run(self, state, program, inputs):
        state.contract(np.asarray(self.action), (self.alg_label, self.mod_label), (0, 2),
                       (self.mod_label,))


@dataclass(frozen=True)
class ActLegwise(Step):
    """Let a k-leg element act on k module legs at once, one term per nonzero coefficient."""
    value: Any
    targets: Tuple[Tuple[str, Any], ...]

    def run(self, state, program, inputs):
        state.act_terms(np.asarray(self.value), self.targets)


@dataclass(frozen=True)
class ContractCoaction(Step):
    """Coact on a module leg, producing a new algebra leg."""
    mod_label: str
    alg_label: str
    coaction: Any

    def run(self, state, program, inputs):
        state.contract(np.asarray(self.coaction), (self.mod_label,), (2,),
                       (self.alg_label, self.mod_label))


@dataclass(frozen=True)
class PairLegs(Step):
    """Trace two legs of equal dimension against each other."""
    left: str
    right: str

    def run(self, state, program, inputs):
        state.trace(self.left, self.right)


@dataclass(frozen=True)
class Scale(Step):
    factor: Any

    def run(self, state, program, inputs):
        state.scale(self.factor)


@dataclass(frozen=True)
class RenameLeg(Step):
    old: str
    new: str

    def run(self, state, program, inputs):
        state.rename(self.old, self.new)


@dataclass(frozen=True)
class PermuteLegs(Step):
    labels: Tuple[str, ...]

    def run(self, state, program, inputs):
        state.permute(self.labels)


def _coeffs(value) -> np.ndarray:
    return value.coeffs if hasattr(value, "coeffs") else value


# ----------------------------------------------------------------------
# program
# ----------------------------------------------------------------------
@dataclass
class LegProgram:
    """An ordered list of steps over the legs of one working tensor.

    The builder methods return ``self`` so programs read top to bottom like
    the formula they encode.
    """

    algebra: Any
    steps: List[Step] = dc_field(default_factory=list)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def n(self) -> int:
        return self.algebra.dim

    def _add(self, step: Step) -> "LegProgram":
        self.steps.append(step)
        return self

    def load(self, value, *labels: str) -> "LegProgram":
        return self._add(LoadConstant(_coeffs(value), tuple(labels)))

    def input(self, slot: int, *labels: str) -> "LegProgram":
        return self._add(LoadInput(slot, tuple(labels)))

    def ident(self, label: str, in_label: str, dim: Optional[int] = None) -> "LegProgram":
        return self._add(IdentityLegs(label, in_label, self.n if dim is None else dim))

    def unit(self, *labels: str) -> "LegProgram":
        return self._add(EmbedAt(tuple(labels)))

    def mul(self, *labels: str, out: Optional[str] = None) -> "LegProgram":
        return self._add(MultiplyLegs(tuple(labels), out or labels[0]))

    def delta(self, label: str, left: str, right: str) -> "LegProgram":
        return self._add(CoproductAt(label, left, right))

    def S(self, label: str, power: int = 1) -> "LegProgram":
        return self._add(AntipodeAt(label, power))

    def Sinv(self, label: str, power: int = 1) -> "LegProgram":
        return self._add(AntipodeInvAt(label, power))

    def apply(self, label: str, matrix) -> "LegProgram":
        return self._add(ApplyMatrixAt(label, matrix))

    def eps(self, label: str) -> "LegProgram":
        return self._add(CounitAt(label))

    def act(self, alg_label: str, mod_label: str, action) -> "LegProgram":
        return self._add(ContractAction(alg_label, mod_label, getattr(action, "action", action)))

    def act_legwise(self, element, *targets) -> "LegProgram":
        """``targets`` are (module leg, action) pairs, one per leg of ``element``."""
        pairs = tuple((label, getattr(action, "action", action)) for label, action in targets)
        return self._add(ActLegwise(_coeffs(element), pairs))

    def coact(self, mod_label: str, alg_label: str, coaction) -> "LegProgram":
        return self._add(ContractCoaction(mod_label, alg_label, getattr(coaction, "coaction", coaction)))

    def pair(self, left: str, right: str) -> "LegProgram":
        return self._add(PairLegs(left, right))

    def scale(self, factor) -> "LegProgram":
        return self._add(Scale(factor))

    def rename(self, old: str, new: str) -> "LegProgram":
        return self._add(RenameLeg(old, new))

    def output(self, *labels: str) -> "LegProgram":
        return self._add(PermuteLegs(tuple(labels)))

    def run(self, *inputs) -> np.ndarray:
        return evaluate(self, list(inputs))

    def matrix(self, rows: int, *inputs) -> np.ndarray:
        """Evaluate and fold the first ``rows`` output legs into matrix rows."""
        return as_matrix(evaluate(self, list(inputs)), rows)


def evaluate(program: LegProgram, inputs: Sequence = ()) -> np.ndarray:
    """Run a program; the result carries the legs named by its last ``output``."""
    field = program.field
    state = _State(field)
    for step in program.steps:
        step.run(state, program, inputs)
    if state.labels and not isinstance(program.steps[-1], PermuteLegs):
        raise DimensionMismatch(f"program ends with unordered legs {state.labels}; add an output step")
    return state.result()


def as_matrix(arr: np.ndarray, rows: int) -> np.ndarray:
    shape = arr.shape
    r = int(np.prod(shape[:rows])) if rows else 1
    return arr.reshape(r, -1)
