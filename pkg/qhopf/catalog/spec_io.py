"""Reading and writing algebra spec files.

A spec file is line oriented; blank lines and ``#`` comments are ignored.
Every other line starts with a keyword followed by whitespace separated
tokens. Basis elements are referred to by name and scalars are exact
("3", "-1/2"; plain integers over a prime field). See
docs/algebra_spec_format.md for the grammar.
"""
import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field as PydanticField

from qhopf.algebra.quasi_hopf import QuasiHopfAlgebra, build_quasi_hopf, verify_antipode, verify_quasi_bialgebra
from qhopf.algebra.quasitriangular import QTStructure, make_qt, verify_qt
from qhopf.categories.hmod import HModule
from qhopf.categories.yd import ACTION_SIDE, FLAVORS, YDModule
from qhopf.core.fields import Field, get_field
from qhopf.core.tensor import AlgebraElement
from qhopf.utils.errors import (ConsistencyFailure, DimensionMismatch, FieldError, NotInvertible, NotQT,
                                SpecParseError, SpecValidationError)

_SCALAR = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")
_TOKEN = re.compile(r"\S+")

# keyword -> number of basis-name indices before the scalar
_ENTRY_KEYWORDS = {
    "mult": 3, "comult": 3, "phi": 3, "unit": 1, "counit": 1, "alpha": 1, "beta": 1,
    "antipode": 2, "antipode_inv": 2, "R": 2,
}
_REQUIRED = ("mult", "unit", "comult", "counit", "phi", "antipode", "antipode_inv", "alpha", "beta")

Entry = Tuple[Tuple[int, ...], str]


class ModuleBlock(BaseModel):
    label: str
    dim: int = PydanticField(ge=1)
    side: str = "left"
    flavor: Optional[str] = None
    action: List[Entry] = PydanticField(default_factory=list)
    coaction: List[Entry] = PydanticField(default_factory=list)


class AlgebraSpec(BaseModel):
    """The raw content of a spec file: indices into ``basis`` and exact scalar strings."""

    field: str = "q"
    name: str = "H"
    basis: List[str] = PydanticField(default_factory=list)
    entries: Dict[str, List[Entry]] = PydanticField(default_factory=dict)
    modules: List[ModuleBlock] = PydanticField(default_factory=list)


@dataclass(frozen=True, eq=False)
class SpecBundle:
    """Everything a spec file describes, built over its field."""

    H: QuasiHopfAlgebra
    R: Optional[AlgebraElement] = None
    qt: Optional[QTStructure] = None
    modules: Dict[str, HModule] = dc_field(default_factory=dict)
    yd_modules: Dict[str, YDModule] = dc_field(default_factory=dict)


# ----------------------------------------------------------------------
# validation
# ----------------------------------------------------------------------
def validate_algebra(H: QuasiHopfAlgebra, R: Optional[AlgebraElement] = None) -> Optional[QTStructure]:
    """Run the quasi-bialgebra and antipode suites (and the R-matrix checks); reject on the first failure."""
    for report in (verify_quasi_bialgebra(H), verify_antipode(H)):
        if not report.passed:
            bad = report.failures()[0]
            raise SpecValidationError(bad.tag, bad.detail)
    try:
        H.twist
        H.pq
    except ConsistencyFailure as e:
        raise SpecValidationError(e.tag, str(e)) from None
    if R is None:
        return None
    report = verify_qt(H, R)
    if not report.passed:
        bad = report.failures()[0]
        raise SpecValidationError(bad.tag, bad.detail)
    try:
        return make_qt(H, R)
    except (ConsistencyFailure, NotQT) as e:
        raise SpecValidationError(getattr(e, "tag", "R-matrix"), str(e)) from None


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------
def _tokens(line: str) -> List[Tuple[str, int]]:
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]


def _scalar(text: str, lineno: int, col: int, path: Optional[str]) -> str:
    if not _SCALAR.match(text):
        raise SpecParseError(f"'{text}' is not an exact scalar (expected an integer or a/b)", lineno, col, path)
    if "/" in text and int(text.split("/")[1]) == 0:
        raise SpecParseError("zero denominator", lineno, col, path)
    return text


def _int(text: str, lineno: int, col: int, path: Optional[str]) -> int:
    if not text.isdigit():
        raise SpecParseError(f"expected a non-negative integer, got '{text}'", lineno, col, path)
    return int(text)


def parse_spec(text: str, path: Optional[str] = None) -> AlgebraSpec:
    spec = AlgebraSpec()
    index: Dict[str, int] = {}
    current: Optional[ModuleBlock] = None
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        key, kcol = toks[0]
        args = toks[1:]

        def need(n: int):
            if len(args) != n:
                col = args[n][1] if len(args) > n else len(line) + 1
                raise SpecParseError(f"'{key}' takes {n} argument(s), got {len(args)}", lineno, col, path)

        if key == "field":
            need(1)
            try:
                spec.field = get_field(args[0][0]).describe()
            except FieldError as e:
                raise SpecParseError(str(e), lineno, args[0][1], path) from None
        elif key == "name":
            need(1)
            spec.name = args[0][0]
        elif key == "basis":
            if spec.basis:
                raise SpecParseError("basis given twice", lineno, kcol, path)
            if not args:
                raise SpecParseError("empty basis", lineno, len(line) + 1, path)
            for tok, col in args:
                if tok in index:
                    raise SpecParseError(f"duplicate basis name '{tok}'", lineno, col, path)
                index[tok] = len(spec.basis)
                spec.basis.append(tok)
        elif key in _ENTRY_KEYWORDS or key in ("action", "coaction"):
            arity = _ENTRY_KEYWORDS.get(key, 3)
            need(arity + 1)
            if not spec.basis:
                raise SpecParseError("basis must be declared before entries", lineno, kcol, path)
            idx = []
            for pos, (tok, col) in enumerate(args[:arity]):
                if key in ("action", "coaction") and pos > 0:
                    idx.append(_int(tok, lineno, col, path))
                    if current is not None and idx[-1] >= current.dim:
                        raise SpecParseError(f"index {tok} out of range for dimension {current.dim}",
                                             lineno, col, path)
                elif tok not in index:
                    raise SpecParseError(f"unknown basis element '{tok}'", lineno, col, path)
                else:
                    idx.append(index[tok])
            value = _scalar(args[arity][0], lineno, args[arity][1], path)
            if key in ("action", "coaction"):
                if current is None:
                    raise SpecParseError(f"'{key}' outside a module block", lineno, kcol, path)
                if key == "coaction" and current.flavor is None:
                    raise SpecParseError("coaction in a plain module block", lineno, kcol, path)
                getattr(current, key).append((tuple(idx), value))
            else:
                spec.entries.setdefault(key, []).append((tuple(idx), value))
        elif key == "module":
            need(3)
            side = args[2][0]
            if side not in ("left", "right"):
                raise SpecParseError(f"side must be left or right, got '{side}'", lineno, args[2][1], path)
            current = ModuleBlock(label=args[0][0], dim=_int(args[1][0], lineno, args[1][1], path), side=side)
            spec.modules.append(current)
        elif key == "yd":
            need(3)
            flavor = args[2][0]
            if flavor not in FLAVORS:
                raise SpecParseError(f"flavor must be one of {', '.join(FLAVORS)}", lineno, args[2][1], path)
            current = ModuleBlock(label=args[0][0], dim=_int(args[1][0], lineno, args[1][1], path),
                                  side=ACTION_SIDE[flavor], flavor=flavor)
            spec.modules.append(current)
        else:
            raise SpecParseError(f"unknown keyword '{key}'", lineno, kcol, path)

    if not spec.basis:
        raise SpecParseError("missing basis", lineno + 1, 1, path)
    for key in _REQUIRED:
        if key not in spec.entries:
            raise SpecParseError(f"missing '{key}' entries", lineno + 1, 1, path)
    return spec


# ----------------------------------------------------------------------
# building
# ----------------------------------------------------------------------
def _dense(F: Field, shape, entries: List[Entry]) -> np.ndarray:
    out = F.zeros(shape)
    for idx, value in entries:
        out[idx] = F.scalar(out[idx] + F.scalar(value))
    return F.reduce(out)


def build_bundle(spec: AlgebraSpec, validate: bool = True) -> SpecBundle:
    """Assemble the algebra (and R, modules); ``validate`` runs the axiom suites first."""
    F = get_field(spec.field)
    n = len(spec.basis)
    e = spec.entries
    shapes = {"mult": (n, n, n), "comult": (n, n, n), "phi": (n, n, n), "unit": (n,), "counit": (n,),
              "alpha": (n,), "beta": (n,), "antipode": (n, n), "antipode_inv": (n, n)}
    try:
        arrays = {k: _dense(F, shape, e[k]) for k, shape in shapes.items()}
    except FieldError as exc:
        raise SpecValidationError("scalars", str(exc)) from None
    # antipode lines read "antipode <src> <dst> c"; matrices are dst x src
    for k in ("antipode", "antipode_inv"):
        arrays[k] = arrays[k].T.copy()
    try:
        H = build_quasi_hopf(F, spec.basis, arrays["mult"], arrays["unit"], arrays["comult"], arrays["counit"],
                             arrays["phi"], arrays["antipode"], arrays["antipode_inv"], arrays["alpha"],
                             arrays["beta"], name=spec.name)
    except ConsistencyFailure as exc:
        raise SpecValidationError(exc.tag, str(exc)) from None
    except (DimensionMismatch, NotInvertible) as exc:
        raise SpecValidationError("structure", str(exc)) from None

    R = AlgebraElement(F, _dense(F, (n, n), e["R"])) if "R" in e else None
    if validate:
        qt = validate_algebra(H, R)
    else:
        qt = None
        if R is not None:
            try:
                qt = make_qt(H, R)
            except (ConsistencyFailure, NotQT, NotInvertible) as exc:
                logger.warning(f"{H.name}: R-matrix not usable ({exc})")

    modules, yd_modules = {}, {}
    for block in spec.modules:
        try:
            action = _dense(F, (n, block.dim, block.dim), block.action)
            coaction = _dense(F, (n, block.dim, block.dim), block.coaction)
        except FieldError as exc:
            raise SpecValidationError(f"module {block.label}", str(exc)) from None
        module = HModule(H, action, block.side, name=block.label)
        if block.flavor is None:
            modules[block.label] = module
        else:
            yd_modules[block.label] = YDModule(block.flavor, module, coaction)
    return SpecBundle(H=H, R=R, qt=qt, modules=modules, yd_modules=yd_modules)


def load_spec_bundle(path, validate: bool = True) -> SpecBundle:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    bundle = build_bundle(parse_spec(text, str(path)), validate=validate)
    logger.info(f"Loaded {bundle.H.describe()} from {path}")
    return bundle


def load_spec(path, validate: bool = True) -> QuasiHopfAlgebra:
    return load_spec_bundle(path, validate).H


# ----------------------------------------------------------------------
# writing
# ----------------------------------------------------------------------
def entry_lines(F: Field, key: str, arr: np.ndarray, names) -> List[str]:
    lines = []
    for idx in np.argwhere(F.reduce(arr) != 0):
        idx = tuple(int(i) for i in idx)
        lines.append(" ".join([key, *(names[i] for i in idx), F.format(arr[idx])]))
    return lines


def map_lines(F: Field, key: str, f, n: int, src_legs: int, dst_legs: int, names) -> List[str]:
    """A linear map H^{(x)src} -> H^{(x)dst} as entry lines, source indices first
    (the convention of mult, comult and antipode)."""
    arr = np.asarray(f.matrix).reshape((n,) * dst_legs + (n,) * src_legs)
    order = list(range(dst_legs, dst_legs + src_legs)) + list(range(dst_legs))
    return entry_lines(F, key, np.transpose(arr, order), names)


def _module_lines(F: Field, arr: np.ndarray, key: str, names) -> List[str]:
    lines = []
    for h, out, inp in np.argwhere(F.reduce(arr) != 0):
        lines.append(f"{key} {names[h]} {out} {inp} {F.format(arr[h, out, inp])}")
    return lines


def dump_spec(H: QuasiHopfAlgebra, R: Optional[AlgebraElement] = None,
              modules: Optional[Dict[str, HModule]] = None,
              yd_modules: Optional[Dict[str, YDModule]] = None) -> str:
    F = H.field
    names = H.basis
    lines = [f"# {H.describe()}", f"field {F.describe()}", f"name {H.name}", "basis " + " ".join(names)]
    for key, arr in (("unit", H.unit), ("counit", H.counit), ("mult", H.mult), ("comult", H.comult),
                     ("phi", H.phi.coeffs), ("antipode", H.antipode.T), ("antipode_inv", H.antipode_inv.T),
                     ("alpha", H.alpha.coeffs), ("beta", H.beta.coeffs)):
        lines.extend(entry_lines(F, key, arr, names))
    if R is not None:
        lines.extend(entry_lines(F, "R", R.coeffs, names))
    for label, M in sorted((modules or {}).items()):
        lines.append(f"module {label} {M.dim} {M.side}")
        lines.extend(_module_lines(F, M.action, "action", names))
    for label, M in sorted((yd_modules or {}).items()):
        lines.append(f"yd {label} {M.dim} {M.flavor}")
        lines.extend(_module_lines(F, M.action, "action", names))
        lines.extend(_module_lines(F, M.coaction, "coaction", names))
    return "\n".join(lines) + "\n"


def save_spec(H: QuasiHopfAlgebra, path, R: Optional[AlgebraElement] = None,
              modules: Optional[Dict[str, HModule]] = None,
              yd_modules: Optional[Dict[str, YDModule]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_spec(H, R, modules, yd_modules), encoding="utf-8")
    logger.debug(f"Wrote {H.name} to {path}")
    return path
