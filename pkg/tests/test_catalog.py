"""The builtin catalog, the cocycle family and the algebra spec file format."""
import pytest

from qhopf.algebra.quasi_hopf import verify_antipode, verify_quasi_bialgebra
from qhopf.catalog.builtins import builtin, builtin_names, default_field_for
from qhopf.catalog.cocycle import cocycle_algebra
from qhopf.catalog.spec_io import (build_bundle, dump_spec, load_spec, load_spec_bundle, parse_spec, save_spec,
                                   validate_algebra)
from qhopf.categories.hmod import regular_module, verify_module
from qhopf.categories.yd import adjoint_yd_module, verify_yd
from qhopf.core.fields import Field
from qhopf.utils.errors import FieldError, SpecParseError, SpecValidationError, UnknownAlgebra

from conftest import ALL_BUILTINS, BUILTIN_FIELDS

KZ2_TEXT = """\
# kZ2 by hand
field q
name kZ2
basis 1 g
unit 1 1
counit 1 1
counit g 1
mult 1 1 1 1
mult 1 g g 1
mult g 1 g 1
mult g g 1 1
comult 1 1 1 1
comult g g g 1
phi 1 1 1 1
antipode 1 1 1
antipode g g 1
antipode_inv 1 1 1
antipode_inv g g 1
alpha 1 1
beta 1 1
"""


def test_catalog_names():
    assert set(builtin_names()) == set(ALL_BUILTINS)
    assert default_field_for("H2_Ri") == "fp:101"
    assert default_field_for("kZ2") == "q"
    with pytest.raises(UnknownAlgebra):
        builtin("kZ3")


@pytest.mark.parametrize("name,field", BUILTIN_FIELDS)
def test_builtins_over_both_fields(name, field):
    H, qt = builtin(name, field)
    assert H.field.describe() == field
    validate_algebra(H, qt.R if qt else None)
    assert builtin(name, field)[0] is H


def test_h2_ri_needs_a_square_root_of_minus_one():
    with pytest.raises(FieldError):
        builtin("H2_Ri", "q")


# ----------------------------------------------------------------------
# cocycle algebras
# ----------------------------------------------------------------------
@pytest.mark.parametrize("n,q,field", [(1, 1, "q"), (2, 1, "q"), (2, 0, "q"), (3, 1, "fp:7"), (3, 2, "fp:7")])
def test_cocycle_algebras_are_quasi_hopf(n, q, field):
    H = cocycle_algebra(n, q, Field.parse(field))
    assert H.name == f"Z{n}^w{q}"
    assert H.basis == tuple(f"d{x}" for x in range(n))
    assert verify_quasi_bialgebra(H).passed
    assert verify_antipode(H).passed


def test_cocycle_needs_roots_of_unity():
    with pytest.raises(FieldError):
        cocycle_algebra(3, 1, Field.rationals())
    with pytest.raises(ValueError):
        cocycle_algebra(0)


def test_nontrivial_cocycle_has_nontrivial_phi(Q):
    H = cocycle_algebra(2, 1, Q)
    assert not H.phi.equals(H.one(3))
    assert H.phi.equals(H.phi_inv)


# ----------------------------------------------------------------------
# spec files
# ----------------------------------------------------------------------
def test_parse_hand_written_file():
    spec = parse_spec(KZ2_TEXT)
    assert spec.basis == ["1", "g"]
    assert spec.entries["mult"][1] == ((0, 1, 1), "1")
    bundle = build_bundle(spec)
    assert bundle.H.name == "kZ2"
    assert bundle.R is None and bundle.qt is None
    assert bundle.H.mult.shape == (2, 2, 2)


@pytest.mark.parametrize("name", ALL_BUILTINS)
def test_dump_and_reload(name, tmp_path):
    H, qt = builtin(name)
    path = save_spec(H, tmp_path / f"{name}.qh", qt.R if qt else None)
    bundle = load_spec_bundle(path)
    assert bundle.H.field == H.field
    assert bundle.H.basis == H.basis
    for attr in ("mult", "comult", "unit", "counit", "antipode", "antipode_inv"):
        assert H.field.equal(getattr(bundle.H, attr), getattr(H, attr)), attr
    assert bundle.H.phi.equals(H.phi)
    assert bundle.H.alpha.equals(H.alpha) and bundle.H.beta.equals(H.beta)
    if qt is not None:
        assert bundle.qt.R.equals(qt.R)
    assert dump_spec(bundle.H, bundle.R) == path.read_text(encoding="utf-8")


def test_modules_in_files(sweedler, tmp_path):
    H, qt = sweedler
    reg = regular_module(H)
    ad = adjoint_yd_module(H)
    path = save_spec(H, tmp_path / "sweedler.qh", qt.R, modules={"reg": reg}, yd_modules={"ad": ad})
    bundle = load_spec_bundle(path)
    assert H.field.equal(bundle.modules["reg"].action, reg.action)
    assert verify_module(bundle.modules["reg"]).passed
    assert bundle.yd_modules["ad"].flavor == "LL"
    assert verify_yd(bundle.yd_modules["ad"]).passed


def test_load_spec_returns_the_algebra(tmp_path):
    path = tmp_path / "kz2.qh"
    path.write_text(KZ2_TEXT, encoding="utf-8")
    assert load_spec(path).basis == ("1", "g")


@pytest.mark.parametrize("bad,line,column", [
    (KZ2_TEXT.replace("mult g g 1 1", "mult g g h 1"), 11, 10),
    (KZ2_TEXT.replace("alpha 1 1", "alpha 1 0.5"), 19, 9),
    (KZ2_TEXT.replace("beta 1 1", "beta 1 1/0"), 20, 8),
    (KZ2_TEXT.replace("basis 1 g", "basis 1 1"), 4, 9),
    (KZ2_TEXT.replace("phi 1 1 1 1", "phi 1 1 1"), 14, 10),
    (KZ2_TEXT.replace("name kZ2", "nmae kZ2"), 3, 1),
    (KZ2_TEXT.replace("field q", "field fp:6"), 2, 7),
])
def test_parse_errors_carry_positions(bad, line, column):
    with pytest.raises(SpecParseError) as info:
        parse_spec(bad, "bad.qh")
    assert (info.value.line, info.value.column) == (line, column)
    assert "bad.qh" in str(info.value)


def test_missing_section_is_a_parse_error():
    text = "\n".join(l for l in KZ2_TEXT.splitlines() if not l.startswith("beta"))
    with pytest.raises(SpecParseError, match="beta"):
        parse_spec(text)


def test_module_blocks_are_checked():
    with pytest.raises(SpecParseError):
        parse_spec(KZ2_TEXT + "module m 1 middle\n")
    with pytest.raises(SpecParseError):
        parse_spec(KZ2_TEXT + "yd m 1 XY\n")
    with pytest.raises(SpecParseError):
        parse_spec(KZ2_TEXT + "module m 1 left\ncoaction 1 0 0 1\n")
    with pytest.raises(SpecParseError):
        parse_spec(KZ2_TEXT + "module m 1 left\naction g 1 0 1\n")


def test_failing_axiom_names_its_tag():
    # alpha beta = 2 breaks (q6)
    spec = parse_spec(KZ2_TEXT.replace("beta 1 1", "beta 1 2"))
    with pytest.raises(SpecValidationError) as info:
        build_bundle(spec)
    assert info.value.tag == "(q6)"
    H = build_bundle(spec, validate=False).H
    assert not verify_antipode(H).get("(q6)").passed


def test_non_coassociative_comultiplication_is_rejected():
    spec = parse_spec(KZ2_TEXT.replace("comult g g g 1", "comult g g g 1\ncomult g 1 1 1"))
    with pytest.raises(SpecValidationError):
        build_bundle(spec)
