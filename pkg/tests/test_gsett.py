import pytest

from cattkit import gsett
from cattkit.errors import (
    CohNotAllowedInGSeTT,
    EntryIllTyped,
    IllTypedEntry,
    VariableTypeMismatch,
)
from cattkit.syntax import OBJ, Arr, Var, identity_sub, subst_ty
from helpers import COMP_CTX, FIG7D, IDENTITY_COH, WALKING, all_subs, small_psctxs


def test_empty_context_valid():
    assert gsett.check_ctx(()).ctx == ()


def test_single_object_valid():
    gsett.check_ctx((OBJ,))


def test_loop_entry_valid_and_unbound_entry_fails():
    gsett.check_ctx((OBJ, Arr(OBJ, Var(0), Var(0))))
    with pytest.raises(IllTypedEntry) as err:
        gsett.check_ctx((Arr(OBJ, Var(0), Var(0)),))
    assert err.value.position == 0


def test_check_ty_obj_and_arrow():
    g = gsett.check_ctx((OBJ, OBJ))
    gsett.check_ty(g, OBJ)
    gsett.check_ty(g, Arr(OBJ, Var(0), Var(1)))


def test_check_ty_source_mismatch():
    g = gsett.check_ctx((OBJ, Arr(OBJ, Var(0), Var(0))))
    from cattkit.errors import SourceTypeMismatch

    with pytest.raises(SourceTypeMismatch):
        gsett.check_ty(g, Arr(OBJ, Var(1), Var(1)))


def test_check_tm_lookup_and_mismatch():
    g = gsett.check_ctx((OBJ, Arr(OBJ, Var(0), Var(0))))
    gsett.check_tm(g, Var(0), OBJ)
    with pytest.raises(VariableTypeMismatch):
        gsett.check_tm(g, Var(1), OBJ)


def test_coh_rejected_in_gsett():
    g = gsett.check_ctx(WALKING)
    with pytest.raises(CohNotAllowedInGSeTT):
        gsett.check_tm(g, IDENTITY_COH, Arr(OBJ, Var(0), Var(0)))


def test_check_sub_empty_identity_swap():
    d = gsett.check_ctx(WALKING)
    empty = gsett.check_ctx(())
    gsett.check_sub(d, (), empty)
    two = gsett.check_ctx((OBJ, OBJ))
    gsett.check_sub(two, identity_sub(2), two)
    loop = gsett.check_ctx((OBJ, Arr(OBJ, Var(0), Var(0))))
    with pytest.raises(EntryIllTyped) as err:
        gsett.check_sub(loop, (Var(1), Var(0)), loop)
    assert err.value.position == 0  # an arrow where an object is expected


def test_substitution_lemma():
    # if g : D -> G checks and A checks over G then A[g] checks over D
    count = 0
    for cod in small_psctxs(5):
        cchk = gsett.check_ctx(cod)
        for dom in (WALKING, COMP_CTX, FIG7D):
            dchk = gsett.check_ctx(dom)
            for sub in all_subs(dom, cod, 0):
                checked = gsett.check_sub(dchk, sub, cchk)
                for a in cod + (OBJ,):
                    gsett.check_ty(cchk, a)
                    gsett.check_ty(dchk, subst_ty(a, checked.sub))
                    count += 1
    assert count > 50


def test_weakening_is_literal():
    # levels keep indices stable under extension
    g = gsett.check_ctx(WALKING)
    bigger = gsett.check_ctx(WALKING + (OBJ,))
    a = Arr(OBJ, Var(0), Var(1))
    gsett.check_ty(g, a)
    gsett.check_ty(bigger, a)
