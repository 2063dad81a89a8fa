import pytest

from cattkit import catt, gsett, pasting
from cattkit.errors import (
    AnnotationMismatch,
    KernelError,
    NotPasting,
    SideConditionFailedSource,
    SideConditionFailedTarget,
    SubstitutionIllTyped,
    TypeNotArrow,
)
from cattkit.syntax import (
    OBJ,
    Arr,
    Coh,
    Var,
    compose_sub,
    dim_ctx,
    dim_ty,
    identity_sub,
    subst_tm,
    subst_ty,
)
from helpers import (
    COMP_COH,
    COMP_CTX,
    FIG7D,
    IDENTITY_COH,
    WALKING,
    all_subs,
    arrow_types,
    small_psctxs,
    sub_pool,
)


def test_identity_coherence_checks():
    d = catt.check_ctx((OBJ,))
    catt.check_coh(d, IDENTITY_COH, Arr(OBJ, Var(0), Var(0)))


def test_one_composition_checks():
    d = catt.check_ctx(COMP_CTX)
    catt.check_coh(d, COMP_COH, Arr(OBJ, Var(0), Var(3)))


def test_composition_with_wrong_target_fails():
    d = catt.check_ctx(COMP_CTX)
    bad = Coh(COMP_CTX, Arr(OBJ, Var(0), Var(1)), identity_sub(5))
    with pytest.raises(SideConditionFailedTarget) as err:
        catt.check_coh(d, bad, Arr(OBJ, Var(0), Var(1)))
    assert err.value.boundary_vars == {3}
    assert err.value.required_vars == {1}


def test_low_dimensional_coherence_over_high_context_fails():
    # dim G > dim A + 1 can never satisfy the side condition
    d = catt.check_ctx(FIG7D)
    bad = Coh(FIG7D, Arr(OBJ, Var(0), Var(5)), identity_sub(7))
    with pytest.raises((SideConditionFailedSource, SideConditionFailedTarget)):
        catt.check_coh(d, bad, Arr(OBJ, Var(0), Var(5)))


def test_not_pasting_and_not_arrow_and_annotation():
    d = catt.check_ctx((OBJ,))
    with pytest.raises(NotPasting):
        catt.check_coh(d, Coh((OBJ, OBJ), Arr(OBJ, Var(0), Var(1)), (Var(0), Var(0))), OBJ)
    with pytest.raises(TypeNotArrow):
        catt.check_coh(d, Coh((OBJ,), OBJ, (Var(0),)), OBJ)
    with pytest.raises(AnnotationMismatch):
        two = catt.check_ctx((OBJ, OBJ))
        t = Coh((OBJ,), Arr(OBJ, Var(0), Var(0)), (Var(0),))
        catt.check_coh(two, t, Arr(OBJ, Var(1), Var(1)))


def test_ill_typed_substitution():
    d = catt.check_ctx(WALKING)
    bad = Coh((OBJ,), Arr(OBJ, Var(0), Var(0)), (Var(2),))  # f is not an object
    with pytest.raises(SubstitutionIllTyped):
        catt.check_coh(d, bad, subst_ty(bad.ty, bad.sub))


def test_gsett_valid_remains_catt_valid():
    for ctx in small_psctxs(7) + (WALKING, COMP_CTX, (OBJ, Arr(OBJ, Var(0), Var(0)))):
        gsett.check_ctx(ctx)
        catt.check_ctx(ctx)
        g = catt.check_ctx(ctx)
        for a in ctx:
            gsett.check_ty(gsett.check_ctx(ctx), a)
            catt.check_ty(g, a)


def test_identity_instance_in_walking_arrow():
    d = catt.check_ctx(WALKING)
    inst = Coh((OBJ,), Arr(OBJ, Var(0), Var(0)), (Var(0),))
    catt.check_tm(d, inst, Arr(OBJ, Var(0), Var(0)))


def test_nested_coherence_endpoints():
    # a 2-cell type whose endpoints are coherence terms: the 2-identity on
    # the 1-identity of x
    d = catt.check_ctx((OBJ,))
    idx = Coh((OBJ,), Arr(OBJ, Var(0), Var(0)), (Var(0),))
    ty2 = Arr(Arr(OBJ, Var(0), Var(0)), idx, idx)
    t2 = Coh((OBJ,), ty2, (Var(0),))
    catt.check_coh(d, t2, ty2)


def test_checked_coh_stable_under_substitution():
    count = 0
    for checked_sub in sub_pool():
        cod = checked_sub.cod.ctx
        dom = checked_sub.dom.ctx
        dchk = catt.check_ctx(cod)
        echk = catt.check_ctx(dom)
        for psctx, a in [((OBJ,), Arr(OBJ, Var(0), Var(0)))]:
            for gamma in all_subs(cod, psctx, 0):
                t = Coh(psctx, a, gamma)
                ty = subst_ty(a, gamma)
                catt.check_tm(dchk, t, ty)
                t2 = subst_tm(t, checked_sub.sub)
                ty2 = subst_ty(ty, checked_sub.sub)
                catt.check_tm(echk, t2, ty2)
                assert t2 == Coh(psctx, a, compose_sub(gamma, checked_sub.sub))
                count += 1
    assert count > 50


def test_unified_equivalent_to_two_variant_formulation():
    # property test over all pasting contexts of dim <= 2 with <= 7
    # variables and every arrow type over them
    checked_any = 0
    for ctx in small_psctxs(7, max_dim=2):
        g = pasting.check_ps(ctx)
        d = catt.check_ctx(ctx)
        for a in arrow_types(ctx):
            want = catt.fig4_side_condition(g, a)
            term = Coh(ctx, a, identity_sub(len(ctx)))
            try:
                catt.check_coh(d, term, a)
                got = True
            except (SideConditionFailedSource, SideConditionFailedTarget):
                got = False
            assert got == want, (ctx, a)
            checked_any += 1
    assert checked_any > 80


def test_determinism_of_checking():
    d = catt.check_ctx(COMP_CTX)
    a = catt.check_coh(d, COMP_COH, Arr(OBJ, Var(0), Var(3)))
    b = catt.check_coh(d, COMP_COH, Arr(OBJ, Var(0), Var(3)))
    assert a == b
