import pytest

from cattkit import gsett, pasting
from cattkit.errors import NotAPastingContext
from cattkit.syntax import OBJ, Arr, Var, dim_ctx, vars_of
from helpers import COMP_CTX, FIG7D, dyck_count, small_psctxs


def test_point_is_pasting():
    g = pasting.check_ps((OBJ,))
    assert g.derivation.rule_names() == ("pss", "ps")


def test_fig7_derivation_word():
    g = pasting.check_ps(FIG7D)
    assert g.derivation.rule_names() == (
        "pss", "pse", "pse", "psd", "psd", "pse", "psd", "ps")
    assert g.derivation.word() == "pss·pse·pse·psd·psd·pse·psd·ps"


def test_two_points_fail():
    with pytest.raises(NotAPastingContext):
        pasting.check_ps((OBJ, OBJ))


def test_empty_and_bad_first_entry_fail():
    with pytest.raises(NotAPastingContext):
        pasting.check_ps(())
    with pytest.raises(NotAPastingContext):
        pasting.check_ps((Arr(OBJ, Var(0), Var(0)),))


def test_boundaries_of_fig7():
    g = pasting.check_ps(FIG7D)
    assert pasting.boundary_ctx(g, 0, "-").ctx == (OBJ,)
    assert pasting.boundary_ctx(g, 0, "+").ctx == (OBJ,)
    minus1 = pasting.boundary_ctx(g, 1, "-").ctx
    plus1 = pasting.boundary_ctx(g, 1, "+").ctx
    expected_shape = (OBJ, OBJ, Arr(OBJ, Var(0), Var(1)), OBJ, Arr(OBJ, Var(1), Var(3)))
    assert minus1 == expected_shape
    assert plus1 == expected_shape  # f and g have the same type; they differ as subcontexts
    assert pasting.src_sub(g, 1).sub != pasting.tgt_sub(g, 1).sub


def test_boundary_is_whole_context_at_top_dim():
    for ctx in small_psctxs(7):
        g = pasting.check_ps(ctx)
        d = dim_ctx(ctx)
        for k in (d, d + 1, d + 3):
            assert pasting.boundary_ctx(g, k, "-").ctx == ctx
            assert pasting.boundary_ctx(g, k, "+").ctx == ctx
            assert pasting.src_sub(g, k).sub == tuple(Var(i) for i in range(len(ctx)))
            assert pasting.tgt_sub(g, k).sub == tuple(Var(i) for i in range(len(ctx)))


def test_src_tgt_subs_of_fig7():
    g = pasting.check_ps(FIG7D)
    assert pasting.src_sub(g, 0).sub == (Var(0),)
    assert pasting.tgt_sub(g, 0).sub == (Var(5),)
    assert vars_of(pasting.src_sub(g, 1).sub) == {0, 1, 2, 5, 6}
    assert vars_of(pasting.tgt_sub(g, 1).sub) == {0, 1, 3, 5, 6}


def test_boundary_always_pasting_and_subs_check():
    for ctx in small_psctxs(9):
        g = pasting.check_ps(ctx)
        for k in range(dim_ctx(ctx) + 1):
            for eps in "-+":
                b = pasting.boundary_ctx(g, k, eps)
                pasting.check_ps(b.ctx)  # idempotent witness
            # src/tgt substitutions come back as CheckedSub already
            pasting.src_sub(g, k)
            pasting.tgt_sub(g, k)


def test_boundary_covers_lower_dimensional_variables():
    # the union of the two top boundaries contains every variable of
    # dimension below the top
    from cattkit.syntax import dim_ty

    for ctx in small_psctxs(9):
        top = dim_ctx(ctx)
        if top == 0:
            continue
        g = pasting.check_ps(ctx)
        cover = vars_of(pasting.src_sub(g, top - 1).sub) | vars_of(pasting.tgt_sub(g, top - 1).sub)
        low = {i for i, a in enumerate(ctx) if dim_ty(a) + 1 < top}
        assert low <= cover


def test_globularity_duals():
    # boundaries of boundaries collapse: d_j(d_k G) = d_j G for j < k
    for ctx in small_psctxs(9):
        g = pasting.check_ps(ctx)
        top = dim_ctx(ctx)
        for k in range(top + 1):
            for j in range(k):
                inner = pasting.check_ps(pasting.boundary_ctx(g, k, "-").ctx)
                assert pasting.boundary_ctx(inner, j, "-").ctx == pasting.boundary_ctx(g, j, "-").ctx
                assert pasting.boundary_ctx(inner, j, "+").ctx == pasting.boundary_ctx(g, j, "+").ctx
                inner_t = pasting.check_ps(pasting.boundary_ctx(g, k, "+").ctx)
                assert pasting.boundary_ctx(inner_t, j, "-").ctx == pasting.boundary_ctx(g, j, "-").ctx
                assert pasting.boundary_ctx(inner_t, j, "+").ctx == pasting.boundary_ctx(g, j, "+").ctx


def test_enumerate_psctxs_counts_match_dyck():
    for k in range(5):
        found = pasting.enumerate_psctxs(2 * k + 1)
        assert len(found) == len(set(found)) == dyck_count(k)
        for ctx in found:
            pasting.check_ps(ctx)


def test_derivation_unique_reconstruction():
    # the checker reconstructs one derivation; re-checking is stable
    for ctx in small_psctxs(7):
        a = pasting.check_ps(ctx)
        b = pasting.check_ps(ctx)
        assert a.derivation == b.derivation


def test_comp_ctx_boundaries():
    g = pasting.check_ps(COMP_CTX)
    assert pasting.boundary_ctx(g, 0, "-").ctx == (OBJ,)
    assert pasting.src_sub(g, 0).sub == (Var(0),)
    assert pasting.tgt_sub(g, 0).sub == (Var(3),)
