from fractions import Fraction

import pytest

from sullivan import models
from sullivan.calibration import calibrate, load_calibration
from sullivan.dga import models_equal, loopify
from sullivan.lie import graded_commutator, jacobi_check
from sullivan.models import (sphere, cpn, big_lambda, loop_lcpn,
                             omega_ls_presentation, product_presentation,
                             conf2_lens, conf2_dga, free_super_lie, a_zero,
                             conf2_alpha_brackets, realize_z, get_builtin)


def test_catalog_entries_build_and_validate():
    for name, entry in models.CATALOG.items():
        obj = entry.build()
        if entry.kind == "model":
            assert obj.check_d_squared() is None, name
        assert entry.provenance


def test_catalog_lookup_is_forgiving():
    assert get_builtin("Lambda4").name == "Lambda4"
    assert get_builtin("lambda-4").name == "Lambda4"
    assert get_builtin("CONF2-LENS-7-2").name == "conf2-lens-7-2"
    with pytest.raises(KeyError):
        get_builtin("nope")


def test_sphere_models():
    s3 = sphere(3)
    assert s3.algebra.gens == (("x", 3),) and not s3.differential
    s4 = sphere(4)
    assert s4.d_of("y") == s4.algebra.gen("x") ** 2
    s2 = sphere(2)
    assert s2.algebra.degrees == (2, 3)
    with pytest.raises(ValueError):
        sphere(1)


def test_cpn_models():
    assert models_equal(cpn(1), sphere(2))
    c2 = cpn(2)
    assert c2.d_of("y") == c2.algebra.gen("x") ** 3
    c5 = cpn(5)
    assert c5.d_of("y") == c5.algebra.gen("x") ** 6


def test_big_lambda_degrees_and_differential():
    for l in (1, 2, 3):
        m = big_lambda(l)
        assert m.algebra.degrees == (2 * l, 2 * l - 1, 4 * l - 1, 4 * l - 2)
        assert m.d_of("x2") == m.algebra.gen("x1") ** 2
        assert m.d_of("y2") == \
            (m.algebra.gen("x1") * m.algebra.gen("y1")).scale(-2)
        assert models_equal(loopify(sphere(2 * l)), m)


def test_loop_lcpn():
    assert models_equal(loop_lcpn(1), big_lambda(1))
    m = loop_lcpn(2)
    alg = m.algebra
    assert m.d_of("y2") == (alg.gen("x1") ** 2 * alg.gen("y1")).scale(-3)


def test_omega_ls_table():
    t = omega_ls_presentation(2)
    assert [d for _, d in t.basis] == [3, 2, 6, 5]
    assert t.bracket(t.index["x1"], t.index["x1"]) == {t.index["x2"]: 1}
    assert t.bracket(t.index["x1"], t.index["y1"]) == \
        {t.index["y2"]: Fraction(-1, 2)}
    for (i, j) in [(1, 2), (2, 3), (0, 2), (0, 3), (1, 3), (1, 1)]:
        assert not t.bracket(i, j)
    with pytest.raises(ValueError):
        omega_ls_presentation(1)


def test_product_table():
    t = product_presentation(2)
    assert t.bracket(t.index["alpha1"], t.index["alpha1"]) == \
        {t.index["alpha2"]: 1}
    assert t.uea_dimension(2) == 1  # just beta1
    words = t.words_of_degree(2)
    assert [t.word_str(w) for w in words] == ["beta1"]


def test_conf2_alpha_bracket_pattern():
    combos = conf2_alpha_brackets()
    assert combos[2] == {(4, 1, 2): 1, (4, 1, 6): 1}
    assert combos[4] == {(6, 3, 4): 1, (6, 3, 1): 1}
    assert combos[6] == {(1, 5, 6): 1, (1, 5, 3): 1}
    # the entries with a dependent index expand through -(a1+...+a6)
    assert combos[3] == {(5, 2, 3): 1,
                         (5, 2, 1): -1, (5, 2, 2): -1, (5, 2, 4): -1,
                         (5, 2, 5): -1, (5, 2, 6): -1}
    assert sum(1 for _ in combos[1]) == 12
    assert sum(1 for _ in combos[5]) == 12


def test_conf2_table_shape():
    t = conf2_lens(2, route="table")
    assert t.quotient_dimension(3) == 70
    assert len(t.basis) == 6 + 1 + 21 + 216
    assert jacobi_check(t, 3) is None
    assert [t.names[i] for i in t.generators] == \
        [f"a{i}" for i in range(1, 7)] + ["alpha"]


def test_conf2_y_bracket_values():
    t = conf2_lens(2, route="table")
    raw = t.bracket(t.index["a2"], t.index["y34"], raw=True)
    assert raw == {t.index["z234"]: 1, t.index["z342"]: -1}


def test_calibration_rederivation_matches_stored():
    assert calibrate() == load_calibration() == (Fraction(1, 3), Fraction(1, 3))


def test_z_realization_kills_the_relations():
    shell = free_super_lie(6)
    for (i, j, k) in [(1, 2, 3), (2, 5, 2), (4, 1, 6), (3, 3, 2)]:
        z = realize_z(shell, (i, j, k))
        zr = realize_z(shell, (k, j, i))
        assert (z + zr).is_zero()                       # antisymmetry
        assert realize_z(shell, (i, j, i)).is_zero()    # z_iji = 0
        jac = realize_z(shell, (i, j, k)) + realize_z(shell, (j, k, i)) \
            + realize_z(shell, (k, i, j))
        assert jac.is_zero()                            # Jacobi sum


def test_routes_agree_on_all_brackets_through_degree_three():
    """The structure-constant table and the tensor realization must agree."""
    table = conf2_lens(2, route="table")
    tensor = conf2_lens(2)
    shell_letters = {f"a{i}": tensor.letter(f"a{i}") for i in range(1, 7)}

    def realize_lie(elt_raw):
        out = tensor.zero()
        for idx, c in elt_raw.items():
            name = table.names[idx]
            if name.startswith("z"):
                i, j, k = (int(ch) for ch in name[1:])
                out = out + realize_z(tensor, (i, j, k)).scale(c)
            elif name.startswith("y"):
                i, j = (int(ch) for ch in name[1:])
                out = out + graded_commutator(shell_letters[f"a{i}"],
                                              shell_letters[f"a{j}"]).scale(c)
            elif name == "alpha":
                out = out + tensor.letter("alpha").scale(c)
            else:
                out = out + shell_letters[name].scale(c)
        return out

    def realize_basis(i):
        return realize_lie({i: Fraction(1)})

    checked = 0
    for i in range(len(table.basis)):
        for j in range(i, len(table.basis)):
            if table.degrees[i] + table.degrees[j] > 3:
                continue
            lhs = graded_commutator(realize_basis(i), realize_basis(j))
            rhs = realize_lie(table.bracket(i, j, raw=True))
            assert lhs == rhs, (table.names[i], table.names[j])
            checked += 1
    assert checked >= 6 * 21 + 21 + 6  # a-y pairs, a-a pairs, a-alpha pairs


def test_conf2_tensor_action_realizes_the_tabulated_brackets():
    tensor = conf2_lens(2)
    for m, combo in conf2_alpha_brackets().items():
        expected = tensor.zero()
        for t, c in combo.items():
            expected = expected + realize_z(tensor, t).scale(c)
        got = graded_commutator(tensor.letter(f"a{m}"), tensor.letter("alpha"))
        assert got == expected


def test_a_zero_on_both_routes():
    for pres in (conf2_lens(1), conf2_lens(2), conf2_lens(2, route="table")):
        a0 = a_zero(pres)
        assert a0.degree() == 1
        total = a0
        for i in range(1, 7):
            total = total + pres.letter(f"a{i}")
        assert total.is_zero()


def test_free_super_lie_basics():
    fl = free_super_lie(6)
    assert fl.uea_dimension(2) == 36
    assert len(fl.free_lie_basis(2)) == 21
    k1 = free_super_lie(1)
    assert len(k1.free_lie_basis(2)) == 1


def test_conf2_dga_models():
    m1 = conf2_dga(1)
    assert m1.check_d_squared() is None
    assert len(m1.algebra.gens) == 1 + 6 + 21 + 216
    m2 = conf2_dga(2)
    assert m2.check_d_squared() is None
    # truncation: fewer degree-4 generators than the untwisted model
    assert len(m2.algebra.gens) < len(m1.algebra.gens)
    # the twisted equation leaves its trace: some differential touches alpha
    touched = [name for name in m2.algebra.names
               if not m2.d_of(name).is_zero()
               and any(m2.algebra.names[i] == "alpha"
                       for mono in m2.d_of(name).terms for i, _ in mono)]
    assert touched


def test_extract_matches_loop_presentation_positions():
    from sullivan.centers import extract_lie
    for l in (2, 3, 4):
        table = extract_lie(big_lambda(l), maxdeg=12 * l)
        ref = omega_ls_presentation(l)
        got_nonzero = {key for key, v in table.raw_brackets.items() if v}
        ref_nonzero = {(ref.index["x1"], ref.index["x1"]),
                       (ref.index["x1"], ref.index["y1"])}
        assert got_nonzero == ref_nonzero
