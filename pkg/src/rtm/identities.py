"""Identities relating rooted tree maps, F_f, G_f and the antipode.

Each check computes both sides by separate code paths: the coproduct-driven
evaluation of the maps on one side, the polynomial recursions and products on
the other.
"""

from fractions import Fraction
from typing import Dict, Tuple

from src.forests import Forest, ForestSum, antipode_of, coproduct_of, factorizations
from src.harmonic import WordTensorSum, b_membership, diamond
from src.rtm import cases
from src.rtm.maps import f_poly, g_poly, rtm_apply, rtm_letter, span_rank
from src.rtm.registry import Counterexample, failure, mismatch, register
from src.words import (
    WordSum,
    Z,
    append,
    d,
    in_ax,
    in_ya,
    in_yax,
    left_div_y,
    phi,
    prepend,
    right_div_x,
    rho,
    sigma,
    tau,
)

W = WordSum.word


@register(
    "rtm_diamond_formula",
    "f(wx) = (F_f ⋄ w) x",
    cases.forest_words,
    spot_checks=True,
)
def check_rtm_diamond_formula(case: Tuple[Forest, str]) -> Counterexample:
    forest, word = case
    lhs = rtm_apply(forest, word + "x")
    rhs = append(diamond(f_poly(forest), W(word)), "x")
    return mismatch(lhs, rhs, forest=forest, word=word)


@register(
    "antipode_diamond_formula",
    "S(f)(wx) = (G_f ⋄ w) x",
    cases.forest_words,
    spot_checks=True,
)
def check_antipode_diamond_formula(case: Tuple[Forest, str]) -> Counterexample:
    forest, word = case
    lhs = rtm_apply(antipode_of(forest), word + "x")
    rhs = append(diamond(g_poly(forest), W(word)), "x")
    return mismatch(lhs, rhs, forest=forest, word=word)


@register("g_equals_f_antipode", "G_f = F_S(f)", cases.forests, forest_degree=6)
def check_g_equals_f_antipode(forest: Forest) -> Counterexample:
    return mismatch(g_poly(forest), f_poly(antipode_of(forest)), forest=forest)


@register(
    "antipode_tau_conjugation",
    "S(f) = τ f τ as maps",
    cases.forest_words,
    spot_checks=True,
)
def check_antipode_tau_conjugation(case: Tuple[Forest, str]) -> Counterexample:
    forest, word = case
    lhs = rtm_apply(antipode_of(forest), word)
    rhs = tau(rtm_apply(forest, tau(W(word))))
    return mismatch(lhs, rhs, forest=forest, word=word)


@register("z_commutation", "f(zw) = z f(w) and f(wz) = f(w) z", cases.forest_words)
def check_z_commutation(case: Tuple[Forest, str]) -> Counterexample:
    forest, word = case
    image = rtm_apply(forest, word)
    left = mismatch(rtm_apply(forest, Z * W(word)), Z * image, forest=forest, word=word, side="left")
    if left is not None:
        return left
    return mismatch(rtm_apply(forest, W(word) * Z), image * Z, forest=forest, word=word, side="right")


@register(
    "diamond_coproduct_split",
    "w1 x w2 ⋄ F_f = Σ (F_f' ⋄ w1) x (F_f'' ⋄ w2)",
    cases.forest_each_pairs,
    forest_degree=3,
    word_length=2,
)
def check_diamond_coproduct_split(case: Tuple[Forest, str, str]) -> Counterexample:
    forest, w1, w2 = case
    lhs = diamond(W(w1 + "x" + w2), f_poly(forest))
    parts = []
    for (left, right), c in coproduct_of(forest).as_dict().items():
        head = append(diamond(f_poly(left), W(w1)), "x")
        parts.append((head * diamond(f_poly(right), W(w2))).scale(c))
    return mismatch(lhs, WordSum.sum_of(parts), forest=forest, w1=w1, w2=w2)


def fg_tensor(forest: Forest) -> WordTensorSum:
    """Σ φ(F_f') ⊗ φ(G_f'') over the Sweedler terms of Δ(f)."""
    parts = [
        WordTensorSum.from_product(phi(f_poly(left)), phi(g_poly(right))).scale(c)
        for (left, right), c in coproduct_of(forest).as_dict().items()
    ]
    return WordTensorSum.sum_of(parts)


def pq_displays(forest: Forest) -> Tuple[WordTensorSum, WordTensorSum]:
    """The p and q images of ``fg_tensor(forest)`` written through F and G."""
    p_acc: Dict[Tuple[str, str], Fraction] = {}
    q_acc: Dict[Tuple[str, str], Fraction] = {}

    def add(acc: Dict[Tuple[str, str], Fraction], left: WordSum, right: WordSum, c: Fraction) -> None:
        for a, e in left.as_dict().items():
            for b, g in right.as_dict().items():
                acc[(a, b)] = acc.get((a, b), Fraction(0)) + c * e * g

    for (left, right), c in coproduct_of(forest).as_dict().items():
        if left.is_unit:
            continue
        f_left, g_right = phi(f_poly(left)), phi(g_poly(right))
        add(p_acc, prepend("yx", left_div_y(f_left)), g_right, c)
        add(q_acc, prepend("y", f_left), g_right, c)
    g_whole = phi(g_poly(forest))
    one = WordSum.one()
    add(p_acc, one, append(g_whole, "x"), Fraction(1))
    add(q_acc, W("y"), g_whole, Fraction(1))
    add(q_acc, one, g_whole * Z, Fraction(-1))
    return WordTensorSum(p_acc), WordTensorSum(q_acc)


@register("pq_display", "p and q images of Σ φ(F_f') ⊗ φ(G_f'') lie in B", cases.nonempty_forests)
def check_pq_display(forest: Forest) -> Counterexample:
    p_image, q_image = pq_displays(forest)
    for label, image in (("p", p_image), ("q", q_image)):
        if not b_membership(image, forest.degree + 1):
            return failure(f"{label} image outside B", forest=forest, image=image)
    return None


@register("fg_tensor_in_b", "Σ φ(F_f') ⊗ φ(G_f'') lies in B", cases.nonempty_forests, forest_degree=5)
def check_fg_tensor_in_b(forest: Forest) -> Counterexample:
    tensor = fg_tensor(forest)
    if b_membership(tensor, forest.degree):
        return None
    return failure("tensor outside B", forest=forest, tensor=tensor)


@register("fg_convolution_zero", "Σ F_f' ⋄ G_f'' = 0 on the augmentation ideal", cases.nonempty_forests,
          forest_degree=6)
def check_fg_convolution_zero(forest: Forest) -> Counterexample:
    parts = [
        diamond(f_poly(left), g_poly(right)).scale(c)
        for (left, right), c in coproduct_of(forest).as_dict().items()
    ]
    return mismatch(WordSum.sum_of(parts), WordSum.zero(), forest=forest)


@register("f_tau_antipode", "F_f = -y τ L_y^-1 F_S(f)", cases.nonempty_forests, forest_degree=6)
def check_f_tau_antipode(forest: Forest) -> Counterexample:
    rhs = -prepend("y", tau(left_div_y(f_poly(antipode_of(forest)))))
    return mismatch(f_poly(forest), rhs, forest=forest)


@register(
    "tau_diamond_relation",
    "(yw1 ⋄ yw2) x + y τ(y τ(w1) ⋄ y τ(w2)) = 0",
    cases.word_pairs,
    word_length=5,
)
def check_tau_diamond_relation(case: Tuple[str, str]) -> Counterexample:
    w1, w2 = case
    first = append(diamond(W("y" + w1), W("y" + w2)), "x")
    inner = diamond(prepend("y", tau(W(w1))), prepend("y", tau(W(w2))))
    second = prepend("y", tau(inner))
    return mismatch(first + second, WordSum.zero(), w1=w1, w2=w2)


@register("phi_tau_composite", "-φ R_x^-1 τ R_x φ = d ρ σ on yA", cases.ya_words, word_length=6)
def check_phi_tau_composite(word: str) -> Counterexample:
    p = W(word)
    lhs = -phi(right_div_x(tau(append(phi(p), "x"))))
    rhs = d(rho(sigma(p)))
    return mismatch(lhs, rhs, word=word)


@register("factor_order", "(gh)(w) = g(h(w)) for every factorization", cases.product_words)
def check_factor_order(case: Tuple[Forest, str]) -> Counterexample:
    forest, word = case
    whole = rtm_apply(forest, word)
    for g, h in factorizations(forest):
        composed = rtm_apply(g, rtm_apply(h, word))
        bad = mismatch(whole, composed, forest=forest, g=g, h=h, word=word)
        if bad is not None:
            return bad
    return None


@register("image_and_degree", "letter images in yA, degrees add, wx maps into Ax", cases.nonempty_forest_words)
def check_image_and_degree(case: Tuple[Forest, str]) -> Counterexample:
    forest, word = case
    for letter in "xy":
        image = rtm_letter(forest, letter)
        if not all(in_ya(w) for w in image.keys()):
            return failure("letter image outside yA", forest=forest, letter=letter, image=image)
    if not all(in_ya(w) for w in f_poly(forest).keys()):
        return failure("F_f outside yA", forest=forest)
    image = rtm_apply(forest, word)
    if any(len(w) != forest.degree + len(word) for w in image.keys()):
        return failure("degree not additive", forest=forest, word=word, image=image)
    closed = rtm_apply(forest, word + "x")
    inside = in_yax if in_ya(word) else in_ax
    if not all(inside(w) for w in closed.keys()):
        return failure("image of wx leaves its subspace", forest=forest, word=word, image=closed)
    return None


@register("span_rank", "F_f of degree n span all of yA in degree n", cases.degrees, forest_degree=5)
def check_span_rank(n: int) -> Counterexample:
    rank, expected = span_rank(n)
    if rank == expected:
        return None
    return failure("rank deficit", degree=n, rank=rank, expected=expected)


@register(
    "duality_via_antipode",
    "(1 - τ)(f(x)) = (f + S(f))(x) on the augmentation ideal",
    cases.nonempty_forests,
    forest_degree=6,
)
def check_duality_via_antipode(forest: Forest) -> Counterexample:
    image = rtm_apply(forest, "x")
    rhs = rtm_apply(ForestSum.of(forest) + antipode_of(forest), "x")
    return mismatch(image - tau(image), rhs, forest=forest)
