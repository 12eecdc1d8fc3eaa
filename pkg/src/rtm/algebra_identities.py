"""Structural checks on H, on the word maps and on the harmonic products."""

from typing import Tuple

from src.forests import (
    UNIT,
    Forest,
    ForestSum,
    antipode_of,
    convolve_left,
    convolve_right,
    coproduct_of,
    coproduct_oracle,
    counit,
    tensor_apply_left,
    tensor_apply_right,
)
from src.harmonic import (
    DEFINITION_SIGN,
    PQ,
    b_membership,
    blocks,
    diamond,
    from_blocks,
    harub,
    m_contract,
    pq_by_definition,
    pq_of_u,
    star,
    tensor_star,
    u_by_recursion,
    u_map,
    u_of,
)
from src.harmonic.oracles import quasi_shuffle_oracle
from src.rtm import cases
from src.rtm.registry import Counterexample, failure, mismatch, register
from src.words import (
    LetterMap,
    WordSum,
    Z,
    d,
    d_rho,
    endo_map,
    in_a1,
    in_yax,
    phi,
    rho,
    sigma,
)

W = WordSum.word

Pair = Tuple[str, str]


# Hopf algebra of forests


@register("coassociativity", "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ", cases.forests, forest_degree=5)
def check_coassociativity(forest: Forest) -> Counterexample:
    delta = coproduct_of(forest)
    return mismatch(tensor_apply_left(delta), tensor_apply_right(delta), forest=forest)


@register("antipode_axioms", "Σ S(f')f'' = Σ f'S(f'') = ε(f) I", cases.forests, forest_degree=6)
def check_antipode_axioms(forest: Forest) -> Counterexample:
    expected = ForestSum.unit() if forest.is_unit else ForestSum.zero()
    return (
        mismatch(convolve_left(forest), expected, forest=forest, side="left")
        or mismatch(convolve_right(forest), expected, forest=forest, side="right")
    )


@register("coproduct_oracle", "grafting recursion matches the rooted-subtree sum", cases.trees, forest_degree=6)
def check_coproduct_oracle(tree_forest: Forest) -> Counterexample:
    tree = tree_forest.trees[0]
    return mismatch(coproduct_of(tree_forest), coproduct_oracle(tree), tree=tree)


@register("grading_and_counit", "Δ and S preserve degree; (ε ⊗ id)Δ = id", cases.forests, forest_degree=6)
def check_grading_and_counit(forest: Forest) -> Counterexample:
    delta = coproduct_of(forest)
    for (left, right), _ in delta.items():
        if left.degree + right.degree != forest.degree:
            return failure("coproduct term changes degree", forest=forest, left=left, right=right)
    image = antipode_of(forest)
    if image.degrees() != [forest.degree]:
        return failure("antipode is not homogeneous", forest=forest, image=image)
    unit_left = ForestSum.sum_of(
        ForestSum.of(right).scale(c) for (left, right), c in delta.as_dict().items() if left.is_unit
    )
    unit_right = ForestSum.sum_of(
        ForestSum.of(left).scale(c) for (left, right), c in delta.as_dict().items() if right.is_unit
    )
    whole = ForestSum.of(forest)
    if counit(whole) != (1 if forest == UNIT else 0):
        return failure("counit wrong", forest=forest)
    return mismatch(unit_left, whole, forest=forest, side="left") or mismatch(
        unit_right, whole, forest=forest, side="right"
    )


# Word maps


@register("word_map_involutions", "τ, φ, σ and reversal square to the identity; ρ reverses blocks",
          cases.words, word_length=8)
def check_word_map_involutions(word: str) -> Counterexample:
    p = W(word)
    for name in (LetterMap.TAU, LetterMap.PHI, LetterMap.SIGMA, LetterMap.REVERSE):
        bad = mismatch(endo_map(name, endo_map(name, p)), p, word=word, map=name.value)
        if bad is not None:
            return bad
    if in_a1(word):
        reversed_blocks = W(from_blocks(tuple(reversed(blocks(word)))))
        return mismatch(rho(p), reversed_blocks, word=word, map="rho") or mismatch(
            rho(rho(p)), p, word=word, map="rho twice"
        )
    return None


@register("word_map_multiplicativity", "φ, σ, d1 multiplicative; τ and reversal anti-multiplicative",
          cases.word_pairs, word_length=6)
def check_word_map_multiplicativity(case: Pair) -> Counterexample:
    u, v = case
    a, b = W(u), W(v)
    for name in (LetterMap.PHI, LetterMap.SIGMA, LetterMap.D1, LetterMap.TAU, LetterMap.REVERSE):
        image = endo_map(name, a * b)
        left, right = endo_map(name, a), endo_map(name, b)
        expected = right * left if name.is_anti else left * right
        bad = mismatch(image, expected, u=u, v=v, map=name.value)
        if bad is not None:
            return bad
    return None


@register("word_map_subspaces", "φ keeps A^1, τ keeps yAx, every map keeps degree", cases.words, word_length=8)
def check_word_map_subspaces(word: str) -> Counterexample:
    p = W(word)
    for name in LetterMap:
        if name.needs_a1 and not in_a1(word):
            continue
        image = endo_map(name, p)
        if any(len(w) != len(word) for w in image.keys()):
            return failure("degree changed", word=word, map=name.value, image=image)
    if in_a1(word) and not all(in_a1(w) for w in endo_map(LetterMap.PHI, p).keys()):
        return failure("phi left A^1", word=word)
    if in_yax(word) and not all(in_yax(w) for w in endo_map(LetterMap.TAU, p).keys()):
        return failure("tau left yAx", word=word)
    return None


# Harmonic products


@register("product_commutativity", "∗, ⊛ and ⋄ are commutative", cases.word_pairs, word_length=5)
def check_product_commutativity(case: Pair) -> Counterexample:
    u, v = case
    a, b = W(u), W(v)
    bad = mismatch(diamond(a, b), diamond(b, a), u=u, v=v, product="diamond")
    if bad is not None or not (in_a1(u) and in_a1(v)):
        return bad
    return mismatch(star(a, b), star(b, a), u=u, v=v, product="star") or mismatch(
        harub(a, b), harub(b, a), u=u, v=v, product="harub"
    )


@register("product_associativity", "∗, ⊛ and ⋄ are associative with unit 1", cases.triples, word_length=4)
def check_product_associativity(case: Tuple[str, str, str]) -> Counterexample:
    u, v, w = case
    a, b, c = W(u), W(v), W(w)
    one = WordSum.one()
    products = [("diamond", diamond)]
    if in_a1(u) and in_a1(v) and in_a1(w):
        products += [("star", star), ("harub", harub)]
    for label, product in products:
        bad = mismatch(product(product(a, b), c), product(a, product(b, c)), u=u, v=v, w=w, product=label)
        bad = bad or mismatch(product(a, one), a, u=u, product=label, side="unit")
        if bad is not None:
            return bad
    return None


@register("quasi_shuffle_oracle", "∗ and ⊛ match stuffle enumeration", cases.a1_pairs, word_length=6)
def check_quasi_shuffle_oracle(case: Pair) -> Counterexample:
    u, v = case
    for label, product, sign in (("star", star, 1), ("harub", harub, -1)):
        oracle = WordSum.from_int_dict(
            {from_blocks(parts): c for parts, c in quasi_shuffle_oracle(blocks(u), blocks(v), sign).items()}
        )
        bad = mismatch(product(W(u), W(v)), oracle, u=u, v=v, product=label)
        if bad is not None:
            return bad
    return None


@register("m_contract_u_vanishes", "Σ (-1)^i w_(≤i) ∗ dual tail = 0, i.e. M(u(w)) = 0",
          cases.a1_words, word_length=6)
def check_m_contract_u_vanishes(word: str) -> Counterexample:
    if not word:
        return None
    return mismatch(m_contract(u_map(word)), WordSum.zero(), word=word)


@register("d_transport", "d(w1 ⊛ w2) = d(w1) ∗ d(w2)", cases.a1_pairs, word_length=5)
def check_d_transport(case: Pair) -> Counterexample:
    u, v = case
    a, b = W(u), W(v)
    return mismatch(d(harub(a, b)), star(d(a), d(b)), u=u, v=v)


@register("phi_transport", "w1 ⋄ w2 = φ(φ(w1) ∗ φ(w2)) on A^1", cases.a1_pairs, word_length=5)
def check_phi_transport(case: Pair) -> Counterexample:
    u, v = case
    a, b = W(u), W(v)
    rhs = phi(star(phi(a), phi(b)))
    return mismatch(diamond(a, b), rhs, u=u, v=v)


@register("z_linearity", "z w1 ⋄ w2 = w1 ⋄ z w2 = z (w1 ⋄ w2)", cases.word_pairs, word_length=4)
def check_z_linearity(case: Pair) -> Counterexample:
    u, v = case
    a, b = W(u), W(v)
    target = Z * diamond(a, b)
    return mismatch(diamond(Z * a, b), target, u=u, v=v, side="left") or mismatch(
        diamond(a, Z * b), target, u=u, v=v, side="right"
    )


@register("x_split_diamond", "w1 x w2 ⋄ y = (w1 ⋄ y) x w2 + w1 x (w2 ⋄ y)", cases.each_pairs, word_length=3)
def check_x_split_diamond(case: Pair) -> Counterexample:
    u, v = case
    y = W("y")
    lhs = diamond(W(u + "x" + v), y)
    rhs = diamond(W(u), y) * W("x" + v) + W(u + "x") * diamond(W(v), y)
    return mismatch(lhs, rhs, w1=u, w2=v)


@register("u_multiplicativity", "u(w1 ⊛ w2) = u(w1) ∗ u(w2)", cases.a1_pairs, word_length=5)
def check_u_multiplicativity(case: Pair) -> Counterexample:
    u, v = case
    lhs = u_of(harub(W(u), W(v)))
    return mismatch(lhs, tensor_star(u_map(u), u_map(v)), u=u, v=v)


@register("u_recursion", "u(w) = 1 ⊗ dρ(w) - L'_(k1) u(tail)", cases.a1_words, word_length=6)
def check_u_recursion(word: str) -> Counterexample:
    return mismatch(u_map(word), u_by_recursion(word), word=word)


@register("pq_closed_forms", "p and q on u(w): closed forms, definitions up to sign and membership in B",
          cases.ya_words, word_length=5)
def check_pq_closed_forms(word: str) -> Counterexample:
    for which in PQ:
        closed = pq_of_u(which, word)
        defined = pq_by_definition(which, word)
        bad = mismatch(defined, closed.scale(DEFINITION_SIGN[which]), word=word, map=which.value)
        if bad is not None:
            return bad
        if not b_membership(closed, len(word) + 1):
            return failure("image outside B", word=word, map=which.value)
    return None



@register("rho_homomorphism", "ρ preserves ∗ and ⊛; σ sends ∗ to ⊛", cases.a1_pairs, word_length=5)
def check_rho_homomorphism(case: Pair) -> Counterexample:
    u, v = case
    a, b = W(u), W(v)
    return (
        mismatch(rho(star(a, b)), star(rho(a), rho(b)), u=u, v=v, product="star")
        or mismatch(rho(harub(a, b)), harub(rho(a), rho(b)), u=u, v=v, product="harub")
        or mismatch(sigma(star(a, b)), harub(sigma(a), sigma(b)), u=u, v=v, product="sigma")
    )


@register("composite_star_homomorphism", "dρσ is a ∗-endomorphism of A^1", cases.a1_pairs, word_length=5)
def check_composite_star_homomorphism(case: Pair) -> Counterexample:
    u, v = case
    a, b = W(u), W(v)

    def composite(p: WordSum) -> WordSum:
        return d_rho(sigma(p))

    return mismatch(composite(star(a, b)), star(composite(a), composite(b)), u=u, v=v)
