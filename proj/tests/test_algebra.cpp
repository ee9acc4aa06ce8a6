#include <doctest.h>

#include <random>

#include "morava/algebra.hpp"

using namespace morava;

namespace {

Presentation K(int n, int m)
{
    return make_presentation(TheoryFlavor::PeriodicMorava, n, m);
}
Presentation CK(int n, int m)
{
    return make_presentation(TheoryFlavor::ConnectiveMorava, n, m);
}
Presentation Chow(int m)
{
    return make_presentation(TheoryFlavor::Chow, std::nullopt, m);
}

bool is_homogeneous(const Presentation& p, const Element& x)
{
    for (const Term& t : x.terms) {
        auto f = forced_vpow(p, t.mask, x.degree);
        if (!f || *f != t.v)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("make_presentation shapes")
{
    Presentation k27 = K(2, 7);
    CHECK(k27.s == 3);
    CHECK(k27.r() == 2);
    CHECK(k27.exps == std::vector<int>{2, 1});
    CHECK(!k27.torsion_threshold);

    Presentation ck211 = CK(2, 11);
    CHECK(ck211.s == 5);
    CHECK(ck211.torsion_threshold == 4);

    Presentation ch9 = Chow(9);
    CHECK(ch9.s == 4);
    CHECK(ch9.r() == 2);
    CHECK(ch9.exps == std::vector<int>{3, 1});

    // the periodic basis caps at 2^n - 1
    CHECK(K(2, 13).s == 3);
    CHECK(K(2, 13).exps == std::vector<int>{2, 1});

    CHECK_THROWS_AS(make_presentation(TheoryFlavor::Chow, std::nullopt, 2), InputError);
    CHECK_THROWS_AS(make_presentation(TheoryFlavor::Chow, 2, 9), InputError);
    CHECK_THROWS_AS(make_presentation(TheoryFlavor::PeriodicMorava, std::nullopt, 9), InputError);
}

TEST_CASE("truncation exponents sum to s")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 3; m <= (1 << (n + 1)); ++m) {
            Presentation p = CK(n, m);
            int total = 0;
            for (int e : p.exps)
                total += e;
            CHECK(total == (m - 1) / 2);
        }
}

TEST_CASE("mono_mul examples")
{
    Presentation ch9 = Chow(9);
    CHECK(mono_mul(ch9, 0b1, 0b1) == Mask{0b10});        // e1*e1 = e2
    CHECK(mono_mul(ch9, 0b11, 0b1) == Mask{0b1000});     // e1e2*e1 = e4
    CHECK(!mono_mul(K(2, 7), 0b100, 0b100));             // e3^2 = e6 = 0 at s=3
}

TEST_CASE("mono_mul is associative and commutative")
{
    // exhaustive on generator triples over the whole n <= 3, m <= 23 grid,
    // sampled on general monomials for a few presentations
    std::vector<Presentation> ps;
    for (int m = 3; m <= 23; ++m) {
        ps.push_back(Chow(m));
        for (int n = 1; n <= 3; ++n) {
            ps.push_back(K(n, m));
            ps.push_back(CK(n, m));
        }
    }
    std::mt19937 rng(12345);
    for (const Presentation& p : ps) {
        std::vector<Mask> gens;
        for (int i = 1; i <= kMaxGeneratorIndex; ++i)
            if (p.index_valid(i))
                gens.push_back(Mask{1} << (i - 1));
        auto opt_mul = [&](std::optional<Mask> a, Mask b) -> std::optional<Mask> {
            if (!a)
                return std::nullopt;
            return mono_mul(p, *a, b);
        };
        for (Mask a : gens)
            for (Mask b : gens) {
                CHECK(mono_mul(p, a, b) == mono_mul(p, b, a));
                for (Mask c : gens)
                    CHECK(opt_mul(mono_mul(p, a, b), c) == opt_mul(mono_mul(p, b, c), a));
            }
        // sampled general monomials
        std::vector<Mask> masks = all_masks(p);
        std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            Mask a = masks[pick(rng)], b = masks[pick(rng)], c = masks[pick(rng)];
            CHECK(mono_mul(p, a, b) == mono_mul(p, b, a));
            CHECK(opt_mul(mono_mul(p, a, b), c) == opt_mul(mono_mul(p, b, c), a));
        }
    }
}

TEST_CASE("element arithmetic")
{
    Presentation p = K(2, 7);
    Element x = elem_mono(p, 0b101); // e1e3
    CHECK(elem_mul(p, x, elem_one(p)) == x);
    CHECK(elem_add(p, x, x).zero());
    CHECK_THROWS_AS(elem_add(p, elem_gen(p, 1), elem_gen(p, 2)), InputError);

    // torsion: v e_4 = 0 in CK(2)(SO_11)
    Presentation ck = CK(2, 11);
    CHECK(elem_vshift(ck, elem_gen(ck, 4), 1).zero());
    CHECK(!elem_vshift(ck, elem_gen(ck, 3), 1).zero());
}

TEST_CASE("rank equals the mask count")
{
    CHECK(rank(K(2, 7)) == 8);
    CHECK(rank(K(2, 13)) == 8);
    CHECK(rank(Chow(9)) == 16);
    for (const Presentation& p : {K(3, 15), CK(2, 11), Chow(23), K(1, 9)})
        CHECK(rank(p) == static_cast<long long>(all_masks(p).size()));
}

TEST_CASE("specialization to Chow")
{
    Presentation ck = CK(2, 7);
    // e1 + v e2e3 has degree 1 + ... check: v e2e3: -3 + 5 = 2; use matching degree terms instead
    Element e1 = elem_gen(ck, 1);
    Element ve1e3 = elem_vshift(ck, elem_mono(ck, 0b101), 1); // degree 4 - 3 = 1
    Element x = elem_add(ck, e1, ve1e3);
    Element sp = specialize_vn_to_zero(ck, x);
    Presentation ch = chow_counterpart(ck);
    CHECK(sp == elem_gen(ch, 1));
    CHECK(specialize_vn_to_zero(ck, elem_vshift(ck, e1, 1)).zero());
    CHECK_THROWS_AS(specialize_vn_to_zero(K(2, 7), elem_gen(K(2, 7), 1)), InputError);
}

TEST_CASE("tensor arithmetic")
{
    Presentation p = Chow(9);
    Element e1 = elem_gen(p, 1);
    TensorElement l = tensor_embed(p, e1, 2, 0);
    TensorElement r = tensor_embed(p, e1, 2, 1);
    TensorElement both = tensor_mul(p, l, r);
    CHECK(both.terms.size() == 1);
    CHECK(both.terms[0].mask[0] == 0b1);
    CHECK(both.terms[0].mask[1] == 0b1);
    TensorElement sq = tensor_mul(p, l, l);
    CHECK(sq.terms.size() == 1);
    CHECK(sq.terms[0].mask[0] == 0b10); // e2 (x) 1

    Presentation k = K(2, 7);
    Element e2 = elem_gen(k, 2);
    TensorElement d = tensor_vshift(k, tensor_mul(k, tensor_embed(k, e2, 2, 0),
                                                  tensor_embed(k, e2, 2, 1)),
                                    1);
    CHECK(tensor_mul(k, d, d).zero()); // v^2 e4 (x) e4 with e4 = 0
}

TEST_CASE("canonical text forms")
{
    CHECK(mono_str(0) == "1");
    CHECK(mono_str(0b10011) == "e1*e2*e5");
    CHECK(term_str(Term{0b100, 1}) == "v^1*e3");
    CHECK(term_str(Term{0b100, -1}) == "v^-1*e3");
    CHECK(term_str(Term{0, 2}) == "v^2*1");

    Presentation p = Chow(9);
    Element x = elem_add(p, elem_gen(p, 3), elem_mono(p, 0b11)); // e3 + e1e2
    CHECK(elem_str(x) == "e1*e2 + e3");
    CHECK(elem_str(elem_zero()) == "0");

    // lexicographic mask order: [] < [1] < [1,3] < [2]
    CHECK(mask_lex_less(0, 0b1));
    CHECK(mask_lex_less(0b1, 0b101));
    CHECK(mask_lex_less(0b101, 0b10));
    CHECK(!mask_lex_less(0b10, 0b101));
}

TEST_CASE("operations preserve homogeneity and normal form")
{
    std::mt19937 rng(99);
    for (const Presentation& p : {K(2, 7), K(3, 15), CK(2, 11), CK(3, 16)}) {
        std::vector<Mask> masks = all_masks(p);
        std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            Element a = elem_mono(p, masks[pick(rng)]);
            Element b = elem_mono(p, masks[pick(rng)]);
            Element prod = elem_mul(p, a, b);
            CHECK(is_homogeneous(p, prod));
            if (!prod.zero())
                CHECK(prod.degree == a.degree + b.degree);
        }
    }
}
