#include "morava/dual.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "morava/hopf.hpp"

namespace morava {

DualPresentation dual_presentation(const Presentation& p)
{
    if (!p.is_morava())
        throw InputError("dual_presentation: the divided-power dual needs a Morava flavor");
    if (p.flavor == TheoryFlavor::ConnectiveMorava && p.m > (1 << (p.n + 1)))
        throw InputError("dual_presentation: the connective dual is not free for m > 2^{n+1}");
    DualPresentation dp;
    dp.base = p;
    dp.exps = p.exps;
    dp.top.resize(p.r());
    for (int i = 1; i <= p.r(); ++i) {
        int d = p.exps[i - 1];
        if (d == 0)
            continue;
        long long top_index = (2LL * i - 1) << d;
        if (top_index >= (1 << p.n)) {
            long long q = top_index - (1 << p.n) + 1; // = 2j-1
            int slot = static_cast<int>((q + 1) / 2);
            if (q < 1 || q % 2 == 0 || slot > p.r() || p.exps[slot - 1] < 1)
                throw InputError("dual_presentation: top-square target alpha_" +
                                 std::to_string(q) + " is absent");
            dp.top[i - 1] = {true, slot};
        }
    }
    return dp;
}

int dual_mono_degree(const DualPresentation& dp, Mask mono)
{
    (void)dp;
    return -mono_degree(mono);
}

DualElement dual_normalize(const DualPresentation& dp, int degree, std::vector<DTerm> terms)
{
    (void)dp;
    std::sort(terms.begin(), terms.end());
    std::vector<DTerm> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) & 1)
            out.push_back(terms[i]);
        i = j;
    }
#ifndef NDEBUG
    for (const DTerm& t : out) {
        assert(t.v * dp.base.vdeg() - mono_degree(t.mono) == degree);
        if (dp.base.flavor == TheoryFlavor::ConnectiveMorava)
            assert(t.v >= 0);
    }
#endif
    DualElement g;
    g.degree = out.empty() ? 0 : degree;
    g.terms = std::move(out);
    return g;
}

DualElement dual_zero()
{
    return DualElement{};
}

DualElement dual_one(const DualPresentation& dp)
{
    return dual_normalize(dp, 0, {DTerm{}});
}

DualElement dual_mono(const DualPresentation& dp, Mask mono, int v)
{
    assert((mono & ~dp.base.index_mask) == 0);
    return dual_normalize(dp, v * dp.base.vdeg() - mono_degree(mono), {DTerm{mono, v}});
}

DualElement dual_gamma(const DualPresentation& dp, int slot, int t, int v)
{
    if (slot < 1 || slot > dp.r())
        throw InputError("dual_gamma: slot out of range");
    if (t < 0 || t >= (1 << dp.exps[slot - 1]))
        throw InputError("dual_gamma: divided-power index out of range");
    std::vector<int> exps(dp.r(), 0);
    exps[slot - 1] = t;
    auto mono = exponents_to_mask(dp.base, exps);
    assert(mono);
    return dual_mono(dp, *mono, v);
}

DualElement dual_add(const DualPresentation& dp, const DualElement& g, const DualElement& h)
{
    if (g.zero())
        return h;
    if (h.zero())
        return g;
    if (g.degree != h.degree)
        throw InputError("dual_add: degree mismatch");
    std::vector<DTerm> terms = g.terms;
    terms.insert(terms.end(), h.terms.begin(), h.terms.end());
    return dual_normalize(dp, g.degree, std::move(terms));
}

namespace {

// Product of two gamma-monomials: a single gamma-monomial times a v-power,
// or nothing. Rewrites slot by slot: split off the top divided power,
// combine the low parts with a Lucas coefficient, and square the top through
// the top-square rule, which feeds an alpha factor back into the worklist.
std::optional<DTerm> gamma_mono_mul(const DualPresentation& dp, Mask a, Mask b)
{
    std::vector<int> acc = mask_to_exponents(dp.base, a);
    std::vector<int> add = mask_to_exponents(dp.base, b);
    std::vector<std::pair<int, int>> work; // (slot, incoming t)
    for (int i = 1; i <= dp.r(); ++i)
        if (add[i - 1] > 0)
            work.emplace_back(i, add[i - 1]);
    int vpow = 0;
    int guard = 0;
    while (!work.empty()) {
        // each top-square event drops the total e-degree, so this terminates
        assert(++guard < 4096);
        (void)guard;
        auto [i, t] = work.back();
        work.pop_back();
        int d = dp.exps[i - 1];
        assert(d >= 1 && t < (1 << d));
        int s = acc[i - 1];
        int T = 1 << (d - 1);
        int es = s / T, sl = s % T;
        int et = t / T, tl = t % T;
        if (!binom_mod2(static_cast<unsigned long long>(sl) + tl, sl))
            return std::nullopt;
        int u = sl + tl;
        int carry = u / T;
        int ul = u % T;
        int tops = es + et + carry;
        if (tops <= 1) {
            acc[i - 1] = tops * T + ul;
            continue;
        }
        if (!dp.top[i - 1].fires)
            return std::nullopt;
        vpow += 1;
        acc[i - 1] = (tops - 2) * T + ul;
        work.emplace_back(dp.top[i - 1].slot, 1);
    }
    auto mono = exponents_to_mask(dp.base, acc);
    assert(mono);
    return DTerm{*mono, vpow};
}

} // namespace

DualElement gamma_mul(const DualPresentation& dp, const DualElement& g, const DualElement& h)
{
    if (g.zero() || h.zero())
        return dual_zero();
    std::vector<DTerm> terms;
    for (const DTerm& a : g.terms)
        for (const DTerm& b : h.terms)
            if (auto t = gamma_mono_mul(dp, a.mono, b.mono))
                terms.push_back(DTerm{t->mono, a.v + b.v + t->v});
    return dual_normalize(dp, g.degree + h.degree, std::move(terms));
}

DualTensor gamma_comul(const DualPresentation& dp, const DualElement& g)
{
    DualTensor out;
    out.degree = g.degree;
    for (const DTerm& t : g.terms) {
        std::vector<int> e = mask_to_exponents(dp.base, t.mono);
        std::vector<int> left(dp.r(), 0);
        // all componentwise splits s + (t - s); coefficients are 1
        for (;;) {
            std::vector<int> right(dp.r());
            for (int i = 0; i < dp.r(); ++i)
                right[i] = e[i] - left[i];
            auto ma = exponents_to_mask(dp.base, left);
            auto mb = exponents_to_mask(dp.base, right);
            assert(ma && mb);
            out.terms.push_back(DTTerm{*ma, *mb, t.v});
            int i = 0;
            while (i < dp.r() && left[i] == e[i]) {
                left[i] = 0;
                ++i;
            }
            if (i == dp.r())
                break;
            ++left[i];
        }
    }
    std::sort(out.terms.begin(), out.terms.end());
    // char 2: duplicate pairs cancel (none are expected here)
    std::vector<DTTerm> dedup;
    for (std::size_t i = 0; i < out.terms.size();) {
        std::size_t j = i;
        while (j < out.terms.size() && out.terms[j] == out.terms[i])
            ++j;
        if ((j - i) & 1)
            dedup.push_back(out.terms[i]);
        i = j;
    }
    out.terms = std::move(dedup);
    if (out.terms.empty())
        out.degree = 0;
    return out;
}

std::optional<int> pairing(const Presentation& p, const Element& x,
                           const DualPresentation& dp, const DualElement& g)
{
    if (!(dp.base == p))
        throw InputError("pairing: mismatched presentations");
    bool present = false;
    int vpow = 0;
    for (const Term& a : x.terms)
        for (const DTerm& b : g.terms)
            if (a.mask == b.mono) {
                int v = a.v + b.v;
                if (present && v == vpow) {
                    present = false; // char 2 cancellation
                } else {
                    assert(!present || v == vpow);
                    present = true;
                    vpow = v;
                }
            }
    if (!present)
        return std::nullopt;
    return vpow;
}

std::optional<int> tensor_pairing(const Presentation& p, const TensorElement& X,
                                  const DualPresentation& dp, const DualElement& g,
                                  const DualElement& h)
{
    if (!(dp.base == p))
        throw InputError("tensor_pairing: mismatched presentations");
    assert(X.arity == 2);
    bool present = false;
    int vpow = 0;
    for (const TTerm& t : X.terms)
        for (const DTerm& a : g.terms)
            for (const DTerm& b : h.terms)
                if (t.mask[0] == a.mono && t.mask[1] == b.mono) {
                    int v = t.v + a.v + b.v;
                    if (present && v == vpow) {
                        present = false;
                    } else {
                        assert(!present || v == vpow);
                        present = true;
                        vpow = v;
                    }
                }
    if (!present)
        return std::nullopt;
    return vpow;
}

std::optional<int> dual_tensor_pairing(const Presentation& p, const Element& x,
                                       const Element& y, const DualPresentation& dp,
                                       const DualTensor& G)
{
    if (!(dp.base == p))
        throw InputError("dual_tensor_pairing: mismatched presentations");
    bool present = false;
    int vpow = 0;
    for (const DTTerm& t : G.terms)
        for (const Term& a : x.terms)
            for (const Term& b : y.terms)
                if (t.a == a.mask && t.b == b.mask) {
                    int v = t.v + a.v + b.v;
                    if (present && v == vpow) {
                        present = false;
                    } else {
                        assert(!present || v == vpow);
                        present = true;
                        vpow = v;
                    }
                }
    if (!present)
        return std::nullopt;
    return vpow;
}

DualityReport verify_duality(const Presentation& p)
{
    DualPresentation dp = dual_presentation(p);
    DualityReport rep;
    auto fail = [](DualityCheck& c, const std::string& w) {
        c.pass = false;
        if (c.witness.empty())
            c.witness = w;
    };

    DualityCheck rank_check{"dual_rank", true, {}};
    if (dp.rank() != p.rank())
        fail(rank_check, "dual rank != base rank");

    std::vector<Mask> basis = all_masks(p);
    std::size_t nb = basis.size();

    // pairwise products on both sides
    std::vector<std::optional<Mask>> prod(nb * nb);
    std::vector<std::optional<DTerm>> gprod(nb * nb);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            prod[i * nb + j] = mono_mul(p, basis[i], basis[j]);
            gprod[i * nb + j] = gamma_mono_mul(dp, basis[i], basis[j]);
        }

    // coproducts on both sides, keyed for O(1) tuple lookups
    auto key = [](Mask a, Mask b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    };
    HopfCache cache(p);
    std::vector<std::unordered_map<std::uint64_t, int>> delta_map(nb);
    std::vector<std::unordered_set<std::uint64_t>> comul_set(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        for (const TTerm& t : cache.delta(basis[i]).terms)
            delta_map[i].emplace(key(t.mask[0], t.mask[1]), t.v);
        DualTensor G = gamma_comul(dp, dual_mono(dp, basis[i]));
        for (const DTTerm& t : G.terms) {
            assert(t.v == 0);
            comul_set[i].insert(key(t.a, t.b));
        }
    }

    DualityCheck adj_mul{"adjunction_mul_vs_dual_comul", true, {}};
    DualityCheck adj_comul{"adjunction_comul_vs_dual_mul", true, {}};
    DualityCheck assoc{"gamma_associativity", true, {}};
    DualityCheck comm{"gamma_commutativity", true, {}};

    auto tuple_tag = [&](std::size_t i, std::size_t j, std::size_t k) {
        return mono_str(basis[i]) + ", " + mono_str(basis[j]) + ", " + mono_str(basis[k]);
    };

    // multiply an optional product term by a further monomial
    auto extend = [&](const std::optional<DTerm>& t, Mask m) -> std::optional<DTerm> {
        if (!t)
            return std::nullopt;
        auto u = gamma_mono_mul(dp, t->mono, m);
        if (!u)
            return std::nullopt;
        return DTerm{u->mono, t->v + u->v};
    };

    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            if (!(gprod[i * nb + j] == gprod[j * nb + i]))
                fail(comm, mono_str(basis[i]) + ", " + mono_str(basis[j]));
            for (std::size_t k = 0; k < nb; ++k) {
                // <x y, gamma_k> vs <x (x) y, comul(gamma_k)>
                bool lhs = prod[i * nb + j] && *prod[i * nb + j] == basis[k];
                bool rhs = comul_set[k].count(key(basis[i], basis[j])) > 0;
                if (lhs != rhs)
                    fail(adj_mul, tuple_tag(i, j, k));

                // <comul(x_i), gamma_j (x) gamma_k> vs <x_i, gamma_j gamma_k>
                std::optional<int> l2;
                auto it = delta_map[i].find(key(basis[j], basis[k]));
                if (it != delta_map[i].end())
                    l2 = it->second;
                std::optional<int> r2;
                const auto& gh = gprod[j * nb + k];
                if (gh && gh->mono == basis[i])
                    r2 = gh->v;
                if (l2 != r2)
                    fail(adj_comul, tuple_tag(i, j, k));

                // associativity of the gamma product
                auto left = extend(gprod[i * nb + j], basis[k]);
                auto right = extend(gprod[j * nb + k], basis[i]);
                if (!(left == right))
                    fail(assoc, tuple_tag(i, j, k));
            }
        }

    rep.checks = {rank_check, adj_mul, adj_comul, assoc, comm};
    return rep;
}

std::vector<DualElement> idempotents(const DualPresentation& dp,
                                     const std::optional<std::vector<int>>& restrict_to,
                                     long long max_candidates)
{
    if (dp.base.flavor != TheoryFlavor::PeriodicMorava)
        throw InputError("idempotents: the search needs v_n invertible (periodic flavor)");
    int period = (1 << dp.base.n) - 1;

    // ambient degree-class-0 monomials carry the coordinates
    std::vector<Mask> ambient;
    std::unordered_map<Mask, int> apos;
    for (Mask m : all_masks(dp.base))
        if (mono_degree(m) % period == 0) {
            apos[m] = static_cast<int>(ambient.size());
            ambient.push_back(m);
        }
    if (ambient.size() > 63)
        throw SizingError("idempotents: degree-class-0 space exceeds 63 monomials");

    std::vector<int> caps = dp.exps;
    if (restrict_to) {
        for (int i = 0; i < dp.r(); ++i)
            if (i < static_cast<int>(restrict_to->size()))
                caps[i] = std::min(caps[i], (*restrict_to)[i]);
    }
    std::vector<int> cand; // positions into `ambient`
    for (std::size_t i = 0; i < ambient.size(); ++i) {
        std::vector<int> e = mask_to_exponents(dp.base, ambient[i]);
        bool ok = true;
        for (int j = 0; j < dp.r(); ++j)
            if (e[j] >= (1 << caps[j]))
                ok = false;
        if (ok)
            cand.push_back(static_cast<int>(i));
    }
    if (static_cast<long long>(cand.size()) > 62 ||
        (1LL << cand.size()) > max_candidates)
        throw SizingError("idempotents: candidate space 2^" + std::to_string(cand.size()) +
                          " exceeds the configured bound " + std::to_string(max_candidates));

    // forced v-power of each ambient monomial at degree 0
    auto forced = [&](Mask m) { return -mono_degree(m) / period; };

    // squares are linear in char 2: precompute the square of each candidate
    std::vector<std::uint64_t> sqbit(cand.size(), 0);
    std::vector<std::uint64_t> ownbit(cand.size(), 0);
    for (std::size_t j = 0; j < cand.size(); ++j) {
        Mask m = ambient[cand[j]];
        ownbit[j] = 1ULL << cand[j];
        if (auto sq = gamma_mono_mul(dp, m, m)) {
            auto it = apos.find(sq->mono);
            assert(it != apos.end());
            assert(2 * forced(m) + sq->v == forced(sq->mono));
            sqbit[j] = 1ULL << it->second;
        }
    }

    // Gray-code walk over subsets; e^2 = e is a per-coordinate XOR condition
    std::vector<DualElement> out;
    std::uint64_t chi = 0, sq = 0;
    std::uint64_t total = 1ULL << cand.size();
    auto record = [&](std::uint64_t bits) {
        std::vector<DTerm> terms;
        for (std::size_t i = 0; i < ambient.size(); ++i)
            if ((bits >> i) & 1)
                terms.push_back(DTerm{ambient[i], forced(ambient[i])});
        out.push_back(dual_normalize(dp, 0, std::move(terms)));
    };
    record(0);
    for (std::uint64_t g = 1; g < total; ++g) {
        int flip = nu2(static_cast<long long>(g));
        chi ^= ownbit[flip];
        sq ^= sqbit[flip];
        if (chi == sq)
            record(chi);
    }
    std::sort(out.begin(), out.end(), [&](const DualElement& a, const DualElement& b) {
        return dual_str(dp, a) < dual_str(dp, b);
    });
    return out;
}

std::string dual_mono_str(const DualPresentation& dp, Mask mono)
{
    if (mono == 0)
        return "1";
    std::vector<int> e = mask_to_exponents(dp.base, mono);
    std::string s;
    bool first = true;
    for (int i = 1; i <= dp.r(); ++i) {
        if (e[i - 1] == 0)
            continue;
        if (!first)
            s += '*';
        s += "g" + std::to_string(e[i - 1]) + "(a" + std::to_string(2 * i - 1) + ")";
        first = false;
    }
    return s;
}

std::string dterm_str(const DualPresentation& dp, const DTerm& t)
{
    if (t.v == 0)
        return dual_mono_str(dp, t.mono);
    return "v^" + std::to_string(t.v) + "*" + dual_mono_str(dp, t.mono);
}

std::string dual_str(const DualPresentation& dp, const DualElement& g)
{
    if (g.zero())
        return "0";
    std::vector<DTerm> terms = g.terms;
    std::sort(terms.begin(), terms.end(), [](const DTerm& a, const DTerm& b) {
        if (a.mono != b.mono)
            return mask_lex_less(a.mono, b.mono);
        return a.v < b.v;
    });
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            s += " + ";
        s += dterm_str(dp, terms[i]);
    }
    return s;
}

} // namespace morava
