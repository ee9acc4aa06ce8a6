#include "morava/hopf.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>

#include "morava/gf2.hpp"

namespace morava {

namespace {

Mask gen_mask(int i)
{
    return Mask{1} << (i - 1);
}

} // namespace

TensorElement comul_gen_reduced(const Presentation& p, int idx)
{
    if (idx < 1 || idx % 2 == 0)
        throw InputError("comul_gen: odd generator index required");
    if (!p.index_valid(idx))
        return tensor_zero(2);
    if (p.flavor == TheoryFlavor::Chow)
        return tensor_zero(2); // generators are primitive
    int top = (1 << p.n) - 1;
    if (idx > top)
        return tensor_zero(2); // Dt(e_{2k-1}) = 0 for 2k-1 > 2^n-1
    if (idx == top) {
        Element e = elem_gen(p, idx);
        TensorElement t = tensor_mul(p, tensor_embed(p, e, 2, 0), tensor_embed(p, e, 2, 1));
        return tensor_vshift(p, t, 1);
    }
    // idx = <2k>: sum over i <= nu2(k) of
    //   v^{i+1} e_{<k/2^i>} (x) e_{<k/2^i>} * prod_{j<i} (e_{<k/2^j>} (x) 1 + 1 (x) e_{<k/2^j>})
    long long k = (top - idx) / 2;
    TensorElement acc = tensor_zero(2);
    TensorElement running = tensor_one(p, 2); // the partial product over j
    for (int i = 0; i <= nu2(k); ++i) {
        Element e = elem_gen(p, static_cast<int>(angle(k >> i, p.n)));
        TensorElement diag = tensor_mul(p, tensor_embed(p, e, 2, 0), tensor_embed(p, e, 2, 1));
        TensorElement part = tensor_vshift(p, tensor_mul(p, diag, running), i + 1);
        acc = acc.zero() ? part : (part.zero() ? acc : tensor_add(p, acc, part));
        TensorElement split =
            tensor_add(p, tensor_embed(p, e, 2, 0), tensor_embed(p, e, 2, 1));
        running = tensor_mul(p, running, split);
    }
    return acc;
}

TensorElement comul_gen(const Presentation& p, int idx)
{
    if (idx < 1 || idx % 2 == 0)
        throw InputError("comul_gen: odd generator index required");
    Element e = elem_gen(p, idx);
    if (e.zero())
        return tensor_zero(2);
    TensorElement t = tensor_add(p, tensor_embed(p, e, 2, 0), tensor_embed(p, e, 2, 1));
    TensorElement red = comul_gen_reduced(p, idx);
    return red.zero() ? t : tensor_add(p, t, red);
}

const TensorElement& HopfCache::delta_index(int i)
{
    auto it = indices_.find(i);
    if (it != indices_.end())
        return it->second;
    TensorElement d;
    if (i % 2 == 1) {
        d = comul_gen(p_, i);
    } else {
        // D(e_{2t}) = D(e_t)^2, forced by multiplicativity
        const TensorElement& half = delta_index(i / 2);
        d = tensor_mul(p_, half, half);
    }
    return indices_.emplace(i, std::move(d)).first->second;
}

const TensorElement& HopfCache::delta(Mask m)
{
    auto it = masks_.find(m);
    if (it != masks_.end())
        return it->second;
    TensorElement d;
    if (m == 0) {
        d = tensor_one(p_, 2);
    } else {
        int i = std::countr_zero(m) + 1;
        d = tensor_mul(p_, delta_index(i), delta(m & (m - 1)));
    }
    return masks_.emplace(m, std::move(d)).first->second;
}

TensorElement HopfCache::delta_elem(const Element& x)
{
    TensorElement acc = tensor_zero(2);
    for (const Term& t : x.terms) {
        TensorElement part = tensor_vshift(p_, delta(t.mask), t.v);
        acc = acc.zero() ? part : (part.zero() ? acc : tensor_add(p_, acc, part));
    }
    return acc;
}

TensorElement HopfCache::delta_reduced(const Element& x)
{
    TensorElement acc = delta_elem(x);
    TensorElement split =
        tensor_add(p_, tensor_embed(p_, x, 2, 0), tensor_embed(p_, x, 2, 1));
    if (split.zero())
        return acc;
    if (acc.zero())
        return split;
    return tensor_add(p_, acc, split);
}

void HopfCache::resolve_antipodes(Mask m)
{
    // Collect the monomials reachable through left legs of the reduced
    // coproduct, then iterate S(b) = b + sum v^a S(b') b'' to the fixpoint.
    // Right legs have positive monomial degree, so the affine recursion is
    // nilpotent and the iteration stabilizes.
    if (!antipodes_.count(0))
        antipodes_.emplace(0, elem_one(p_)); // S(1) = 1
    std::vector<Mask> need;
    std::vector<Mask> queue{m};
    std::map<Mask, std::vector<TTerm>> reduced;
    while (!queue.empty()) {
        Mask b = queue.back();
        queue.pop_back();
        if (reduced.count(b) || antipodes_.count(b))
            continue;
        TensorElement red = delta_reduced(elem_mono(p_, b));
        for (const TTerm& t : red.terms) {
            assert(t.mask[0] != 0 && t.mask[1] != 0);
            queue.push_back(t.mask[0]);
        }
        reduced.emplace(b, std::move(red.terms));
        need.push_back(b);
    }
    if (need.empty())
        return;
    std::map<Mask, Element> cur;
    for (Mask b : need)
        cur[b] = elem_mono(p_, b);
    int limit = p_.top_degree() + 2;
    for (int iter = 0;; ++iter) {
        assert(iter <= limit);
        (void)limit;
        bool changed = false;
        for (Mask b : need) {
            Element next = elem_mono(p_, b);
            for (const TTerm& t : reduced[b]) {
                const Element& left =
                    antipodes_.count(t.mask[0]) ? antipodes_[t.mask[0]] : cur[t.mask[0]];
                Element prod = elem_mul(p_, left, elem_mono(p_, t.mask[1]));
                next = elem_add(p_, next, elem_vshift(p_, prod, t.v));
            }
            if (!(next == cur[b])) {
                cur[b] = std::move(next);
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    for (Mask b : need)
        antipodes_.emplace(b, std::move(cur[b]));
}

const Element& HopfCache::antipode_mask(Mask m)
{
    if (!antipodes_.count(m))
        resolve_antipodes(m);
    return antipodes_[m];
}

TensorElement comul(const Presentation& p, const Element& x)
{
    HopfCache cache(p);
    return cache.delta_elem(x);
}

TensorElement comul_reduced(const Presentation& p, const Element& x)
{
    HopfCache cache(p);
    return cache.delta_reduced(x);
}

std::optional<int> counit(const Presentation& p, const Element& x)
{
    (void)p;
    for (const Term& t : x.terms)
        if (t.mask == 0)
            return t.v;
    return std::nullopt;
}

Element antipode(const Presentation& p, const Element& x)
{
    HopfCache cache(p);
    Element acc = elem_zero();
    for (const Term& t : x.terms)
        acc = elem_add(p, acc, elem_vshift(p, cache.antipode_mask(t.mask), t.v));
    return acc;
}

namespace {

// Apply delta to tensor slot `pos` of an arity-2 element, yielding arity 3.
TensorElement delta_at(HopfCache& cache, const TensorElement& x, int pos)
{
    const Presentation& p = cache.pres();
    std::vector<TTerm> terms;
    for (const TTerm& t : x.terms) {
        const TensorElement& d = cache.delta(t.mask[pos]);
        for (const TTerm& dt : d.terms) {
            TTerm out;
            if (pos == 0) {
                out.mask = {dt.mask[0], dt.mask[1], t.mask[1]};
            } else {
                out.mask = {t.mask[0], dt.mask[0], dt.mask[1]};
            }
            out.v = t.v + dt.v;
            terms.push_back(out);
        }
    }
    return tensor_normalize(p, 3, x.degree, std::move(terms));
}

// (counit (x) id) applied to an arity-2 element.
Element counit_left(const Presentation& p, const TensorElement& x)
{
    std::vector<Term> terms;
    for (const TTerm& t : x.terms)
        if (t.mask[0] == 0)
            terms.push_back(Term{t.mask[1], t.v});
    return normalize(p, x.degree, std::move(terms));
}

Element counit_right(const Presentation& p, const TensorElement& x)
{
    std::vector<Term> terms;
    for (const TTerm& t : x.terms)
        if (t.mask[1] == 0)
            terms.push_back(Term{t.mask[0], t.v});
    return normalize(p, x.degree, std::move(terms));
}

// multiply((S (x) id) D(x)): the convolution of S with the identity
Element convolve_antipode(HopfCache& cache, const TensorElement& dx)
{
    const Presentation& p = cache.pres();
    Element acc = elem_zero();
    for (const TTerm& t : dx.terms) {
        Element prod =
            elem_mul(p, cache.antipode_mask(t.mask[0]), elem_mono(p, t.mask[1]));
        acc = elem_add(p, acc, elem_vshift(p, prod, t.v));
    }
    return acc;
}

std::vector<int> odd_generators(const Presentation& p)
{
    std::vector<int> out;
    for (int i = 1; i <= kMaxGeneratorIndex; i += 2)
        if (p.index_valid(i))
            out.push_back(i);
    return out;
}

std::vector<int> valid_indices(const Presentation& p)
{
    std::vector<int> out;
    for (int i = 1; i <= kMaxGeneratorIndex; ++i)
        if (p.index_valid(i))
            out.push_back(i);
    return out;
}

} // namespace

HopfReport verify_hopf(const Presentation& p)
{
    HopfCache cache(p);
    HopfReport rep;
    auto fail = [&](AxiomResult& r, const std::string& w) {
        r.pass = false;
        if (r.witness.empty())
            r.witness = w;
    };

    AxiomResult coassoc{"coassociativity", true, {}};
    AxiomResult counit_ax{"counit", true, {}};
    AxiomResult relations{"relations", true, {}};
    AxiomResult cocomm{"cocommutativity", true, {}};
    AxiomResult antipode_ax{"antipode", true, {}};

    // first term of the (char 2) difference, as the failure witness
    auto diff_term = [&](const TensorElement& a, const TensorElement& b) {
        TensorElement d = tensor_add(p, a, b);
        return d.zero() ? std::string("0") : tterm_str(d.terms.front(), d.arity);
    };

    for (int q : odd_generators(p)) {
        const TensorElement& d = cache.delta(gen_mask(q));
        std::string tag = "e" + std::to_string(q);

        TensorElement left = delta_at(cache, d, 0);
        TensorElement right = delta_at(cache, d, 1);
        if (!(left == right))
            fail(coassoc, tag + ": (D(x)id)D != (id(x)D)D at " + diff_term(left, right));

        Element e = elem_gen(p, q);
        if (!(counit_left(p, d) == e) || !(counit_right(p, d) == e))
            fail(counit_ax, tag + ": counit identity fails");

        if (!(tensor_swap(d) == d))
            fail(cocomm, tag + ": D(" + tag + ") not swap-invariant at " +
                             diff_term(tensor_swap(d), d));

        Element conv = convolve_antipode(cache, d);
        if (!conv.zero())
            fail(antipode_ax, tag + ": S*id = " + elem_str(conv));
    }

    // well-definedness on the relations e_i^2 = e_{2i} and v_n e_i = 0
    for (int i : valid_indices(p)) {
        const TensorElement& d = cache.delta(gen_mask(i));
        TensorElement sq = tensor_mul(p, d, d);
        TensorElement target =
            p.index_valid(2 * i) ? cache.delta(gen_mask(2 * i)) : tensor_zero(2);
        if (!(sq == target))
            fail(relations, "D(e" + std::to_string(i) + ")^2 != D(e" + std::to_string(2 * i) +
                                ") at " + diff_term(sq, target));
        if (p.torsion_threshold && i >= *p.torsion_threshold) {
            TensorElement v = tensor_vshift(p, d, 1);
            if (!v.zero())
                fail(relations, "v*D(e" + std::to_string(i) + ") != 0");
        }
    }

    // the unit is grouplike
    {
        TensorElement one = cache.delta(0);
        if (!(one == tensor_one(p, 2)))
            fail(relations, "D(1) != 1(x)1");
        Element s1 = cache.antipode_mask(0);
        if (!(s1 == elem_one(p)))
            fail(antipode_ax, "S(1) != 1");
    }

    rep.axioms = {coassoc, counit_ax, relations, cocomm, antipode_ax};
    return rep;
}

std::vector<Element> primitive_space(const Presentation& p, int degree)
{
    HopfCache cache(p);
    std::vector<Term> dom = component_basis(p, degree);
    if (dom.empty())
        return {};

    // coordinates of the tensor-square component, discovered from the images
    std::map<std::pair<Mask, Mask>, std::size_t> coord;
    std::vector<TensorElement> images;
    images.reserve(dom.size());
    for (const Term& t : dom) {
        TensorElement red = cache.delta_reduced(elem_mono(p, t.mask, t.v));
        for (const TTerm& tt : red.terms)
            coord.emplace(std::make_pair(tt.mask[0], tt.mask[1]), 0);
        images.push_back(std::move(red));
    }
    std::size_t width = 0;
    for (auto& kv : coord)
        kv.second = width++;

    std::vector<BitVec> rows;
    rows.reserve(dom.size());
    for (const TensorElement& im : images) {
        BitVec row(std::max<std::size_t>(width, 1));
        for (const TTerm& tt : im.terms)
            row.flip(coord.at(std::make_pair(tt.mask[0], tt.mask[1])));
        rows.push_back(std::move(row));
    }

    std::vector<Element> basis;
    for (const BitVec& combo : gf2_kernel(rows, dom.size())) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < dom.size(); ++i)
            if (combo.get(i))
                terms.push_back(dom[i]);
        basis.push_back(normalize(p, degree, std::move(terms)));
    }
    std::sort(basis.begin(), basis.end(), [](const Element& a, const Element& b) {
        return elem_str(a) < elem_str(b);
    });
    return basis;
}

} // namespace morava
