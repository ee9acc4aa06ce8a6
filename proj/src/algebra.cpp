#include "morava/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace morava {

namespace {

void check_homogeneous(const Presentation& p, int degree, const Term& t)
{
    if (p.flavor == TheoryFlavor::Chow) {
        assert(t.v == 0 && mono_degree(t.mask) == degree);
    } else {
        assert(t.v * p.vdeg() + mono_degree(t.mask) == degree);
        if (p.flavor == TheoryFlavor::ConnectiveMorava)
            assert(t.v >= 0);
    }
    (void)p;
    (void)degree;
    (void)t;
}

bool torsion_dead(const Presentation& p, const Term& t)
{
    return t.v >= 1 && (t.mask & p.torsion_mask());
}

bool torsion_dead(const Presentation& p, const TTerm& t)
{
    if (t.v < 1)
        return false;
    Mask tm = p.torsion_mask();
    return (t.mask[0] & tm) || (t.mask[1] & tm) || (t.mask[2] & tm);
}

} // namespace

int Presentation::top_degree() const
{
    int d = 0;
    for (int i = 1; i <= kMaxGeneratorIndex; ++i)
        if (index_valid(i))
            d += i;
    return d;
}

long long Presentation::rank() const
{
    int total = 0;
    for (int e : exps)
        total += e;
    return 1LL << total;
}

Mask Presentation::torsion_mask() const
{
    if (!torsion_threshold)
        return 0;
    Mask m = 0;
    for (int i = *torsion_threshold; i <= kMaxGeneratorIndex; ++i)
        if (index_valid(i))
            m |= Mask{1} << (i - 1);
    return m;
}

Presentation make_presentation(TheoryFlavor f, std::optional<int> n, int m)
{
    if (m < 3)
        throw InputError("make_presentation: m >= 3 required (no generators otherwise)");
    if (f == TheoryFlavor::Chow) {
        if (n)
            throw InputError("make_presentation: the Chow theory carries no height n");
    } else {
        if (!n)
            throw InputError("make_presentation: Morava flavors require a height n");
        if (*n < 1 || *n > 25)
            throw InputError("make_presentation: height n out of range");
    }

    Presentation p;
    p.flavor = f;
    p.n = n.value_or(0);
    p.m = m;
    int s_full = (m - 1) / 2;
    p.s = s_full;
    if (f == TheoryFlavor::PeriodicMorava)
        p.s = std::min(s_full, (1 << p.n) - 1);
    if (p.s > kMaxGeneratorIndex)
        throw InputError("make_presentation: m too large for the mask basis");

    int r = (p.s + 1) / 2;
    p.exps.resize(r);
    for (int i = 1; i <= r; ++i) {
        int e = 0;
        while ((2LL * i - 1) << e <= p.s)
            ++e;
        p.exps[i - 1] = e;
    }
    p.index_mask = p.s == 0 ? 0 : ((Mask{1} << p.s) - 1);
    if (f == TheoryFlavor::ConnectiveMorava && p.s >= (1 << p.n))
        p.torsion_threshold = 1 << p.n;
    return p;
}

Presentation quotient_presentation(const Presentation& p, const std::vector<int>& bounds)
{
    if (static_cast<int>(bounds.size()) != p.r())
        throw InputError("quotient_presentation: bound tuple length mismatch");
    Presentation q = p;
    q.exps = bounds;
    q.index_mask = 0;
    for (int i = 1; i <= q.r(); ++i) {
        if (bounds[i - 1] < 0 || bounds[i - 1] > p.exps[i - 1])
            throw InputError("quotient_presentation: exponent bound out of range");
        for (int b = 0; b < bounds[i - 1]; ++b)
            q.index_mask |= Mask{1} << (((2 * i - 1) << b) - 1);
    }
    q.torsion_threshold.reset();
    if (q.flavor == TheoryFlavor::ConnectiveMorava) {
        Mask high = 0;
        for (int i = 1 << q.n; i <= kMaxGeneratorIndex; ++i)
            if (q.index_valid(i))
                high |= Mask{1} << (i - 1);
        if (high)
            q.torsion_threshold = 1 << q.n;
    }
    return q;
}

Presentation chow_counterpart(const Presentation& p)
{
    Presentation q = p;
    q.flavor = TheoryFlavor::Chow;
    q.n = 0;
    q.torsion_threshold.reset();
    return q;
}

long long rank(const Presentation& p)
{
    return p.rank();
}

// --- monomials ----------------------------------------------------------

int mono_degree(Mask m)
{
    int d = 0;
    while (m) {
        int b = std::countr_zero(m);
        d += b + 1;
        m &= m - 1;
    }
    return d;
}

std::vector<int> mask_to_exponents(const Presentation& p, Mask m)
{
    std::vector<int> t(p.r(), 0);
    while (m) {
        int idx = std::countr_zero(m) + 1;
        int j = nu2(idx);
        int odd = idx >> j;
        assert((odd + 1) / 2 <= p.r());
        t[(odd - 1) / 2] += 1 << j;
        m &= m - 1;
    }
    return t;
}

std::optional<Mask> exponents_to_mask(const Presentation& p, const std::vector<int>& t)
{
    Mask m = 0;
    for (int i = 1; i <= p.r(); ++i) {
        int e = t[i - 1];
        if (e < 0 || e >= (1 << p.exps[i - 1]))
            return std::nullopt;
        while (e) {
            int b = std::countr_zero(static_cast<unsigned>(e));
            m |= Mask{1} << (((2 * i - 1) << b) - 1);
            e &= e - 1;
        }
    }
    return m;
}

std::optional<Mask> mono_mul(const Presentation& p, Mask a, Mask b)
{
    if (a == 0)
        return b;
    if (b == 0)
        return a;
    std::vector<int> t = mask_to_exponents(p, a);
    std::vector<int> u = mask_to_exponents(p, b);
    for (int i = 0; i < p.r(); ++i)
        t[i] += u[i];
    return exponents_to_mask(p, t);
}

std::vector<Mask> all_masks(const Presentation& p)
{
    std::vector<int> pos;
    for (int i = 0; i < kMaxGeneratorIndex; ++i)
        if ((p.index_mask >> i) & 1)
            pos.push_back(i);
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << pos.size());
    for (Mask c = 0; c < (Mask{1} << pos.size()); ++c) {
        Mask m = 0;
        for (std::size_t j = 0; j < pos.size(); ++j)
            if ((c >> j) & 1)
                m |= Mask{1} << pos[j];
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool mask_lex_less(Mask a, Mask b)
{
    // compare as ascending index sequences; the empty sequence is least
    while (a && b) {
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib)
            return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

// --- elements ------------------------------------------------------------

Element normalize(const Presentation& p, int degree, std::vector<Term> terms)
{
    std::erase_if(terms, [&](const Term& t) { return torsion_dead(p, t); });
    std::sort(terms.begin(), terms.end());
    std::vector<Term> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) & 1)
            out.push_back(terms[i]);
        i = j;
    }
    for (const Term& t : out)
        check_homogeneous(p, degree, t);
    Element e;
    e.degree = out.empty() ? 0 : degree;
    e.terms = std::move(out);
    return e;
}

Element elem_zero()
{
    return Element{};
}

Element elem_one(const Presentation& p)
{
    return normalize(p, 0, {Term{0, 0}});
}

Element elem_mono(const Presentation& p, Mask m, int v)
{
    assert((m & ~p.index_mask) == 0);
    return normalize(p, v * p.vdeg() + mono_degree(m), {Term{m, v}});
}

Element elem_gen(const Presentation& p, int i)
{
    if (i < 1)
        throw InputError("elem_gen: generator index must be positive");
    if (i > kMaxGeneratorIndex || !p.index_valid(i))
        return elem_zero();
    return elem_mono(p, Mask{1} << (i - 1));
}

Element elem_add(const Presentation& p, const Element& x, const Element& y)
{
    if (x.zero())
        return y;
    if (y.zero())
        return x;
    if (x.degree != y.degree)
        throw InputError("elem_add: degree mismatch");
    std::vector<Term> terms = x.terms;
    terms.insert(terms.end(), y.terms.begin(), y.terms.end());
    return normalize(p, x.degree, std::move(terms));
}

Element elem_mul(const Presentation& p, const Element& x, const Element& y)
{
    if (x.zero() || y.zero())
        return elem_zero();
    std::vector<Term> terms;
    terms.reserve(x.terms.size() * y.terms.size());
    for (const Term& a : x.terms)
        for (const Term& b : y.terms)
            if (auto m = mono_mul(p, a.mask, b.mask))
                terms.push_back(Term{*m, a.v + b.v});
    return normalize(p, x.degree + y.degree, std::move(terms));
}

Element elem_vshift(const Presentation& p, const Element& x, int dv)
{
    if (dv == 0 || x.zero())
        return x;
    if (p.flavor == TheoryFlavor::Chow)
        throw InputError("elem_vshift: the Chow theory has no v_n");
    std::vector<Term> terms = x.terms;
    for (Term& t : terms) {
        t.v += dv;
        if (p.flavor == TheoryFlavor::ConnectiveMorava && t.v < 0)
            throw InputError("elem_vshift: negative v-power in the connective theory");
    }
    return normalize(p, x.degree + dv * p.vdeg(), std::move(terms));
}

Element specialize_vn_to_zero(const Presentation& p, const Element& x)
{
    if (p.flavor != TheoryFlavor::ConnectiveMorava)
        throw InputError("specialize_vn_to_zero: only the connective theory specializes to Chow");
    if (x.zero())
        return elem_zero();
    Presentation ch = chow_counterpart(p);
    std::vector<Term> terms;
    for (const Term& t : x.terms)
        if (t.v == 0)
            terms.push_back(t);
    return normalize(ch, x.degree, std::move(terms));
}

// --- tensors ---------------------------------------------------------------

TensorElement tensor_normalize(const Presentation& p, int arity, int degree,
                               std::vector<TTerm> terms)
{
    assert(arity == 2 || arity == 3);
    std::erase_if(terms, [&](const TTerm& t) { return torsion_dead(p, t); });
    std::sort(terms.begin(), terms.end());
    std::vector<TTerm> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) & 1)
            out.push_back(terms[i]);
        i = j;
    }
#ifndef NDEBUG
    for (const TTerm& t : out) {
        int d = t.v * (p.flavor == TheoryFlavor::Chow ? 0 : p.vdeg());
        for (int c = 0; c < arity; ++c)
            d += mono_degree(t.mask[c]);
        assert(d == degree);
    }
#endif
    TensorElement e;
    e.arity = arity;
    e.degree = out.empty() ? 0 : degree;
    e.terms = std::move(out);
    return e;
}

TensorElement tensor_zero(int arity)
{
    TensorElement e;
    e.arity = arity;
    return e;
}

TensorElement tensor_one(const Presentation& p, int arity)
{
    return tensor_normalize(p, arity, 0, {TTerm{}});
}

TensorElement tensor_add(const Presentation& p, const TensorElement& x, const TensorElement& y)
{
    if (x.zero())
        return y;
    if (y.zero())
        return x;
    if (x.arity != y.arity)
        throw InputError("tensor_add: arity mismatch");
    if (x.degree != y.degree)
        throw InputError("tensor_add: degree mismatch");
    std::vector<TTerm> terms = x.terms;
    terms.insert(terms.end(), y.terms.begin(), y.terms.end());
    return tensor_normalize(p, x.arity, x.degree, std::move(terms));
}

TensorElement tensor_mul(const Presentation& p, const TensorElement& x, const TensorElement& y)
{
    if (x.zero() || y.zero())
        return tensor_zero(x.zero() ? y.arity : x.arity);
    if (x.arity != y.arity)
        throw InputError("tensor_mul: arity mismatch");
    std::vector<TTerm> terms;
    terms.reserve(x.terms.size() * y.terms.size());
    for (const TTerm& a : x.terms)
        for (const TTerm& b : y.terms) {
            TTerm t;
            t.v = a.v + b.v;
            bool dead = false;
            for (int c = 0; c < x.arity; ++c) {
                auto m = mono_mul(p, a.mask[c], b.mask[c]);
                if (!m) {
                    dead = true;
                    break;
                }
                t.mask[c] = *m;
            }
            if (!dead)
                terms.push_back(t);
        }
    return tensor_normalize(p, x.arity, x.degree + y.degree, std::move(terms));
}

TensorElement tensor_vshift(const Presentation& p, const TensorElement& x, int dv)
{
    if (dv == 0 || x.zero())
        return x;
    if (p.flavor == TheoryFlavor::Chow)
        throw InputError("tensor_vshift: the Chow theory has no v_n");
    std::vector<TTerm> terms = x.terms;
    for (TTerm& t : terms)
        t.v += dv;
    return tensor_normalize(p, x.arity, x.degree + dv * p.vdeg(), std::move(terms));
}

TensorElement tensor_embed(const Presentation& p, const Element& x, int arity, int pos)
{
    assert(pos >= 0 && pos < arity);
    if (x.zero())
        return tensor_zero(arity);
    std::vector<TTerm> terms;
    terms.reserve(x.terms.size());
    for (const Term& t : x.terms) {
        TTerm tt;
        tt.mask[pos] = t.mask;
        tt.v = t.v;
        terms.push_back(tt);
    }
    return tensor_normalize(p, arity, x.degree, std::move(terms));
}

TensorElement tensor_swap(const TensorElement& x)
{
    assert(x.arity == 2);
    TensorElement y = x;
    for (TTerm& t : y.terms)
        std::swap(t.mask[0], t.mask[1]);
    std::sort(y.terms.begin(), y.terms.end());
    return y;
}

// --- homogeneous components -------------------------------------------------

std::optional<int> forced_vpow(const Presentation& p, Mask mask, int degree)
{
    int d = mono_degree(mask);
    if (p.flavor == TheoryFlavor::Chow)
        return d == degree ? std::optional<int>(0) : std::nullopt;
    int period = (1 << p.n) - 1;
    int diff = d - degree;
    if (diff % period != 0)
        return std::nullopt;
    int v = diff / period;
    if (p.flavor == TheoryFlavor::ConnectiveMorava) {
        if (v < 0)
            return std::nullopt;
        if (v >= 1 && (mask & p.torsion_mask()))
            return std::nullopt;
    }
    return v;
}

std::vector<Term> component_basis(const Presentation& p, int degree)
{
    std::vector<Term> out;
    for (Mask m : all_masks(p))
        if (auto v = forced_vpow(p, m, degree))
            out.push_back(Term{m, *v});
    return out;
}

// --- text forms ---------------------------------------------------------------

std::string mono_str(Mask m)
{
    if (m == 0)
        return "1";
    std::string s;
    bool first = true;
    while (m) {
        int i = std::countr_zero(m) + 1;
        if (!first)
            s += '*';
        s += 'e';
        s += std::to_string(i);
        first = false;
        m &= m - 1;
    }
    return s;
}

std::string term_str(const Term& t)
{
    if (t.v == 0)
        return mono_str(t.mask);
    return "v^" + std::to_string(t.v) + "*" + mono_str(t.mask);
}

std::string elem_str(const Element& x)
{
    if (x.zero())
        return "0";
    std::vector<Term> terms = x.terms;
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.mask != b.mask)
            return mask_lex_less(a.mask, b.mask);
        return a.v < b.v;
    });
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            s += " + ";
        s += term_str(terms[i]);
    }
    return s;
}

std::string tterm_str(const TTerm& t, int arity)
{
    std::string s;
    if (t.v != 0)
        s += "v^" + std::to_string(t.v) + "*";
    for (int c = 0; c < arity; ++c) {
        if (c)
            s += " (x) ";
        s += mono_str(t.mask[c]);
    }
    return s;
}

std::string tensor_str(const TensorElement& x)
{
    if (x.zero())
        return "0";
    std::vector<TTerm> terms = x.terms;
    std::sort(terms.begin(), terms.end(), [](const TTerm& a, const TTerm& b) {
        for (int c = 0; c < 3; ++c) {
            if (a.mask[c] != b.mask[c])
                return mask_lex_less(a.mask[c], b.mask[c]);
        }
        return a.v < b.v;
    });
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            s += " + ";
        s += tterm_str(terms[i], x.arity);
    }
    return s;
}

} // namespace morava
