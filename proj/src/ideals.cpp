#include "morava/ideals.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "morava/hopf.hpp"

namespace morava {

namespace {

std::vector<Mask> sorted_masks(const Presentation& p)
{
    return all_masks(p);
}

std::size_t mask_pos(const std::vector<Mask>& masks, Mask m)
{
    auto it = std::lower_bound(masks.begin(), masks.end(), m);
    assert(it != masks.end() && *it == m);
    return static_cast<std::size_t>(it - masks.begin());
}

bool single_term_gens(const Ideal& I)
{
    for (const Element& g : I.gens)
        if (g.terms.size() != 1)
            return false;
    return true;
}

bool mask_divides(const Presentation& p, Mask a, Mask b)
{
    std::vector<int> ea = mask_to_exponents(p, a);
    std::vector<int> eb = mask_to_exponents(p, b);
    for (int i = 0; i < p.r(); ++i)
        if (ea[i] > eb[i])
            return false;
    return true;
}

// membership of the live coordinate (mask, degree) in a monomial ideal
bool mono_member(const Ideal& I, Mask m, int degree)
{
    const Presentation& p = I.pres;
    for (const Element& g : I.gens) {
        const Term& t = g.terms.front();
        if (!mask_divides(p, t.mask, m))
            continue;
        if (p.flavor == TheoryFlavor::PeriodicMorava)
            return true;
        auto f = forced_vpow(p, m, degree);
        assert(f);
        if (*f - t.v >= 0)
            return true;
    }
    return false;
}

} // namespace

Ideal ideal_from_tuple(const Presentation& p, const std::vector<int>& tuple)
{
    if (static_cast<int>(tuple.size()) != p.r())
        throw InputError("ideal_from_tuple: tuple length must match the generator count");
    Ideal I;
    I.pres = p;
    for (int i = 1; i <= p.r(); ++i) {
        int a = tuple[i - 1];
        if (a < 0 || a > p.exps[i - 1])
            throw InputError("ideal_from_tuple: exponent out of range");
        if (a == p.exps[i - 1])
            continue; // generator vanishes by truncation
        std::vector<int> e(p.r(), 0);
        e[i - 1] = 1 << a;
        auto m = exponents_to_mask(p, e);
        assert(m);
        I.gens.push_back(elem_mono(p, *m));
    }
    return I;
}

Ideal ideal_from_elements(const Presentation& p, std::vector<Element> gens)
{
    Ideal I;
    I.pres = p;
    for (Element& g : gens)
        if (!g.zero())
            I.gens.push_back(std::move(g));
    return I;
}

Gf2Span ideal_component(const Ideal& I, int degree)
{
    const Presentation& p = I.pres;
    std::vector<Mask> masks = sorted_masks(p);
    Gf2Span span(masks.size());
    int period = p.is_morava() ? (1 << p.n) - 1 : 0;
    for (const Element& g : I.gens) {
        for (Mask mr : masks) {
            int base = g.degree + mono_degree(mr);
            int c = 0;
            if (p.flavor == TheoryFlavor::Chow) {
                if (base != degree)
                    continue;
            } else {
                if ((base - degree) % period != 0)
                    continue;
                c = (base - degree) / period;
                if (p.flavor == TheoryFlavor::ConnectiveMorava && c < 0)
                    continue;
            }
            Element x = elem_mul(p, g, elem_mono(p, mr));
            if (x.zero())
                continue;
            x = elem_vshift(p, x, c);
            if (x.zero())
                continue;
            BitVec row(masks.size());
            for (const Term& t : x.terms)
                row.flip(mask_pos(masks, t.mask));
            span.insert(std::move(row));
        }
    }
    return span;
}

bool membership(const Ideal& I, const Element& x)
{
    if (x.zero())
        return true;
    if (single_term_gens(I)) {
        bool mono = true;
        for (const Element& g : I.gens)
            if (g.terms.front().v != 0)
                mono = false;
        if (mono) {
            for (const Term& t : x.terms)
                if (!mono_member(I, t.mask, x.degree))
                    return false;
            return true;
        }
    }
    std::vector<Mask> masks = sorted_masks(I.pres);
    Gf2Span span = ideal_component(I, x.degree);
    BitVec row(masks.size());
    for (const Term& t : x.terms)
        row.flip(mask_pos(masks, t.mask));
    return span.contains(row);
}

Ideal saturate(const Ideal& I)
{
    const Presentation& p = I.pres;
    if (p.flavor != TheoryFlavor::ConnectiveMorava)
        throw InputError("saturate: saturation is trivial outside the connective flavor");
    std::vector<Mask> masks = sorted_masks(p);
    Ideal J = I;
    int dmax = p.top_degree();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int d = 0; d <= dmax; ++d) {
            std::vector<Term> dom = component_basis(p, d);
            if (dom.empty())
                continue;
            Gf2Span target = ideal_component(J, d + p.vdeg());
            // v-multiplication in mask coordinates: identity on surviving
            // masks, zero on torsion-killed ones
            std::vector<BitVec> images;
            images.reserve(dom.size());
            for (const Term& t : dom) {
                BitVec img(masks.size());
                Element vx = elem_vshift(p, elem_mono(p, t.mask, t.v), 1);
                for (const Term& u : vx.terms)
                    img.flip(mask_pos(masks, u.mask));
                images.push_back(target.reduce(std::move(img)));
            }
            for (const BitVec& combo : gf2_kernel(images, dom.size())) {
                std::vector<Term> terms;
                for (std::size_t i = 0; i < dom.size(); ++i)
                    if (combo.get(i))
                        terms.push_back(dom[i]);
                Element x = normalize(p, d, std::move(terms));
                if (!x.zero() && !membership(J, x)) {
                    J.gens.push_back(x);
                    changed = true;
                }
            }
        }
    }
    return J;
}

bool ideal_equal(const Ideal& I, const Ideal& J)
{
    const Presentation& p = I.pres;
    if (!(p == J.pres))
        return false;
    int lo = 0;
    int hi = p.top_degree();
    if (p.flavor == TheoryFlavor::PeriodicMorava)
        hi = (1 << p.n) - 2; // components repeat with the v-period
    for (int d = lo; d <= hi; ++d)
        if (!(ideal_component(I, d) == ideal_component(J, d)))
            return false;
    return true;
}

namespace {

// Is the tensor term v^a mL (x) mR absorbed by I (x) H + H (x) I, for a
// monomial ideal? The v-power may be split across the two legs; a leg with
// a positive share must survive torsion.
bool tensor_term_absorbed(const Ideal& I, const TTerm& t)
{
    const Presentation& p = I.pres;
    Mask high = p.torsion_mask();
    for (int side = 0; side < 2; ++side) {
        Mask mine = t.mask[side];
        Mask other = t.mask[1 - side];
        for (const Element& g : I.gens) {
            const Term& gt = g.terms.front();
            if (!mask_divides(p, gt.mask, mine))
                continue;
            if (p.flavor == TheoryFlavor::PeriodicMorava)
                return true;
            // need a1 in [gt.v, t.v] with v^{a1} mine and v^{t.v-a1} other alive
            int lo = gt.v;
            int hi = t.v;
            for (int a1 = lo; a1 <= hi; ++a1) {
                bool mine_dead = a1 >= 1 && (mine & high);
                bool other_dead = (t.v - a1) >= 1 && (other & high);
                if (!mine_dead && !other_dead)
                    return true;
            }
        }
    }
    return false;
}

// Rows of I (x) H + H (x) I at the given degree, as coordinate lists.
struct TensorSpan {
    std::map<std::pair<Mask, Mask>, std::size_t> coord;
    std::vector<std::vector<std::pair<Mask, Mask>>> rows;

    void add_row(std::vector<std::pair<Mask, Mask>> r)
    {
        for (const auto& c : r)
            coord.emplace(c, 0);
        rows.push_back(std::move(r));
    }

    bool contains(const Presentation& p, const TensorElement& t)
    {
        for (const TTerm& tt : t.terms)
            coord.emplace(std::make_pair(tt.mask[0], tt.mask[1]), 0);
        std::size_t width = 0;
        for (auto& kv : coord)
            kv.second = width++;
        Gf2Span span(std::max<std::size_t>(width, 1));
        for (const auto& r : rows) {
            BitVec row(std::max<std::size_t>(width, 1));
            for (const auto& c : r)
                row.flip(coord.at(c));
            span.insert(std::move(row));
        }
        BitVec probe(std::max<std::size_t>(width, 1));
        for (const TTerm& tt : t.terms)
            probe.flip(coord.at(std::make_pair(tt.mask[0], tt.mask[1])));
        (void)p;
        return span.contains(probe);
    }
};

TensorSpan tensor_ideal_span(const Ideal& I, int degree)
{
    const Presentation& p = I.pres;
    std::vector<Mask> masks = sorted_masks(p);
    Mask high = p.torsion_mask();
    TensorSpan ts;
    int lo = 0;
    int hi = p.top_degree();
    if (p.flavor == TheoryFlavor::PeriodicMorava)
        hi = (1 << p.n) - 2;
    for (int d1 = lo; d1 <= hi; ++d1) {
        Gf2Span comp = ideal_component(I, d1);
        if (comp.dim() == 0)
            continue;
        for (const BitVec& row : comp.rows()) {
            std::vector<Mask> left;
            for (std::size_t i = 0; i < masks.size(); ++i)
                if (row.get(i))
                    left.push_back(masks[i]);
            for (Mask mr : masks) {
                int d2 = degree - d1;
                auto f2 = forced_vpow(p, mr, d2);
                if (!f2)
                    continue;
                // left side: u (x) v^{f2} mr, and mirrored
                for (int side = 0; side < 2; ++side) {
                    std::vector<std::pair<Mask, Mask>> coords;
                    for (Mask ml : left) {
                        auto f1 = forced_vpow(p, ml, d1);
                        assert(f1);
                        bool dead = (*f1 + *f2 >= 1) && ((ml | mr) & high);
                        if (dead)
                            continue;
                        coords.emplace_back(side == 0 ? std::make_pair(ml, mr)
                                                      : std::make_pair(mr, ml));
                    }
                    if (!coords.empty())
                        ts.add_row(std::move(coords));
                }
            }
        }
    }
    return ts;
}

} // namespace

bool is_bi_ideal(const Ideal& I)
{
    const Presentation& p = I.pres;
    if (I.gens.empty())
        return true;
    HopfCache cache(p);
    bool mono = single_term_gens(I);
    if (mono)
        for (const Element& g : I.gens)
            if (g.terms.front().v != 0)
                mono = false;
    for (const Element& g : I.gens) {
        TensorElement d = cache.delta_elem(g);
        if (mono) {
            for (const TTerm& t : d.terms)
                if (!tensor_term_absorbed(I, t))
                    return false;
        } else {
            TensorSpan ts = tensor_ideal_span(I, d.degree);
            if (!ts.contains(p, d))
                return false;
        }
    }
    return true;
}

bool restriction_holds(const Ideal& I, int n)
{
    const Presentation& p = I.pres;
    if (n < 1)
        return true;
    for (int k = 1; 2 * k <= (1 << n) - 2; ++k) {
        int i1 = (1 << n) - 1 - 2 * k;
        int i2 = (1 << n) - 1 - k;
        if (!p.index_valid(i1) || !p.index_valid(i2))
            continue;
        if (membership(I, elem_gen(p, i1)) && !membership(I, elem_gen(p, i2)))
            return false;
    }
    return true;
}

std::vector<TupleRow> enumerate_tuple_bi_ideals(const Presentation& p)
{
    std::vector<TupleRow> rows;
    std::vector<int> tuple(p.r(), 0);

    // stable-range quotient data for the connective saturation test
    std::optional<Presentation> stable;
    if (p.flavor == TheoryFlavor::ConnectiveMorava) {
        int m0 = p.m;
        if (p.m > (1 << (p.n + 1)))
            m0 = (p.m % 2 == 1) ? (1 << (p.n + 1)) - 1 : (1 << (p.n + 1));
        stable = make_presentation(TheoryFlavor::ConnectiveMorava, p.n, m0);
    }

    for (;;) {
        TupleRow row;
        row.tuple = tuple;
        Ideal I = ideal_from_tuple(p, tuple);
        row.bi_ideal = is_bi_ideal(I);
        row.restriction = p.is_morava() ? restriction_holds(I, p.n) : true;
        if (p.flavor == TheoryFlavor::ConnectiveMorava) {
            std::vector<int> t0(stable->r());
            for (int i = 0; i < stable->r(); ++i)
                t0[i] = std::min(tuple[i], stable->exps[i]);
            Ideal I0 = ideal_from_tuple(*stable, t0);
            row.saturated = ideal_equal(I0, saturate(I0));
        } else {
            row.saturated = true;
        }
        rows.push_back(std::move(row));

        int i = p.r() - 1;
        while (i >= 0 && tuple[i] == p.exps[i]) {
            tuple[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++tuple[i];
    }
    return rows;
}

BiIdealEnumeration enumerate_saturated_bi_ideals(const Presentation& p,
                                                 long long max_candidates)
{
    BiIdealEnumeration out;
    out.rows = enumerate_tuple_bi_ideals(p);
    for (const auto& r : out.rows) {
        if (!r.bi_ideal || !r.saturated)
            continue;
        Ideal I = ideal_from_tuple(p, r.tuple);
        bool dup = false;
        for (const Ideal& J : out.ideals)
            if (ideal_equal(I, J))
                dup = true;
        if (!dup)
            out.ideals.push_back(std::move(I));
    }
    if (p.flavor == TheoryFlavor::PeriodicMorava) {
        try {
            std::vector<std::string> lattice = enumerate_lattice_bi_ideals(p, max_candidates);
            out.lattice_ran = true;
            std::vector<std::string> tuple_profiles;
            for (const Ideal& I : out.ideals)
                tuple_profiles.push_back(ideal_class_profile(I));
            std::sort(tuple_profiles.begin(), tuple_profiles.end());
            out.lattice_agrees = lattice == tuple_profiles;
        } catch (const SizingError&) {
            // the TUPLE walk stands alone above the bound
        }
    }
    return out;
}

std::string ideal_class_profile(const Ideal& I)
{
    const Presentation& p = I.pres;
    if (p.flavor != TheoryFlavor::PeriodicMorava)
        throw InputError("ideal_class_profile: periodic flavor required");
    std::vector<Mask> masks = sorted_masks(p);
    int period = (1 << p.n) - 1;
    std::string out;
    for (int c = 0; c < period; ++c) {
        std::vector<Mask> cls;
        for (Mask m : masks)
            if (mono_degree(m) % period == c)
                cls.push_back(m);
        Gf2Span global = ideal_component(I, c);
        Gf2Span local(cls.size());
        for (const BitVec& row : global.rows()) {
            BitVec lrow(std::max<std::size_t>(cls.size(), 1));
            for (std::size_t i = 0; i < masks.size(); ++i)
                if (row.get(i))
                    lrow.flip(mask_pos(cls, masks[i]));
            local.insert(std::move(lrow));
        }
        out += "c" + std::to_string(c) + ":";
        for (const BitVec& row : local.rows()) {
            for (std::size_t i = 0; i < cls.size(); ++i)
                out += row.get(i) ? '1' : '0';
            out += ',';
        }
        out += ';';
    }
    return out;
}

namespace {

// all subspaces of F_2^k, as lists of reduced-echelon basis rows
std::vector<std::vector<std::uint32_t>> all_subspaces(int k)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t pivots = 0; pivots < (1u << k); ++pivots) {
        std::vector<int> pc;
        for (int i = 0; i < k; ++i)
            if ((pivots >> i) & 1)
                pc.push_back(i);
        // free cells: row i may have entries at columns > pc[i] outside the pivot set
        std::vector<std::pair<int, int>> free_cells; // (row, column)
        for (std::size_t i = 0; i < pc.size(); ++i)
            for (int c = pc[i] + 1; c < k; ++c)
                if (!((pivots >> c) & 1))
                    free_cells.emplace_back(static_cast<int>(i), c);
        for (std::uint64_t fill = 0; fill < (1ULL << free_cells.size()); ++fill) {
            std::vector<std::uint32_t> rows(pc.size());
            for (std::size_t i = 0; i < pc.size(); ++i)
                rows[i] = 1u << pc[i];
            for (std::size_t j = 0; j < free_cells.size(); ++j)
                if ((fill >> j) & 1)
                    rows[free_cells[j].first] |= 1u << free_cells[j].second;
            out.push_back(std::move(rows));
        }
    }
    return out;
}

} // namespace

std::vector<std::string> enumerate_lattice_bi_ideals(const Presentation& p,
                                                     long long max_candidates)
{
    if (p.flavor != TheoryFlavor::PeriodicMorava)
        throw InputError("enumerate_lattice_bi_ideals: periodic flavor required");
    int period = (1 << p.n) - 1;
    std::vector<Mask> masks = sorted_masks(p);
    std::vector<std::vector<Mask>> cls(period);
    for (Mask m : masks)
        cls[mono_degree(m) % period].push_back(m);

    // candidate count = product of the per-class subspace counts
    auto galois = [](int k) {
        long long g0 = 1, g1 = 2; // counts for dimensions 0 and 1
        if (k == 0)
            return g0;
        for (int i = 1; i < k; ++i) {
            long long g2 = 2 * g1 + ((1LL << i) - 1) * g0;
            g0 = g1;
            g1 = g2;
        }
        return g1;
    };
    long long count = 1;
    for (const auto& c : cls) {
        if (c.size() > 12)
            throw SizingError("enumerate_lattice_bi_ideals: degree-class dimension " +
                              std::to_string(c.size()) + " is beyond the lattice walk");
        long long g = galois(static_cast<int>(c.size()));
        if (count > max_candidates / g)
            throw SizingError("enumerate_lattice_bi_ideals: candidate count exceeds " +
                              std::to_string(max_candidates));
        count *= g;
    }

    std::vector<std::vector<std::vector<std::uint32_t>>> spaces(period);
    for (int c = 0; c < period; ++c)
        spaces[c] = all_subspaces(static_cast<int>(cls[c].size()));

    std::vector<int> valid_gens;
    for (int i = 1; i <= kMaxGeneratorIndex; ++i)
        if (p.index_valid(i))
            valid_gens.push_back(i);

    std::vector<std::string> found;
    std::vector<std::size_t> pick(period, 0);
    for (;;) {
        // properness: no vector may have a unit coordinate (class 0 holds the unit)
        bool proper = true;
        {
            std::size_t unit_pos = mask_pos(cls[0], 0);
            for (std::uint32_t row : spaces[0][pick[0]])
                if ((row >> unit_pos) & 1)
                    proper = false;
        }
        if (proper) {
            // closure under multiplication by every generator
            bool ideal_ok = true;
            for (int c = 0; c < period && ideal_ok; ++c) {
                for (std::uint32_t row : spaces[c][pick[c]]) {
                    for (int t : valid_gens) {
                        int c2 = (c + t) % period;
                        std::uint32_t image = 0;
                        for (std::size_t i = 0; i < cls[c].size(); ++i) {
                            if (!((row >> i) & 1))
                                continue;
                            auto prod = mono_mul(p, cls[c][i], Mask{1} << (t - 1));
                            if (prod)
                                image ^= 1u << mask_pos(cls[c2], *prod);
                        }
                        // reduce against the chosen subspace of class c2
                        for (std::uint32_t r2 : spaces[c2][pick[c2]]) {
                            std::uint32_t piv = r2 & ~(r2 - 1);
                            if (image & piv)
                                image ^= r2;
                        }
                        if (image) {
                            ideal_ok = false;
                            break;
                        }
                    }
                    if (!ideal_ok)
                        break;
                }
            }
            if (ideal_ok) {
                std::vector<Element> gens;
                for (int c = 0; c < period; ++c)
                    for (std::uint32_t row : spaces[c][pick[c]]) {
                        std::vector<Term> terms;
                        for (std::size_t i = 0; i < cls[c].size(); ++i)
                            if ((row >> i) & 1) {
                                int v = (mono_degree(cls[c][i]) - c) / period;
                                terms.push_back(Term{cls[c][i], v});
                            }
                        gens.push_back(normalize(p, c, std::move(terms)));
                    }
                Ideal I = ideal_from_elements(p, std::move(gens));
                if (is_bi_ideal(I))
                    found.push_back(ideal_class_profile(I));
            }
        }

        int c = period - 1;
        while (c >= 0 && pick[c] + 1 == spaces[c].size()) {
            pick[c] = 0;
            --c;
        }
        if (c < 0)
            break;
        ++pick[c];
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

ImpossibleEquationReport check_impossible_equation(int n, int m)
{
    if (n < 1 || m < 3 || m > (1 << (n + 1)))
        throw InputError("check_impossible_equation: need 3 <= m <= 2^{n+1}");
    ImpossibleEquationReport rep;
    int s = (m - 1) / 2;
    long long dmax = static_cast<long long>(s) * (s + 1) / 2;
    long long period = (1LL << n) - 1;
    long long xmax = dmax / period + 2;
    long long zmax = 1;
    while ((1LL << zmax) <= dmax)
        ++zmax;
    ++zmax;
    int rbound = (m + 1) / 4;
    for (long long j = 1; j <= rbound; ++j) {
        int ybound = truncation_exponent(static_cast<int>(j), m); // y < floor(log2((m-1)/(2j-1)))
        for (long long y = 0; y < ybound; ++y)
            for (long long k = 1; k <= rbound; ++k)
                for (long long z = 0; z <= zmax; ++z)
                    for (long long x = 1; x <= xmax; ++x) {
                        ++rep.tried;
                        if ((1 - (1LL << n)) * x + (2 * j - 1) * (1LL << y) ==
                            (2 * k - 1) * (1LL << z)) {
                            rep.empty = false;
                            rep.solutions.push_back({x, j, y, k, z});
                        }
                    }
    }
    return rep;
}

} // namespace morava
