#include "morava/motives.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace morava {

namespace {

std::string join_indices(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

Admissibility validate_chow_J(const ChowJInput& in)
{
    if (in.n < 1)
        throw InputError("validate_chow_J: height n >= 1 required");
    Presentation chow = make_presentation(TheoryFlavor::Chow, std::nullopt, in.m);
    int s = chow.s;
    int top = in.m / 2; // for even m the extra index m/2 names the component

    Admissibility res;
    std::set<int> J;
    for (int i : in.J) {
        if (i < 1 || i > top)
            res.out_of_range.push_back(i);
        else if (i <= s)
            J.insert(i); // the component index m/2 (even m) carries no generator
    }

    res.tuple.resize(chow.r());
    for (int i = 1; i <= chow.r(); ++i) {
        int k = chow.exps[i - 1];
        int a = k;
        for (int b = 0; b < k; ++b)
            if (J.count((2 * i - 1) << b)) {
                a = b;
                break;
            }
        res.tuple[i - 1] = a;
    }

    std::set<int> expansion;
    for (int i = 1; i <= chow.r(); ++i)
        for (int b = res.tuple[i - 1]; b < chow.exps[i - 1]; ++b)
            expansion.insert((2 * i - 1) << b);

    for (int i : expansion)
        if (!J.count(i))
            res.missing.push_back(i);
    for (int i : J)
        if (!expansion.count(i))
            res.spurious.push_back(i);
    res.ok = res.missing.empty() && res.spurious.empty() && res.out_of_range.empty();
    return res;
}

namespace {

std::vector<int> require_admissible(const ChowJInput& in)
{
    Admissibility adm = validate_chow_J(in);
    if (!adm.ok) {
        std::string msg = "inadmissible J";
        if (!adm.missing.empty())
            msg += "; missing indices: " + join_indices(adm.missing);
        if (!adm.spurious.empty())
            msg += "; spurious indices: " + join_indices(adm.spurious);
        if (!adm.out_of_range.empty())
            msg += "; out of range: " + join_indices(adm.out_of_range);
        throw InputError(msg);
    }
    return adm.tuple;
}

} // namespace

JInvariantResult j_invariant(TheoryFlavor f, const ChowJInput& in)
{
    std::vector<int> tuple = require_admissible(in);
    JInvariantResult res;
    if (f == TheoryFlavor::Chow) {
        Presentation base = make_presentation(TheoryFlavor::Chow, std::nullopt, in.m);
        res.quotient = quotient_presentation(base, tuple);
    } else if (f == TheoryFlavor::ConnectiveMorava) {
        Presentation base = make_presentation(TheoryFlavor::ConnectiveMorava, in.n, in.m);
        res.quotient = quotient_presentation(base, tuple);
    } else {
        Presentation base = make_presentation(TheoryFlavor::PeriodicMorava, in.n, in.m);
        // surviving generators of index >= 2^n are erased outright
        std::vector<int> capped(base.r());
        for (int i = 1; i <= base.r(); ++i)
            capped[i - 1] = std::min(tuple[i - 1], base.exps[i - 1]);
        res.quotient = quotient_presentation(base, capped);
    }
    res.rank = res.quotient.rank();
    return res;
}

MotiveSummary motive_summary(const ChowJInput& in)
{
    std::vector<int> tuple = require_admissible(in);
    (void)tuple;
    MotiveSummary out;
    out.layer_rank = j_invariant(TheoryFlavor::PeriodicMorava, in).rank;
    long long total = 1LL << ((in.m - 1) / 2);
    assert(total % out.layer_rank == 0);
    out.layer_count = total / out.layer_rank;
    out.indecomposable = in.m <= (1 << (in.n + 1)) - 2 || in.J.count((1 << in.n) - 1) > 0;
    if (out.indecomposable) {
        out.summand_count = out.layer_count;
        out.summand_rank = out.layer_rank;
    } else {
        out.summand_count = 2 * out.layer_count;
        out.summand_rank = out.layer_rank / 2;
    }
    return out;
}

RestrictionReport steenrod_restrictions(int m, const std::set<int>& J,
                                        const std::vector<int>& heights)
{
    RestrictionReport rep;
    int s = (m - 1) / 2;
    for (int i : J) {
        if (i < 1 || i > s)
            continue;
        for (int t = 1; i + t <= s; ++t)
            if (binom_mod2(i, t) && !J.count(i + t))
                rep.vishik.push_back({i, t});
    }
    for (int n : heights) {
        for (int k = 1; 2 * k <= (1 << n) - 2; ++k) {
            int i1 = (1 << n) - 1 - 2 * k;
            int i2 = (1 << n) - 1 - k;
            if (i1 > s || i2 > s)
                continue;
            if (J.count(i1) && !J.count(i2))
                rep.morava.push_back({n, k});
        }
    }
    return rep;
}

ChainCheck steenrod_chain_check(int n, int k)
{
    if (n < 1 || k < 1 || 2 * k > (1 << n) - 2)
        throw InputError("steenrod_chain_check: need 1 <= k <= 2^{n-1}-1");
    ChainCheck res;
    res.ok = true;
    std::vector<int> digits;
    for (int rest = k; rest; rest &= rest - 1)
        digits.push_back(nu2(rest & -rest));
    long long arg = (1LL << n) - 1 - 2 * k;
    for (int d : digits) {
        long long power = 1LL << d;
        int odd = binom_mod2(static_cast<unsigned long long>(arg), power);
        res.steps.push_back({arg, power, odd});
        if (!odd)
            res.ok = false;
        arg += power;
    }
    assert(arg == (1LL << n) - 1 - k);
    return res;
}

Presentation spin_presentation(const Presentation& p)
{
    if (!p.is_morava())
        throw InputError("spin_presentation: Morava flavor required");
    std::vector<int> tuple = p.exps;
    tuple[0] = 0; // kill the e_1 chain
    return quotient_presentation(p, tuple);
}

} // namespace morava
