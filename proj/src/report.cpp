#include "morava/report.hpp"

#include <algorithm>

namespace morava {

using nlohmann::json;

namespace {

json presentation_json(const Presentation& p)
{
    json j;
    j["theory"] = flavor_name(p.flavor);
    if (p.is_morava())
        j["n"] = p.n;
    j["m"] = p.m;
    j["s"] = p.s;
    j["r"] = p.r();
    j["truncations"] = p.exps;
    if (p.torsion_threshold)
        j["torsion_threshold"] = *p.torsion_threshold;
    else
        j["torsion_threshold"] = nullptr;
    j["rank"] = p.rank();
    return j;
}

std::vector<int> odd_generators(const Presentation& p)
{
    std::vector<int> out;
    for (int i = 1; i <= kMaxGeneratorIndex; i += 2)
        if (p.index_valid(i))
            out.push_back(i);
    return out;
}

} // namespace

json algebra_document(const Presentation& p)
{
    json j;
    j["schema"] = kSchema;
    j["presentation"] = presentation_json(p);
    json gens = json::array();
    for (int q : odd_generators(p)) {
        json g;
        g["generator"] = "e" + std::to_string(q);
        g["comul_reduced"] = tensor_str(comul_gen_reduced(p, q));
        gens.push_back(std::move(g));
    }
    j["comultiplications"] = std::move(gens);
    return j;
}

std::string algebra_text(const Presentation& p)
{
    std::string out;
    out += "theory " + std::string(flavor_name(p.flavor));
    if (p.is_morava())
        out += " n=" + std::to_string(p.n);
    out += " m=" + std::to_string(p.m) + "\n";
    out += "s = " + std::to_string(p.s) + "\n";
    out += "r = " + std::to_string(p.r()) + "\n";
    out += "truncations =";
    for (int e : p.exps)
        out += " " + std::to_string(e);
    out += "\n";
    if (p.torsion_threshold)
        out += "torsion_threshold = " + std::to_string(*p.torsion_threshold) + "\n";
    out += "rank = " + std::to_string(p.rank()) + "\n";
    for (int q : odd_generators(p)) {
        out += "Dt(e" + std::to_string(q) + ") = " +
               tensor_str(comul_gen_reduced(p, q)) + "\n";
    }
    return out;
}

json jinv_document(const ChowJInput& in)
{
    json j;
    j["schema"] = kSchema;
    j["n"] = in.n;
    j["m"] = in.m;
    j["J"] = std::vector<int>(in.J.begin(), in.J.end());
    Admissibility adm = validate_chow_J(in);
    j["tuple"] = adm.tuple;

    j["ranks"] = {
        {"chow", j_invariant(TheoryFlavor::Chow, in).rank},
        {"ck", j_invariant(TheoryFlavor::ConnectiveMorava, in).rank},
        {"k", j_invariant(TheoryFlavor::PeriodicMorava, in).rank},
    };

    MotiveSummary ms = motive_summary(in);
    j["motive"] = {
        {"layer_rank", ms.layer_rank},   {"layer_count", ms.layer_count},
        {"indecomposable", ms.indecomposable}, {"summand_count", ms.summand_count},
        {"summand_rank", ms.summand_rank},
    };

    RestrictionReport rr = steenrod_restrictions(in.m, in.J, {in.n});
    json vishik = json::array();
    for (const auto& v : rr.vishik)
        vishik.push_back({{"i", v.i}, {"t", v.t}, {"needs", v.i + v.t}});
    json mor = json::array();
    for (const auto& v : rr.morava)
        mor.push_back({{"n", v.n}, {"k", v.k}, {"needs", (1 << v.n) - 1 - v.k}});
    j["restrictions"] = {{"vishik", std::move(vishik)}, {"morava", std::move(mor)}};
    return j;
}

json idempotents_document(const DualPresentation& dp,
                          const std::vector<DualElement>& idems,
                          const std::set<int>* J)
{
    json j;
    j["schema"] = kSchema;
    j["n"] = dp.base.n;
    j["m"] = dp.base.m;
    if (J)
        j["J"] = std::vector<int>(J->begin(), J->end());
    std::vector<std::string> strs;
    strs.reserve(idems.size());
    for (const DualElement& e : idems)
        strs.push_back(dual_str(dp, e));
    std::sort(strs.begin(), strs.end());
    j["count"] = strs.size();
    j["idempotents"] = std::move(strs);
    return j;
}

json hopf_report_document(const Presentation& p, const HopfReport& rep)
{
    json j;
    j["schema"] = kSchema;
    j["presentation"] = presentation_json(p);
    json axioms = json::array();
    for (const auto& a : rep.axioms) {
        json e;
        e["axiom"] = a.axiom;
        e["pass"] = a.pass;
        if (!a.pass)
            e["witness"] = a.witness;
        axioms.push_back(std::move(e));
    }
    j["axioms"] = std::move(axioms);
    j["pass"] = rep.all_pass();
    return j;
}

json duality_report_document(const Presentation& p, const DualityReport& rep)
{
    json j;
    j["schema"] = kSchema;
    j["presentation"] = presentation_json(p);
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["check"] = c.name;
        e["pass"] = c.pass;
        if (!c.pass)
            e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["pass"] = rep.all_pass();
    return j;
}

json tuple_rows_document(const Presentation& p, const std::vector<TupleRow>& rows)
{
    json j;
    j["schema"] = kSchema;
    j["presentation"] = presentation_json(p);
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"tuple", r.tuple},
                       {"bi_ideal", r.bi_ideal},
                       {"saturated", r.saturated},
                       {"restriction", r.restriction},
                       {"strategy", "TUPLE"}});
    }
    j["ideals"] = std::move(arr);
    return j;
}

} // namespace morava
