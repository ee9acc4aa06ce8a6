#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "morava/report.hpp"

namespace {

using namespace morava;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSizing = 3;

long long max_candidates()
{
    if (const char* env = std::getenv("MORAVA_MAX_CANDIDATES"))
        return std::atoll(env);
    return 1LL << 24;
}

TheoryFlavor parse_flavor(const std::string& s)
{
    if (s == "chow")
        return TheoryFlavor::Chow;
    if (s == "ck")
        return TheoryFlavor::ConnectiveMorava;
    if (s == "k")
        return TheoryFlavor::PeriodicMorava;
    throw InputError("unknown theory '" + s + "' (expected chow|ck|k)");
}

Presentation build(const std::string& theory, int n, int m)
{
    TheoryFlavor f = parse_flavor(theory);
    if (f == TheoryFlavor::Chow)
        return make_presentation(f, n == 0 ? std::nullopt : std::optional<int>(n), m);
    if (n < 1)
        throw InputError("Morava flavors require --n >= 1");
    return make_presentation(f, n, m);
}

std::set<int> parse_J(const std::string& text)
{
    std::set<int> J;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) {
                J.insert(std::stoi(cur));
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    return J;
}

// TUPLE walk, compared against the exhaustive LATTICE walk when it fits.
struct BiidealOutcome {
    bool pass = true;
    bool lattice_ran = false;
    std::string text;
};

BiidealOutcome run_biideals(const Presentation& p)
{
    BiidealOutcome out;
    BiIdealEnumeration e = enumerate_saturated_bi_ideals(p, max_candidates());
    int passing = 0;
    for (const auto& r : e.rows) {
        out.text += "tuple (";
        for (std::size_t i = 0; i < r.tuple.size(); ++i)
            out.text += (i ? "," : "") + std::to_string(r.tuple[i]);
        out.text += ") bi_ideal=" + std::to_string(r.bi_ideal) +
                    " saturated=" + std::to_string(r.saturated) +
                    " restriction=" + std::to_string(r.restriction) + " strategy=TUPLE\n";
        if (r.bi_ideal && r.saturated) {
            ++passing;
            // proved direction: saturated bi-ideals obey the index restriction
            if (!r.restriction)
                out.pass = false;
        }
    }
    out.text += std::to_string(passing) + "/" + std::to_string(e.rows.size()) +
                " tuples are saturated bi-ideals (" + std::to_string(e.ideals.size()) +
                " distinct)\n";
    if (e.lattice_ran) {
        out.lattice_ran = true;
        if (e.lattice_agrees) {
            out.text += "LATTICE == TUPLE (" + std::to_string(e.ideals.size()) + " ideals)\n";
        } else {
            out.text += "LATTICE != TUPLE\n";
            out.pass = false;
        }
    } else if (p.flavor == TheoryFlavor::PeriodicMorava) {
        out.text += "LATTICE skipped: candidate space over the configured bound\n";
    }
    return out;
}

int cmd_algebra(const std::string& theory, int n, int m, bool as_json)
{
    Presentation p = build(theory, n, m);
    if (as_json)
        std::cout << algebra_document(p).dump(2) << "\n";
    else
        std::cout << algebra_text(p);
    return kExitPass;
}

int cmd_verify(const std::string& suite, const std::string& theory, int n, int m,
               int max_n, int max_m, bool as_json)
{
    bool sweep = max_n > 0 || max_m > 0;
    bool chow = parse_flavor(theory) == TheoryFlavor::Chow;
    std::vector<std::pair<int, int>> targets;
    if (sweep) {
        int hi_n = chow ? 1 : (max_n > 0 ? max_n : n);
        int hi_m = max_m > 0 ? max_m : m;
        for (int nn = 1; nn <= hi_n; ++nn)
            for (int mm = 3; mm <= hi_m; ++mm)
                targets.emplace_back(chow ? 0 : nn, mm);
    } else {
        targets.emplace_back(n, m);
    }

    bool all_pass = true;
    nlohmann::json docs = nlohmann::json::array();
    for (auto [nn, mm] : targets) {
        Presentation p = build(theory, nn, mm);
        if (suite == "hopf" || suite == "all") {
            HopfReport rep = verify_hopf(p);
            all_pass = all_pass && rep.all_pass();
            if (as_json)
                docs.push_back(hopf_report_document(p, rep));
            else
                std::cout << (rep.all_pass() ? "PASS" : "FAIL") << " hopf " << theory
                          << (p.is_morava() ? " n=" + std::to_string(p.n) : "")
                          << " m=" << p.m << "\n";
        }
        if (suite == "duality" || suite == "all") {
            bool applicable = p.is_morava() &&
                              !(p.flavor == TheoryFlavor::ConnectiveMorava &&
                                p.m > (1 << (p.n + 1)));
            if (!applicable) {
                if (!sweep)
                    throw InputError("duality suite needs a Morava flavor with a free dual");
            } else {
                DualityReport rep = verify_duality(p);
                all_pass = all_pass && rep.all_pass();
                if (as_json)
                    docs.push_back(duality_report_document(p, rep));
                else
                    std::cout << (rep.all_pass() ? "PASS" : "FAIL") << " duality " << theory
                              << " n=" << p.n << " m=" << p.m << "\n";
            }
        }
        if (suite == "biideals" || suite == "all") {
            BiidealOutcome out = run_biideals(p);
            all_pass = all_pass && out.pass;
            if (as_json)
                docs.push_back(tuple_rows_document(p, enumerate_tuple_bi_ideals(p)));
            else
                std::cout << (out.pass ? "PASS" : "FAIL") << " biideals " << theory
                          << (p.is_morava() ? " n=" + std::to_string(p.n) : "")
                          << " m=" << p.m << "\n"
                          << out.text;
        }
    }
    if (as_json)
        std::cout << docs.dump(2) << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int cmd_jinv(int n, int m, const std::string& jtext, bool as_json)
{
    ChowJInput in{n, m, parse_J(jtext)};
    nlohmann::json doc = jinv_document(in);
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return kExitPass;
    }
    std::cout << "n = " << n << ", m = " << m << ", J = {" << jtext << "}\n";
    std::cout << "tuple =";
    for (int a : doc["tuple"])
        std::cout << " " << a;
    std::cout << "\nranks: chow=" << doc["ranks"]["chow"] << " ck=" << doc["ranks"]["ck"]
              << " k=" << doc["ranks"]["k"] << "\n";
    const auto& mv = doc["motive"];
    std::cout << "motive: layer_rank=" << mv["layer_rank"]
              << " layer_count=" << mv["layer_count"]
              << " indecomposable=" << mv["indecomposable"]
              << " summand_count=" << mv["summand_count"]
              << " summand_rank=" << mv["summand_rank"] << "\n";
    std::cout << "restriction violations: vishik=" << doc["restrictions"]["vishik"].size()
              << " morava=" << doc["restrictions"]["morava"].size() << "\n";
    return kExitPass;
}

int cmd_idempotents(int n, int m, const std::string& jtext, bool has_J, bool as_json)
{
    Presentation p = make_presentation(TheoryFlavor::PeriodicMorava, n, m);
    DualPresentation dp = dual_presentation(p);
    std::optional<std::vector<int>> restrict_to;
    std::set<int> J;
    if (has_J) {
        J = parse_J(jtext);
        restrict_to = validate_chow_J(ChowJInput{n, m, J}).tuple;
    }
    std::vector<DualElement> idems = idempotents(dp, restrict_to, max_candidates());
    nlohmann::json doc = idempotents_document(dp, idems, has_J ? &J : nullptr);
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << doc["count"] << " idempotents\n";
        for (const auto& s : doc["idempotents"])
            std::cout << s.get<std::string>() << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Hopf-algebra computations for split special orthogonal groups"};
    app.require_subcommand(1);

    std::string theory = "k";
    int n = 0, m = 0, max_n = 0, max_m = 0;
    std::string suite = "all";
    std::string jtext;
    bool as_json = false;
    bool has_J = false;

    auto* alg = app.add_subcommand("algebra", "presentation and co-multiplication");
    alg->add_option("--theory", theory)->required();
    alg->add_option("--n", n);
    alg->add_option("--m", m)->required();
    alg->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"hopf", "duality", "biideals", "all"}));
    ver->add_option("--theory", theory)->required();
    ver->add_option("--n", n);
    ver->add_option("--m", m);
    ver->add_option("--max-n", max_n);
    ver->add_option("--max-m", max_m);
    ver->add_flag("--json", as_json);

    auto* jinv = app.add_subcommand("jinv", "J-invariant pipeline");
    jinv->add_option("--n", n)->required();
    jinv->add_option("--m", m)->required();
    auto* jopt1 = jinv->add_option("--J", jtext, "comma-separated index list; empty = generic");
    jinv->add_flag("--json", as_json);

    auto* idem = app.add_subcommand("idempotents", "idempotents of the dual");
    idem->add_option("--n", n)->required();
    idem->add_option("--m", m)->required();
    auto* jopt2 = idem->add_option("--J", jtext);
    idem->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (alg->parsed())
            return cmd_algebra(theory, n, m, as_json);
        if (ver->parsed()) {
            if (!(max_n > 0 || max_m > 0) && m < 3)
                throw InputError("verify needs --m (or --max-m)");
            return cmd_verify(suite, theory, n, m, max_n, max_m, as_json);
        }
        if (jinv->parsed())
            return cmd_jinv(n, m, jtext, as_json);
        if (idem->parsed()) {
            has_J = jopt2->count() > 0;
            return cmd_idempotents(n, m, jtext, has_J, as_json);
        }
        (void)jopt1;
    } catch (const SizingError& e) {
        std::cerr << "sizing refusal: " << e.what() << "\n";
        return kExitSizing;
    } catch (const InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
