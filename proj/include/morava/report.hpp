#pragma once

#include <json.hpp>

#include "morava/dual.hpp"
#include "morava/hopf.hpp"
#include "morava/ideals.hpp"
#include "morava/motives.hpp"

namespace morava {

inline constexpr const char* kSchema = "morava-hopf/1";

// presentation + reduced co-multiplication of every odd generator
nlohmann::json algebra_document(const Presentation& p);

// the J-invariant pipeline result document
nlohmann::json jinv_document(const ChowJInput& in);

nlohmann::json idempotents_document(const DualPresentation& dp,
                                    const std::vector<DualElement>& idems,
                                    const std::set<int>* J);

nlohmann::json hopf_report_document(const Presentation& p, const HopfReport& rep);
nlohmann::json duality_report_document(const Presentation& p, const DualityReport& rep);
nlohmann::json tuple_rows_document(const Presentation& p, const std::vector<TupleRow>& rows);

// plain-text renderings used by the CLI
std::string algebra_text(const Presentation& p);

} // namespace morava
