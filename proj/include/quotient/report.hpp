#pragma once

#include "json.hpp"
#include "quotient/verify.hpp"

namespace quotient {

// JSON views of the report types. Field names follow the struct members.

nlohmann::json as_json(const ComplexityProfile& p);
nlohmann::json as_json(const BoundReport& b);
nlohmann::json as_json(const BoundCheck& b);
nlohmann::json as_json(const VerifyReport& r);
nlohmann::json as_json(const WitnessCase& w);
nlohmann::json as_json(const WitnessCheck& c);
nlohmann::json as_json(const CampaignFailure& f);
nlohmann::json as_json(const CampaignSummary& s);
nlohmann::json as_json(const ReversalSummary& s);

} // namespace quotient
