#pragma once

#include "gtwidth/oracle.hpp"
#include "gtwidth/polytope.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace gtwidth {

using Json = nlohmann::ordered_json;

std::string group_token(const GroupSpec& g);       // "u" | "so-odd" | "so-even"
GroupSpec group_from_token(const std::string& t, int n);

Json rationals_json(const RatVec& v);
Json weight_json(const Weight& w);
Json boxes_json(const Diagram& d);
Json polytope_json(const Polytope& p);
Json certificate_json(const Certificate& c);
Json sample_report_json(const SampleReport& r);

/// Re-reads a vector of "p/q" strings (as emitted by rationals_json).
RatVec rationals_from_json(const Json& j);

}  // namespace gtwidth
