#pragma once

#include <json.hpp>

#include "qcrank/crank_gf.hpp"
#include "qcrank/modular_cert.hpp"

namespace qcrank {

/// All report schemas carry integers as decimal strings and rationals as
/// "num/den" so downstream consumers never round.
using Json = nlohmann::ordered_json;

Json tuple_json(const RaduTuple& t);
Json certificate_json(const Certificate& cert);
Json reduction_json(const ReductionResult& red);
Json report_json(const VerificationReport& report);

}  // namespace qcrank
