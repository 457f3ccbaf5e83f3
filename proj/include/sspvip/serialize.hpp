#pragma once

#include "sspvip/instance.hpp"
#include "sspvip/solver.hpp"
#include "sspvip/verify.hpp"

#include <json.hpp>

#include <string>

namespace sspvip {

using Json = nlohmann::json;

// Instance files are JSON. Doubles round-trip bit-exactly (shortest
// round-trip serialization); +/-infinity box bounds are encoded as the
// strings "inf" / "-inf".
Json instance_to_json(const SspvipInstance& inst);
SspvipInstance instance_from_json(const Json& j);

Json certificate_to_json(const ContractionCertificate& cert);
Json verify_report_to_json(const VerifyReport& report);

// solve summary: config echo, certificate, status, iteration count, final
// residuals and error
Json summary_to_json(const SolveResult& result, const SolverConfig& cfg);

// delimited trace table; header n,r1,r2,r3,r4,err_star,step,theta_bound_rhs,
// numbers printed with 17 significant digits, unknown fields empty
std::string trace_to_csv(const SolveResult& result);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

SspvipInstance load_instance(const std::string& path);
void save_instance(const SspvipInstance& inst, const std::string& path);

}  // namespace sspvip
