#pragma once

#include <nlohmann/json_fwd.hpp>

#include "arith/presentations.hpp"
#include "arith/quadform.hpp"
#include "arith/report.hpp"

// JSON wire formats:
//   rational        "p/q" (or "p" when the denominator is 1)
//   matrix          row-major nested arrays
//   form            { "n": int, "a": [["p/q", ...], ...] }
//   certificate     { "gamma": [[int, ...], ...], "reduced": form,
//                     "t": ["p/q", ...], "u": [["p/q", ...], ...] }
//   presentation    { "generators": [names], "relators": [[[name, exp], ...], ...] }
//   report          { "version", "command", "checks": [{name, pass, witness}], "pass" }

namespace arith {

nlohmann::json form_to_json(const QuadraticForm& phi);
QuadraticForm form_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ReductionCertificate& cert);

nlohmann::json imat_to_json(const IMat& m);
IMat imat_from_json(const nlohmann::json& j);

nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);

}  // namespace arith
