#pragma once

#include <json.hpp>

#include "sl2lab/envelope.hpp"
#include "sl2lab/module.hpp"
#include "sl2lab/submodule.hpp"
#include "sl2lab/verify.hpp"

namespace sl2lab {

// All emitters tag the object with "schema": 1 and encode scalars as
// [re, im] string pairs, so output is byte-deterministic.

nlohmann::json scalar_to_json(const GaussianRational& s);
nlohmann::json poly_to_json(const Poly& p);

nlohmann::json nf_to_json(const PauliNF& u);
nlohmann::json nf_to_json(const CartanNF& u);
nlohmann::json element_to_json(const ModuleElement& m);
nlohmann::json rpoly_to_json(const RPolyResult& r, const GaussianRational& lambda);
nlohmann::json certificate_to_json(const ReductionCertificate& c);
nlohmann::json classify_to_json(const GaussianRational& lambda,
                                const std::vector<ModuleElement>& gens,
                                const ClassifyOutcome& outcome);
nlohmann::json probe_to_json(const ProbeReport& r);
nlohmann::json suite_to_json(const SuiteReport& r);

}  // namespace sl2lab
