#include "sl2lab/json_io.hpp"

namespace sl2lab {

using nlohmann::json;

json scalar_to_json(const GaussianRational& s) { return json::array({s.re.str(), s.im.str()}); }

json poly_to_json(const Poly& p) {
    json arr = json::array();
    if (!p.is_zero()) {
        for (int k = 0; k <= *p.degree(); ++k) arr.push_back(scalar_to_json(p.coeff(k)));
    }
    return arr;
}

json nf_to_json(const PauliNF& u) {
    json terms = json::array();
    for (const auto& [key, p] : u.entries()) {
        terms.push_back({{"l", key.first}, {"m", key.second}, {"poly", poly_to_json(p)}});
    }
    return {{"schema", 1}, {"basis", "pauli"}, {"lambda", scalar_to_json(u.lambda())}, {"terms", terms}};
}

json nf_to_json(const CartanNF& u) {
    json terms = json::array();
    if (!u.h_part().is_zero())
        terms.push_back({{"gen", "h"}, {"l", 0}, {"poly", poly_to_json(u.h_part())}});
    for (const auto& [l, p] : u.x_part())
        terms.push_back({{"gen", "x"}, {"l", l}, {"poly", poly_to_json(p)}});
    for (const auto& [l, p] : u.y_part())
        terms.push_back({{"gen", "y"}, {"l", l}, {"poly", poly_to_json(p)}});
    return {{"schema", 1}, {"basis", "cartan"}, {"lambda", scalar_to_json(u.lambda())}, {"terms", terms}};
}

json element_to_json(const ModuleElement& m) {
    return {{"schema", 1},
            {"lambda", scalar_to_json(m.lambda())},
            {"f", poly_to_json(m.f())},
            {"g", poly_to_json(m.g())}};
}

json rpoly_to_json(const RPolyResult& r, const GaussianRational& lambda) {
    return {{"schema", 1},
            {"lambda", scalar_to_json(lambda)},
            {"n", r.n},
            {"r", r.r.str()},
            {"rstar", r.rstar.str()},
            {"c_r_factor", r.c_r_factor.str()}};
}

json certificate_to_json(const ReductionCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps) {
        steps.push_back({{"op", s.op.str()}, {"element", s.after.str()}, {"note", s.description}});
    }
    return {{"initial", c.initial.str()}, {"steps", steps}, {"terminal", c.terminal.str()}};
}

json classify_to_json(const GaussianRational& lambda, const std::vector<ModuleElement>& gens,
                      const ClassifyOutcome& outcome) {
    json out = {{"schema", 1},
                {"lambda", scalar_to_json(lambda)},
                {"verdict", submodule_name(outcome.verdict)},
                {"checks", json::array()}};
    if (gens.size() == 1 && outcome.certificates.size() == 1) {
        const auto& cert = outcome.certificates[0];
        json steps = json::array();
        for (const auto& s : cert.steps)
            steps.push_back({{"op", s.op.str()}, {"element", s.after.str()}});
        out["certificate"] = steps;
    } else {
        json per_gen = json::array();
        size_t ci = 0;
        for (const auto& g : gens) {
            json entry = {{"generator", g.str()}};
            if (!g.is_zero() && ci < outcome.certificates.size())
                entry["certificate"] = certificate_to_json(outcome.certificates[ci++]);
            per_gen.push_back(std::move(entry));
        }
        out["generators"] = per_gen;
    }
    return out;
}

json probe_to_json(const ProbeReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    return {{"schema", 1},
            {"lambda", scalar_to_json(r.lambda)},
            {"degree", r.sample_degree},
            {"verdict", r.passed() ? "pass" : "fail"},
            {"checks", checks}};
}

json suite_to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    return {{"schema", 1},
            {"suite", r.suite},
            {"lambda", scalar_to_json(r.lambda)},
            {"degree", r.degree},
            {"verdict", r.passed() ? "pass" : "fail"},
            {"checks", checks}};
}

}  // namespace sl2lab
