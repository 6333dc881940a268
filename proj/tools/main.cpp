// Command-line front end: parse generator expressions and module elements,
// dispatch to the algebra engines, run named verification suites, and emit
// text or JSON reports.
//
// Exit codes: 0 success / suite pass, 1 property violation or internal
// inconsistency, 2 usage error (bad flags, syntax errors, domain errors).

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "sl2lab/envelope.hpp"
#include "sl2lab/json_io.hpp"
#include "sl2lab/module.hpp"
#include "sl2lab/parse.hpp"
#include "sl2lab/submodule.hpp"
#include "sl2lab/verify.hpp"

using namespace sl2lab;

namespace {

struct Options {
    std::string lambda_text;
    std::string basis = "pauli";
    std::string format = "text";
    std::string suite;
    std::string which;
    std::string op_text;
    std::string elem_text;
    std::vector<std::string> exprs;
    int degree = 0;
};

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_normalize(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    ExprSum e = lower_to_sum(parse_expr(opt.exprs.at(0)));
    if (opt.basis == "cartan") {
        CartanNF nf = normalize_cartan(e, lambda);
        if (opt.format == "json") emit(nf_to_json(nf));
        else std::cout << nf.str() << "\n";
    } else {
        PauliNF nf = normalize_pauli(e, lambda);
        if (opt.format == "json") emit(nf_to_json(nf));
        else std::cout << nf.str() << "\n";
    }
    return 0;
}

int cmd_act(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    PauliNF op = normalize_pauli(lower_to_sum(parse_expr(opt.op_text)), lambda);
    ModuleElement m = parse_module_element(lambda, opt.elem_text);
    ModuleElement result = act_nf(op, m);
    if (opt.format == "json") emit(element_to_json(result));
    else std::cout << result.str() << "\n";
    return 0;
}

int cmd_grade(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    nlohmann::json comps = nlohmann::json::array();
    if (!opt.elem_text.empty()) {
        ModuleElement m = parse_module_element(lambda, opt.elem_text);
        for (const auto& [label, comp] : z2sq_split(m)) {
            if (opt.format == "json")
                comps.push_back({{"label", label.str()}, {"value", comp.str()}});
            else std::cout << label.str() << ": " << comp.str() << "\n";
        }
    } else if (opt.basis == "cartan") {
        CartanNF nf = normalize_cartan(lower_to_sum(parse_expr(opt.exprs.at(0))), lambda);
        for (const auto& [label, comp] : grade_components_z(nf)) {
            if (opt.format == "json")
                comps.push_back({{"label", label.str()}, {"value", comp.str()}});
            else std::cout << label.str() << ": " << comp.str() << "\n";
        }
    } else {
        PauliNF nf = normalize_pauli(lower_to_sum(parse_expr(opt.exprs.at(0))), lambda);
        for (const auto& [label, comp] : grade_components_z2sq(nf)) {
            if (opt.format == "json")
                comps.push_back({{"label", label.str()}, {"value", comp.str()}});
            else std::cout << label.str() << ": " << comp.str() << "\n";
        }
    }
    if (opt.format == "json")
        emit({{"schema", 1}, {"lambda", scalar_to_json(lambda)}, {"components", comps}});
    return 0;
}

int cmd_rpoly(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    RPolyResult rp = compute_r(lambda);
    if (opt.format == "json") {
        emit(rpoly_to_json(rp, lambda));
    } else {
        std::cout << "n=" << rp.n << ", r=" << rp.r.str() << ", rstar=" << rp.rstar.str() << "\n";
    }
    return 0;
}

int cmd_classify(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    std::vector<ModuleElement> gens;
    for (const std::string& s : opt.exprs) gens.push_back(parse_module_element(lambda, s));
    ClassifyOutcome outcome = classify_generated(lambda, gens);
    if (opt.format == "json") {
        emit(classify_to_json(lambda, gens, outcome));
    } else {
        std::cout << "verdict: " << submodule_name(outcome.verdict) << "\n";
        for (const auto& cert : outcome.certificates) {
            std::cout << "generator: " << cert.initial.str() << "\n";
            for (const auto& step : cert.steps)
                std::cout << "  " << step.description << "  ->  " << step.after.str() << "\n";
            std::cout << "  terminal: " << cert.terminal.str() << "\n";
        }
    }
    return 0;
}

int cmd_member(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    SubmoduleId which;
    if (opt.which == "N") which = SubmoduleId::N;
    else if (opt.which == "P") which = SubmoduleId::P;
    else if (opt.which == "Q") which = SubmoduleId::Q;
    else throw DomainError("--which must be one of N, P, Q");
    ModuleElement m = parse_module_element(lambda, opt.elem_text);
    bool result = membership(lambda, m, which);
    if (opt.format == "json")
        emit({{"schema", 1},
              {"lambda", scalar_to_json(lambda)},
              {"which", opt.which},
              {"element", m.str()},
              {"member", result}});
    else std::cout << (result ? "true" : "false") << "\n";
    return 0;
}

int cmd_qdim(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    int d = quotient_dim(lambda);
    if (opt.format == "json")
        emit({{"schema", 1},
              {"lambda", scalar_to_json(lambda)},
              {"n", rank2_n(lambda)},
              {"dim", d}});
    else std::cout << d << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    GaussianRational lambda = parse_scalar(opt.lambda_text);
    SuiteReport report = run_suite(opt.suite, lambda, opt.degree);
    if (opt.format == "json") {
        emit(suite_to_json(report));
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
        std::cout << "suite " << report.suite << " at lambda=" << report.lambda.str() << ": "
                  << (report.passed() ? "pass" : "fail") << "\n";
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in U(I_lambda) and its rank-2 torsion-free module M_lambda^C"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_basis = false) {
        sub->add_option("--lambda", opt.lambda_text, "parameter lambda, a Gaussian rational")
            ->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_basis)
            sub->add_option("--basis", opt.basis, "normal-form basis")
                ->check(CLI::IsMember({"cartan", "pauli"}));
    };

    CLI::App* normalize = app.add_subcommand("normalize", "normal form of an expression");
    add_common(normalize, true);
    normalize->add_option("expr", opt.exprs, "expression in x, y, h, A, B, C")->required();

    CLI::App* act = app.add_subcommand("act", "apply an algebra element to a module element");
    add_common(act);
    act->add_option("--op", opt.op_text, "operator expression")->required();
    act->add_option("--elem", opt.elem_text, "module element \"f ; g\"")->required();

    CLI::App* grade = app.add_subcommand("grade", "grading components");
    add_common(grade, true);
    grade->add_option("expr", opt.exprs, "expression to split");
    grade->add_option("--elem", opt.elem_text, "module element to split by Z2^2 degree");

    CLI::App* rpoly = app.add_subcommand("r-poly", "the polynomials r and rstar (lambda in 2Z)");
    add_common(rpoly);

    CLI::App* classify = app.add_subcommand("classify", "classify the generated submodule");
    add_common(classify);
    classify->add_option("generators", opt.exprs, "module elements \"f ; g\"")->required();

    CLI::App* member = app.add_subcommand("member", "membership in N, P or Q (lambda in 2Z)");
    add_common(member);
    member->add_option("--which", opt.which, "target submodule: N, P or Q")->required();
    member->add_option("--elem", opt.elem_text, "module element \"f ; g\"")->required();

    CLI::App* qdim = app.add_subcommand("qdim", "dimension of M/N (lambda in 2Z)");
    add_common(qdim);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    add_common(verify);
    verify->add_option("--suite", opt.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--deg", opt.degree, "degree bound for sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (normalize->parsed()) return cmd_normalize(opt);
        if (act->parsed()) return cmd_act(opt);
        if (grade->parsed()) {
            if (opt.elem_text.empty() && opt.exprs.empty())
                throw DomainError("grade needs an expression or --elem");
            return cmd_grade(opt);
        }
        if (rpoly->parsed()) return cmd_rpoly(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (member->parsed()) return cmd_member(opt);
        if (qdim->parsed()) return cmd_qdim(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
