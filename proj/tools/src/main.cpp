#include "algc/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace algc;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kParseError = 2;
constexpr int kCapExceeded = 3;
constexpr int kInternalError = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& report, bool json, const std::string& human) {
    if (json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

std::string betti_table(const BettiReport& report) {
    std::ostringstream os;
    os << "  p   dim  ker   im   betti\n";
    for (const auto& row : report.rows) {
        os << "  " << row.degree << "   " << row.dim << "    " << row.kernel << "    "
           << row.image_prev << "    " << row.betti << "\n";
    }
    os << "  cap " << report.cap << ", flags:";
    for (const auto& f : report.flags) os << " " << f;
    os << "\n";
    return os.str();
}

int cmd_validate(const std::string& path, bool json) {
    std::string text = slurp(path);
    auto desc = parse_algebroid_description(text);
    auto areport = validate_algebroid(desc.algebroid);
    Json results;
    results["algebroid"] = to_json(areport);
    bool ok = areport.valid();
    std::ostringstream human;
    human << "algebroid: " << (areport.valid() ? "valid" : "INVALID") << "\n";
    for (const auto& issue : areport.issues) {
        human << "  " << issue.check << " failure at indices";
        for (int i : issue.indices) human << " " << (i + 1);
        human << ": " << issue.detail << "\n";
    }
    Json reps = Json::object();
    for (const auto& [name, rep] : desc.representations) {
        if (!areport.valid()) break;
        auto rreport = validate_representation(rep);
        reps[name] = to_json(rreport);
        ok = ok && rreport.valid();
        human << "representation " << name << ": " << (rreport.valid() ? "valid" : "INVALID")
              << "\n";
        for (const auto& issue : rreport.issues) {
            human << "  curvature R_{" << issue.indices[0] + 1 << "," << issue.indices[1] + 1
                  << "} = " << issue.detail << "\n";
        }
    }
    results["representations"] = reps;
    emit(run_report("validate " + path, input_digest(text), results), json, human.str());
    return ok ? kOk : kValidationFailure;
}

int require_valid(const AlgebroidDescription& desc) {
    auto report = validate_algebroid(desc.algebroid);
    if (!report.valid()) {
        std::cerr << "input algebroid fails validation\n";
        return kValidationFailure;
    }
    for (const auto& [name, rep] : desc.representations) {
        if (!validate_representation(rep).valid()) {
            std::cerr << "representation '" << name << "' fails validation\n";
            return kValidationFailure;
        }
    }
    return kOk;
}

int cmd_cohomology(const std::string& path, int max_degree, int cap, const std::string& rep_name,
                   bool json) {
    std::string text = slurp(path);
    auto desc = parse_algebroid_description(text);
    if (int rc = require_valid(desc); rc != kOk) return rc;
    RepPtr rep = rep_name.empty() ? nullptr : desc.representation(rep_name);
    auto report = betti(desc.algebroid, rep, max_degree, cap);
    std::ostringstream cmd;
    cmd << "cohomology " << path << " --max-degree " << max_degree << " --max-weight " << cap;
    if (!rep_name.empty()) cmd << " --rep " << rep_name;
    emit(run_report(cmd.str(), input_digest(text), to_json(report)), json, betti_table(report));
    return kOk;
}

int cmd_charclass(const std::string& path, const std::string& rep_name, int k,
                  const std::string& metric_name, bool raw, int cap, bool json) {
    std::string text = slurp(path);
    auto desc = parse_algebroid_description(text);
    if (int rc = require_valid(desc); rc != kOk) return rc;
    auto rep = desc.representation(rep_name);
    CharClassResult result = [&] {
        if (raw) return odd_trace_class(rep, k);
        if (!metric_name.empty()) return u_odd(rep, desc.metric(metric_name), k);
        if (k == 1) return u1(desc.algebroid, rep);
        throw Error("k > 1 requires --metric (corrected class) or --raw (trace form)");
    }();
    with_exactness(result, cap);
    std::ostringstream cmd;
    cmd << "charclass " << path << " --rep " << rep_name << " --k " << k;
    if (!metric_name.empty()) cmd << " --metric " << metric_name;
    if (raw) cmd << " --raw";
    cmd << " --cap " << cap;
    std::ostringstream human;
    human << "degree " << result.degree << " cocycle: " << cochain_literal(result.cocycle) << "\n"
          << "closed: yes; " << (*result.exact ? "Exact" : "NotExact") << " at cap " << cap << "\n";
    if (result.parity_forced_zero) human << "identically zero by the real-parity argument\n";
    emit(run_report(cmd.str(), input_digest(text), to_json(result)), json, human.str());
    return kOk;
}

int cmd_modular(const std::string& path, int cap, bool json) {
    std::string text = slurp(path);
    auto desc = parse_algebroid_description(text);
    if (int rc = require_valid(desc); rc != kOk) return rc;
    auto result = modular_class(desc.algebroid);
    with_exactness(result, cap);
    std::ostringstream human;
    human << "modular cocycle: " << cochain_literal(result.cocycle) << "\n"
          << (*result.exact ? "Exact" : "NotExact") << " at cap " << cap << "\n";
    emit(run_report("modular " + path + " --cap " + std::to_string(cap), input_digest(text),
                    to_json(result)),
         json, human.str());
    return kOk;
}

int cmd_poisson(const std::string& path, const std::string& sub, int max_degree, int cap,
                bool json) {
    std::string text = slurp(path);
    auto pi = parse_bivector_description(text);
    std::string cmd = "poisson " + path + " " + sub;
    if (sub == "validate") {
        auto report = validate_poisson(pi);
        std::ostringstream human;
        human << "jacobiator: " << (report.valid() ? "zero (Poisson)" : "NONZERO") << "\n";
        for (const auto& issue : report.issues) {
            human << "  J^{" << issue.indices[0] + 1 << issue.indices[1] + 1 << issue.indices[2] + 1
                  << "} = " << issue.detail << "\n";
        }
        emit(run_report(cmd, input_digest(text), to_json(report)), json, human.str());
        return report.valid() ? kOk : kValidationFailure;
    }
    if (!validate_poisson(pi).valid()) {
        std::cerr << "bivector fails the Jacobi identity\n";
        return kValidationFailure;
    }
    if (sub == "cohomology") {
        auto report = poisson_cohomology(pi, max_degree, cap);
        emit(run_report(cmd + " --max-degree " + std::to_string(max_degree) + " --max-weight " +
                            std::to_string(cap),
                        input_digest(text), to_json(report)),
             json, betti_table(report));
        return kOk;
    }
    if (sub == "modular") {
        auto mod = modular_vector_field(pi);
        Json results;
        Json comps = Json::array();
        std::ostringstream human;
        human << "modular vector field:";
        for (int i = 0; i < pi.dim(); ++i) {
            comps.push_back(mod[static_cast<size_t>(i)].str());
            human << " (d/d" << pi.chart()[static_cast<size_t>(i)] << ") "
                  << mod[static_cast<size_t>(i)].str();
        }
        human << "\n";
        results["components"] = comps;
        emit(run_report(cmd, input_digest(text), results), json, human.str());
        return kOk;
    }
    if (sub == "crosscheck") {
        auto check = modular_cross_check(pi, cap);
        std::ostringstream human;
        human << "u1(Q): " << cochain_literal(check.u1_cocycle) << "\n"
              << "modular cochain: " << cochain_literal(check.modular_cochain) << "\n";
        if (check.both_zero)
            human << "both classes zero\n";
        else if (check.related)
            human << "u1 = " << to_string(check.lambda) << " * modular + d(primitive)\n";
        else
            human << "no affine relation at cap " << cap << "\n";
        emit(run_report(cmd + " --cap " + std::to_string(cap), input_digest(text), to_json(check)),
             json, human.str());
        return kOk;
    }
    throw ParseError("unknown poisson subcommand '" + sub + "'");
}

int cmd_vanest(const std::string& family, int dim, int group_dim, const std::string& action,
               const std::string& check, int degree, int trials, unsigned seed,
               int max_poly_degree, bool json) {
    GroupoidPtr g;
    if (family == "pair") {
        g = GroupoidChart::pair_groupoid(dim);
    } else if (family == "action") {
        std::vector<std::string> chart;
        for (int a = 1; a <= group_dim; ++a) chart.push_back("v" + std::to_string(a));
        for (int j = 1; j <= dim; ++j) chart.push_back("x" + std::to_string(j));
        std::vector<Polynomial> comps;
        std::stringstream ss(action);
        std::string piece;
        while (std::getline(ss, piece, ';')) comps.push_back(Polynomial::parse(piece, chart));
        g = GroupoidChart::abelian_action(group_dim, dim, std::move(comps));
    } else {
        throw ParseError("family must be 'pair' or 'action'");
    }
    std::ostringstream cmd;
    cmd << "vanest --family " << family << " --dim " << dim;
    if (family == "action") cmd << " --group-dim " << group_dim << " --action " << action;
    cmd << " --check " << check << " --degree " << degree << " --trials " << trials << " --seed "
        << seed << " --max-poly-degree " << max_poly_degree;
    if (check == "surjectivity") {
        auto ws = surjectivity_witnesses(g);
        Json results = Json::array();
        bool ok = true;
        std::ostringstream human;
        for (const auto& w : ws) {
            Json wj;
            wj["coordinate"] = w.coordinate + 1;
            wj["sign"] = w.sign;
            wj["ok"] = w.ok;
            results.push_back(wj);
            ok = ok && w.ok;
            human << "dx_" << w.coordinate + 1 << ": witness sign " << w.sign << " "
                  << (w.ok ? "ok" : "FAIL") << "\n";
        }
        emit(run_report(cmd.str(), "none", results), json, human.str());
        return ok ? kOk : kValidationFailure;
    }
    if (check != "chainmap" && check != "p2" && check != "p3")
        throw ParseError("check must be chainmap, p2, p3 or surjectivity");
    auto report = property_harness(g, trials, seed, degree, max_poly_degree);
    std::ostringstream human;
    human << "trials: " << report.trials << ", pass: " << (report.pass ? "yes" : "NO")
          << ", chain sign: " << report.chain_sign << "\n";
    if (!report.counterexample.empty()) human << "counterexample: " << report.counterexample << "\n";
    emit(run_report(cmd.str(), "none", to_json(report)), json, human.str());
    return report.pass ? kOk : kValidationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic calculus for Lie algebroids on affine charts"};
    app.require_subcommand(1);
    bool json = false;

    std::string file, rep_name, metric_name, poisson_sub;
    int max_degree = 2, cap = 4, k = 1, excap = 2;
    bool raw = false;

    auto* validate = app.add_subcommand("validate", "check the algebroid and representation axioms");
    validate->add_option("file", file)->required();

    auto* cohomology = app.add_subcommand("cohomology", "Betti table of the capped complex");
    cohomology->add_option("file", file)->required();
    cohomology->add_option("--max-degree", max_degree, "top cochain degree");
    cohomology->add_option("--max-weight", cap, "polynomial degree cap");
    cohomology->add_option("--rep", rep_name, "coefficient representation");

    auto* charcls = app.add_subcommand("charclass", "characteristic classes of a representation");
    charcls->add_option("file", file)->required();
    charcls->add_option("--rep", rep_name)->required();
    charcls->add_option("--k", k, "class index (degree 2k-1)");
    charcls->add_option("--metric", metric_name, "metric for the corrected classes");
    charcls->add_flag("--raw", raw, "uncorrected trace form Tr(omega^(2k-1))");
    charcls->add_option("--cap", excap, "cap for the exactness certificate");

    auto* modular = app.add_subcommand("modular", "modular class of the algebroid");
    modular->add_option("file", file)->required();
    modular->add_option("--cap", excap, "cap for the exactness certificate");

    auto* poisson = app.add_subcommand("poisson", "Poisson front end");
    poisson->add_option("file", file)->required();
    poisson->add_option("sub", poisson_sub, "validate | cohomology | modular | crosscheck")
        ->required();
    poisson->add_option("--max-degree", max_degree);
    poisson->add_option("--max-weight", cap);
    poisson->add_option("--cap", excap, "cap for the cross-check certificate");

    std::string family = "pair", action_map, check = "chainmap";
    int dim = 1, group_dim = 1, degree = 2, trials = 25, vcap = 3;
    unsigned seed = 0;
    bool seed_given = false;
    auto* vanest = app.add_subcommand("vanest", "Van Est property harness");
    vanest->add_option("--family", family, "pair | action");
    vanest->add_option("--dim", dim, "base dimension");
    vanest->add_option("--group-dim", group_dim, "acting group dimension");
    vanest->add_option("--action", action_map, "semicolon-separated action components");
    vanest->add_option("--check", check, "chainmap | p2 | p3 | surjectivity");
    vanest->add_option("--degree", degree, "maximal cochain degree");
    vanest->add_option("--trials", trials, "number of randomized instances");
    vanest->add_option("--seed", seed, "RNG seed (required for randomized checks)")
        ->each([&](const std::string&) { seed_given = true; });
    vanest->add_option("--max-poly-degree", vcap, "polynomial degree of random cochains");

    for (auto* sc : app.get_subcommands({}))
        sc->add_flag("--json", json, "emit a machine-readable JSON report");

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    int rc = kInternalError;
    try {
        if (validate->parsed()) rc = cmd_validate(file, json);
        if (cohomology->parsed()) rc = cmd_cohomology(file, max_degree, cap, rep_name, json);
        if (charcls->parsed()) rc = cmd_charclass(file, rep_name, k, metric_name, raw, excap, json);
        if (modular->parsed()) rc = cmd_modular(file, excap, json);
        if (poisson->parsed()) rc = cmd_poisson(file, poisson_sub, max_degree, cap, json);
        if (vanest->parsed()) {
            if (check != "surjectivity" && !seed_given) {
                std::cerr << "--seed is required for randomized checks\n";
                return kParseError;
            }
            rc = cmd_vanest(family, dim, group_dim, action_map, check, degree, trials, seed, vcap,
                            json);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const DegreeOverflow& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternalError;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "elapsed: " << elapsed << " ms\n";
    return rc;
}
