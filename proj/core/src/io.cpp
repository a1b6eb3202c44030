#include "algc/io.hpp"

#include <fstream>
#include <sstream>

namespace algc {

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw ParseError(what + " must contain strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

PolyMatrix matrix_of(const Json& j, const std::vector<std::string>& chart,
                     const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of rows");
    PolyMatrix out;
    for (const auto& row : j) {
        std::vector<Polynomial> r;
        for (const auto& e : row) {
            if (!e.is_string()) throw ParseError(what + " entries must be polynomial strings");
            r.push_back(Polynomial::parse(e.get<std::string>(), chart));
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

RepPtr AlgebroidDescription::representation(const std::string& name) const {
    for (const auto& [n, rep] : representations)
        if (n == name) return rep;
    throw Error("unknown representation '" + name + "'");
}

Metric AlgebroidDescription::metric(const std::string& name) const {
    for (const auto& m : metrics) {
        if (m.name != name) continue;
        return Metric(representation(m.representation), m.entries);
    }
    throw Error("unknown metric '" + name + "'");
}

AlgebroidDescription parse_algebroid_description(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("description must be a JSON object");
    auto chart = string_list(j.value("coordinates", Json::array()), "coordinates");
    auto frame = string_list(j.at("frame"), "frame");
    const int r = static_cast<int>(frame.size());

    std::vector<std::vector<Polynomial>> anchor;
    if (j.contains("anchor")) {
        for (const auto& row : j.at("anchor")) {
            std::vector<Polynomial> pr;
            for (const auto& e : row) pr.push_back(Polynomial::parse(e.get<std::string>(), chart));
            anchor.push_back(std::move(pr));
        }
    } else {
        anchor.assign(static_cast<size_t>(r),
                      std::vector<Polynomial>(chart.size(), Polynomial(chart)));
    }
    if (static_cast<int>(anchor.size()) != r) throw ParseError("anchor needs one row per frame element");

    std::map<std::pair<int, int>, std::vector<Polynomial>> brackets;
    auto frame_index = [&](const std::string& name) {
        for (int i = 0; i < r; ++i)
            if (frame[static_cast<size_t>(i)] == name) return i;
        throw ParseError("unknown frame element '" + name + "' in brackets");
    };
    const Json brackets_json = j.value("brackets", Json::object());
    for (const auto& [key, val] : brackets_json.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw ParseError("bracket keys look like \"e1,e2\"");
        int i = frame_index(key.substr(0, comma));
        int jdx = frame_index(key.substr(comma + 1));
        if (i >= jdx) throw ParseError("bracket keys must name i < j");
        std::vector<Polynomial> coeffs(static_cast<size_t>(r), Polynomial(chart));
        for (const auto& [fname, poly] : val.items())
            coeffs[static_cast<size_t>(frame_index(fname))] =
                Polynomial::parse(poly.get<std::string>(), chart);
        brackets[{i, jdx}] = std::move(coeffs);
    }

    AlgebroidDescription desc;
    desc.algebroid = make_algebroid(chart, frame, std::move(anchor), std::move(brackets));

    const Json reps_json = j.value("representations", Json::object());
    for (const auto& [name, rj] : reps_json.items()) {
        int rank = rj.at("rank").get<int>();
        std::string field = rj.value("field", "real");
        std::vector<PolyMatrix> re, im;
        for (const auto& m : rj.at("connection")) re.push_back(matrix_of(m, chart, "connection"));
        if (field == "complex") {
            for (const auto& m : rj.at("connection_im"))
                im.push_back(matrix_of(m, chart, "connection_im"));
        } else if (field != "real") {
            throw ParseError("field must be \"real\" or \"complex\"");
        }
        desc.representations.push_back(
            {name, make_representation(desc.algebroid, rank, std::move(re), std::move(im))});
    }
    const Json metrics_json = j.value("metrics", Json::object());
    for (const auto& [name, mj] : metrics_json.items()) {
        AlgebroidDescription::MetricEntry entry;
        entry.name = name;
        entry.representation = mj.at("representation").get<std::string>();
        entry.entries = matrix_of(mj.at("entries"), chart, "metric entries");
        desc.metrics.push_back(std::move(entry));
    }
    return desc;
}

AlgebroidDescription load_algebroid_description(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebroid_description(ss.str());
}

std::string print_algebroid_description(const AlgebroidDescription& desc) {
    const auto& a = desc.algebroid;
    Json j;
    j["coordinates"] = a->chart();
    j["frame"] = a->frame();
    Json anchor = Json::array();
    for (int i = 0; i < a->rank(); ++i) {
        Json row = Json::array();
        for (const auto& p : a->anchor_row(i)) row.push_back(p.str());
        anchor.push_back(row);
    }
    j["anchor"] = anchor;
    Json brackets = Json::object();
    for (const auto& [ij, coeffs] : a->bracket_table()) {
        Json entry = Json::object();
        for (int k = 0; k < a->rank(); ++k)
            if (!coeffs[static_cast<size_t>(k)].is_zero())
                entry[a->frame()[static_cast<size_t>(k)]] = coeffs[static_cast<size_t>(k)].str();
        brackets[a->frame()[static_cast<size_t>(ij.first)] + "," +
                 a->frame()[static_cast<size_t>(ij.second)]] = entry;
    }
    j["brackets"] = brackets;
    if (!desc.representations.empty()) {
        Json reps = Json::object();
        for (const auto& [name, rep] : desc.representations) {
            Json rj;
            rj["rank"] = rep->rank();
            rj["field"] = rep->is_complex() ? "complex" : "real";
            Json conn = Json::array();
            for (int i = 0; i < a->rank(); ++i) {
                Json m = Json::array();
                for (const auto& row : rep->connection(i)) {
                    Json jr = Json::array();
                    for (const auto& p : row) jr.push_back(p.str());
                    m.push_back(jr);
                }
                conn.push_back(m);
            }
            rj["connection"] = conn;
            if (rep->is_complex()) {
                Json conn_im = Json::array();
                for (int i = 0; i < a->rank(); ++i) {
                    Json m = Json::array();
                    for (const auto& row : rep->connection_im(i)) {
                        Json jr = Json::array();
                        for (const auto& p : row) jr.push_back(p.str());
                        m.push_back(jr);
                    }
                    conn_im.push_back(m);
                }
                rj["connection_im"] = conn_im;
            }
            reps[name] = rj;
        }
        j["representations"] = reps;
    }
    if (!desc.metrics.empty()) {
        Json ms = Json::object();
        for (const auto& m : desc.metrics) {
            Json mj;
            mj["representation"] = m.representation;
            Json entries = Json::array();
            for (const auto& row : m.entries) {
                Json jr = Json::array();
                for (const auto& p : row) jr.push_back(p.str());
                entries.push_back(jr);
            }
            mj["entries"] = entries;
            ms[m.name] = mj;
        }
        j["metrics"] = ms;
    }
    return j.dump(2);
}

PoissonBivector parse_bivector_description(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    auto chart = string_list(j.at("coordinates"), "coordinates");
    std::map<std::pair<int, int>, Polynomial> entries;
    const Json bivector_json = j.value("bivector", Json::object());
    for (const auto& [key, val] : bivector_json.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw ParseError("bivector keys look like \"1,2\"");
        int i = std::stoi(key.substr(0, comma)) - 1;
        int jdx = std::stoi(key.substr(comma + 1)) - 1;
        entries[{i, jdx}] = Polynomial::parse(val.get<std::string>(), chart);
    }
    return PoissonBivector(chart, std::move(entries));
}

PoissonBivector load_bivector_description(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bivector_description(ss.str());
}

std::string print_bivector_description(const PoissonBivector& pi) {
    Json j;
    j["coordinates"] = pi.chart();
    Json b = Json::object();
    for (const auto& [ij, p] : pi.upper_entries())
        if (!p.is_zero())
            b[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = p.str();
    j["bivector"] = b;
    return j.dump(2);
}

std::string input_digest(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return "fnv1a64:" + os.str();
}

Json to_json(const ValidationReport& report) {
    Json j;
    j["valid"] = report.valid();
    Json issues = Json::array();
    for (const auto& issue : report.issues) {
        Json ij;
        ij["check"] = issue.check;
        ij["indices"] = issue.indices;
        ij["value"] = issue.detail;
        issues.push_back(ij);
    }
    j["issues"] = issues;
    return j;
}

Json to_json(const BettiReport& report) {
    Json j;
    j["cap"] = report.cap;
    j["flags"] = report.flags;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json rj;
        rj["degree"] = row.degree;
        rj["dim"] = row.dim;
        rj["kernel"] = row.kernel;
        rj["image"] = row.image_prev;
        rj["betti"] = row.betti;
        rows.push_back(rj);
    }
    j["table"] = rows;
    return j;
}

Json to_json(const CharClassResult& result) {
    Json j;
    j["degree"] = result.degree;
    j["cocycle"] = cochain_literal(result.cocycle);
    j["closed"] = result.closed;
    if (result.parity_forced_zero) j["parity_forced_zero"] = true;
    if (result.exact.has_value()) {
        j["cap"] = result.exactness_cap;
        j["verdict"] = *result.exact ? "Exact" : "NotExact";
        if (result.primitive) j["primitive"] = cochain_literal(*result.primitive);
    }
    return j;
}

Json to_json(const HarnessReport& report) {
    Json j;
    j["pass"] = report.pass;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["chain_sign"] = report.chain_sign;
    if (!report.counterexample.empty()) j["counterexample"] = report.counterexample;
    return j;
}

Json to_json(const ModularCrossCheck& check) {
    Json j;
    j["u1_cocycle"] = cochain_literal(check.u1_cocycle);
    j["modular_cochain"] = cochain_literal(check.modular_cochain);
    j["cap"] = check.cap;
    if (check.both_zero) {
        j["relation"] = "both zero";
    } else if (check.related) {
        j["relation"] = "affine";
        j["lambda"] = to_string(check.lambda);
        if (check.primitive) j["primitive"] = cochain_literal(*check.primitive);
    } else {
        j["relation"] = "no affine relation at cap";
    }
    return j;
}

Json run_report(const std::string& command, const std::string& digest, Json results) {
    Json j;
    j["engine"] = std::string("algc ") + kEngineVersion;
    j["command"] = command;
    j["input_digest"] = digest;
    j["results"] = std::move(results);
    return j;
}

} // namespace algc
