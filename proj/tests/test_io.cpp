#include <doctest.h>

#include "algc/io.hpp"

#include "fixtures.hpp"

#include <cstdio>
#include <sys/wait.h>

using namespace algc;

namespace {

std::string data(const std::string& name) { return std::string(ALGC_DATA_DIR "/") + name; }

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ALGC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

} // namespace

TEST_CASE("algebroid description round-trip") {
    for (const auto& name : {"so3.json", "aff1.json", "tr2.json", "gl2.json"}) {
        auto desc = load_algebroid_description(data(name));
        auto text = print_algebroid_description(desc);
        auto desc2 = parse_algebroid_description(text);
        CHECK(desc2.algebroid->chart() == desc.algebroid->chart());
        CHECK(desc2.algebroid->frame() == desc.algebroid->frame());
        for (int i = 0; i < desc.algebroid->rank(); ++i)
            for (int j = i + 1; j < desc.algebroid->rank(); ++j) {
                auto b1 = desc.algebroid->frame_bracket(i, j);
                auto b2 = desc2.algebroid->frame_bracket(i, j);
                for (size_t k = 0; k < b1.size(); ++k) CHECK(b1[k] == b2[k]);
            }
        REQUIRE(desc.representations.size() == desc2.representations.size());
        for (size_t r = 0; r < desc.representations.size(); ++r) {
            CHECK(desc.representations[r].first == desc2.representations[r].first);
            for (int i = 0; i < desc.algebroid->rank(); ++i)
                CHECK(is_zero(desc.representations[r].second->connection(i) -
                              desc2.representations[r].second->connection(i)));
        }
        CHECK(print_algebroid_description(desc2) == text);
    }
}

TEST_CASE("bivector description round-trip") {
    for (const auto& name : {"poisson_symplectic_r2.json", "poisson_aff1.json", "poisson_so3.json"}) {
        auto pi = load_bivector_description(data(name));
        auto text = print_bivector_description(pi);
        auto pi2 = parse_bivector_description(text);
        CHECK(pi2.chart() == pi.chart());
        for (int i = 0; i < pi.dim(); ++i)
            for (int j = 0; j < pi.dim(); ++j) CHECK(pi.entry(i, j) == pi2.entry(i, j));
    }
}

TEST_CASE("complex representations round-trip") {
    AlgebroidDescription desc;
    desc.algebroid = make_algebroid({}, {"e1"}, std::vector<std::vector<Polynomial>>(1), {});
    auto c = [&](const Rational& q) { return Polynomial::constant({}, q); };
    desc.representations.push_back(
        {"line", make_representation(desc.algebroid, 1, {{{c(2)}}}, {{{c(3)}}})});
    auto text = print_algebroid_description(desc);
    auto desc2 = parse_algebroid_description(text);
    REQUIRE(desc2.representations.size() == 1);
    CHECK(desc2.representations[0].second->is_complex());
    CHECK(desc2.representations[0].second->connection_im(0)[0][0] == c(3));
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_algebroid_description("not json"), ParseError);
    CHECK_THROWS_AS(parse_algebroid_description("{\"frame\": [\"e\"], \"anchor\": []}"), ParseError);
    CHECK_THROWS_AS(load_algebroid_description(data("malformed.json")), ParseError);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("validate " + data("so3.json")).exit_code == 0);
    CHECK(run_cli("validate " + data("broken_anchor.json")).exit_code == 1);
    CHECK(run_cli("validate " + data("malformed.json")).exit_code == 2);
    CHECK(run_cli("cohomology " + data("overflow.json") + " --max-degree 1 --max-weight 2")
              .exit_code == 3);
    CHECK(run_cli("poisson " + data("poisson_broken.json") + " validate").exit_code == 1);
}

TEST_CASE("cli reports are byte-identical across runs") {
    for (const auto& args : {
             "cohomology " + data("so3.json") + " --max-degree 3 --max-weight 0 --json",
             "modular " + data("aff1.json") + " --json",
             "poisson " + data("poisson_aff1.json") + " crosscheck --json",
             std::string("vanest --family pair --dim 2 --check chainmap --degree 2 --trials 5 "
                         "--seed 11 --max-poly-degree 2 --json"),
         }) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}

TEST_CASE("cli golden values") {
    SUBCASE("so(3) betti table") {
        auto res = run_cli("cohomology " + data("so3.json") + " --max-degree 3 --max-weight 0 --json");
        REQUIRE(res.exit_code == 0);
        auto j = Json::parse(res.output);
        std::vector<int> betti;
        for (const auto& row : j["results"]["table"]) betti.push_back(row["betti"].get<int>());
        CHECK(betti == std::vector<int>{1, 0, 0, 1});
    }
    SUBCASE("aff(1) modular class") {
        auto res = run_cli("modular " + data("aff1.json") + " --json");
        REQUIRE(res.exit_code == 0);
        auto j = Json::parse(res.output);
        CHECK(j["results"]["cocycle"].get<std::string>() == "{\"e1\": \"1\"}");
        CHECK(j["results"]["verdict"].get<std::string>() == "NotExact");
    }
    SUBCASE("aff(1)-linear modular vector field") {
        auto res = run_cli("poisson " + data("poisson_aff1.json") + " modular --json");
        REQUIRE(res.exit_code == 0);
        auto j = Json::parse(res.output);
        CHECK(j["results"]["components"][0].get<std::string>() == "1");
        CHECK(j["results"]["components"][1].get<std::string>() == "0");
    }
    SUBCASE("vanest chainmap passes with sign +1") {
        auto res = run_cli("vanest --family pair --dim 2 --check chainmap --degree 2 --trials 10 "
                           "--seed 3 --max-poly-degree 2 --json");
        REQUIRE(res.exit_code == 0);
        auto j = Json::parse(res.output);
        CHECK(j["results"]["pass"].get<bool>());
        CHECK(j["results"]["chain_sign"].get<int>() == 1);
    }
    SUBCASE("gl2 u3 trace form is NotExact, corrected u3 is parity-zero") {
        auto raw = run_cli("charclass " + data("gl2.json") +
                           " --rep standard --k 2 --raw --cap 0 --json");
        REQUIRE(raw.exit_code == 0);
        auto jr = Json::parse(raw.output);
        CHECK(jr["results"]["verdict"].get<std::string>() == "NotExact");
        auto corr = run_cli("charclass " + data("gl2.json") +
                            " --rep standard --k 2 --metric id --cap 0 --json");
        REQUIRE(corr.exit_code == 0);
        auto jc = Json::parse(corr.output);
        CHECK(jc["results"]["parity_forced_zero"].get<bool>());
        CHECK(jc["results"]["verdict"].get<std::string>() == "Exact");
    }
    SUBCASE("vanest surjectivity witnesses") {
        auto res = run_cli("vanest --family pair --dim 2 --check surjectivity --json");
        REQUIRE(res.exit_code == 0);
        auto j = Json::parse(res.output);
        for (const auto& w : j["results"]) CHECK(w["ok"].get<bool>());
    }
}

TEST_CASE("randomized seeds are mandatory for the harness") {
    auto res = run_cli("vanest --family pair --dim 1 --check chainmap --trials 3 --degree 1");
    CHECK(res.exit_code == 2);
}

TEST_CASE("README examples are golden") {
    // Keep in lockstep with the CLI section of README.md.
    auto so3 = run_cli("cohomology " + data("so3.json") + " --max-degree 3 --max-weight 0");
    CHECK(so3.output == "  p   dim  ker   im   betti\n"
                        "  0   1    1    0    1\n"
                        "  1   3    0    0    0\n"
                        "  2   3    3    3    0\n"
                        "  3   1    1    0    1\n"
                        "  cap 0, flags: graded\n");
    auto mod = run_cli("modular " + data("aff1.json"));
    CHECK(mod.output == "modular cocycle: {\"e1\": \"1\"}\nNotExact at cap 2\n");
    auto pmod = run_cli("poisson " + data("poisson_aff1.json") + " modular");
    CHECK(pmod.output == "modular vector field: (d/dx) 1 (d/dy) 0\n");
    auto cross = run_cli("poisson " + data("poisson_aff1.json") + " crosscheck");
    CHECK(cross.output == "u1(Q): {\"dx\": \"2\"}\n"
                          "modular cochain: {\"dx\": \"1\"}\n"
                          "u1 = 2 * modular + d(primitive)\n");
    auto ve = run_cli("vanest --family pair --dim 2 --check chainmap --degree 3 --trials 25 "
                      "--seed 2024 --max-poly-degree 3");
    CHECK(ve.output == "trials: 25, pass: yes, chain sign: 1\n");
    auto raw = run_cli("charclass " + data("gl2.json") + " --rep standard --k 2 --raw --cap 0");
    CHECK(raw.output == "degree 3 cocycle: {\"e1^e2^e3\": \"3\", \"e2^e3^e4\": \"-3\"}\n"
                        "closed: yes; NotExact at cap 0\n");
}
