#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = eqc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json body(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
    CHECK(call({"alexander", "--torus", "2,3", "--hand", "right"}).out == "{\"alexander\":[[-1,1],[0,-1],[1,1]]}\n");
    CHECK(call({"casson", "brieskorn", "2", "3", "5"}).out == "{\"lambda\":\"-1\"}\n");
    CHECK(call({"signature", "--torus", "5,6", "--hand", "left", "--alpha", "1/2"}).out == "{\"sign\":16}\n");
}

TEST_CASE("knot inputs") {
    const auto a = call({"alexander", "--braid", "3 | 1 2 1 2"});
    CHECK(a.code == 0);
    CHECK(body(a)["alexander"].dump() == "[[-1,1],[0,-1],[1,1]]");
    const std::string path = "cli_test_matrix.json";
    {
        std::ofstream f(path);
        f << "{\"matrix\": [[-1, 1], [0, -1]]}";
    }
    CHECK(body(call({"arf", "--seifert", path}))["arf"] == 1);
    std::remove(path.c_str());
    CHECK(call({"arf", "--torus", "2,3", "--braid", "2 | 1 1 1"}).code == 2);
    CHECK(call({"arf"}).code == 2);
    CHECK(call({"arf", "--torus", "2"}).code == 2);
}

TEST_CASE("usage and domain errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"casson", "brieskorn", "2", "3"}).code == 2);
    CHECK(call({"signature", "--torus", "2,3"}).code == 2);
    CHECK(call({"verify", "nothing"}).code == 2);

    const auto e = call({"casson", "brieskorn", "2", "4", "5"});
    CHECK(e.code == 1);
    CHECK(body(e)["error"] == "NotCoprime");
    CHECK(e.err.find("NotCoprime") != std::string::npos);

    const auto s = call({"signature", "--torus", "2,3", "--alpha", "1/6"});
    CHECK(s.code == 1);
    CHECK(body(s)["error"] == "SignatureAtRoot");
    CHECK(body(call({"boyernicas", "--torus", "2,3", "--n", "3", "--w", "1"}))["error"] == "WOddN");
    CHECK(body(call({"mubar", "--torus", "2,3"}))["error"] == "DoubleCoverNotZHS");
    CHECK(body(call({"signature", "--seifert", "/nonexistent.json", "--alpha", "1/2"}))["error"] == "InvalidInput");
}

TEST_CASE("invariant subcommands") {
    CHECK(body(call({"signature", "--torus", "2,3", "--alpha", "1/6", "--averaged"}))["averaged_sign"] == "-1");
    CHECK(body(call({"signature", "--torus", "2,3", "--sum", "5"}))["signature_sum"] == -8);
    CHECK(body(call({"foxcover", "--torus", "2,3", "--n", "5"}))["cover_h1_order"] == 1);
    CHECK(body(call({"galois", "--torus", "2,5", "--n", "3"}))["pass"] == true);
    CHECK(body(call({"casson", "surgery", "--torus", "2,3", "--q", "-1"}))["lambda"] == "-1");
    CHECK(body(call({"eqcasson", "branched", "--torus", "2,3", "--n", "5"}))["lambda_tau"] == "-1");
    const auto f = body(call({"eqcasson", "free", "--torus", "3,5", "--n", "2", "--q", "1"}));
    CHECK(f["lambda_w"].size() == 2);
    CHECK(f["mu_bar"] == "-1");
    const auto bar = body(call({"lambdabar", "--torus", "2,3", "--n", "4", "--q", "1"}));
    CHECK(bar["relation_holds"] == true);
    const auto lf = body(call({"lefschetz", "--lambda-tau", "-1", "--ranks", "1,0,1,0", "--grading", "3"}));
    CHECK(lf["lefschetz"] == "-2");
    CHECK(lf["check"] == true);
    CHECK(lf["grading_sign"] == -1);
    CHECK(call({"lefschetz", "--lambda-tau", "1", "--ranks", "1,0"}).code == 2);
}

TEST_CASE("surgery spec documents") {
    const std::string path = "cli_test_spec.json";
    {
        std::ofstream f(path);
        f << R"({"lambdaY": 0, "knot": {"torus": [2, 3], "hand": "right"}, "n": 5, "q": 1})";
    }
    const auto a = body(call({"boyernicas", "--spec", path}));
    const auto b = body(call({"boyernicas", "--torus", "2,3", "--n", "5", "--q", "1"}));
    CHECK(a == b);
    CHECK(call({"boyernicas", "--spec", path, "--torus", "2,3"}).code == 2);
    {
        std::ofstream f(path);
        f << R"({"lambdaY": 0, "knot": {"braid": "3 | 1 2 1 2"}, "n": 4, "q": 2})";
    }
    CHECK(body(call({"boyernicas", "--spec", path}))["error"] == "NotCoprime");
    std::remove(path.c_str());
}

TEST_CASE("pillowcase subcommands") {
    const auto c = body(call({"pillowcase", "curve", "--torus", "2,3"}));
    CHECK(c["curve"]["arcs"].size() == 2);
    CHECK(body(call({"pillowcase", "count", "--torus", "2,3", "--psi-pi"}))["count"] == 4);
    CHECK(call({"pillowcase", "count", "--torus", "2,3", "--psi-pi", "--phi", "1/2"}).code == 2);
    CHECK(body(call({"pillowcase", "count", "--torus", "2,3", "--line", "6,5,1"}))["error"] == "EndpointHit");
    const auto k = call({"pillowcase", "check", "--torus", "3,4", "--n", "5", "--q", "2"});
    CHECK(k.code == 0);
    CHECK(body(k)["agree"] == true);
}

TEST_CASE("verify reports are reproducible") {
    const auto a = call({"verify", "galois", "--cases", "40", "--seed", "3"});
    const auto b = call({"verify", "galois", "--cases", "40", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(body(a)["report"] == body(b)["report"]);
    CHECK(body(a)["report"]["failures"].empty());
    CHECK(body(a)["timing"].contains("galois"));
    const auto c = call({"verify", "rohlin", "--cases", "40", "--seed", "4"});
    CHECK(body(c)["report"]["seed"] == 4);
}

}  // TEST_SUITE
