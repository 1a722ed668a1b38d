#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <repalg/cli.hpp>

using namespace repalg;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("repalg_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

/// Minimal reader for the DOT we emit: `digraph ID { stmt; ... }` with node
/// statements `ID [attrs]` and edge statements `ID -> ID [attrs]`.
struct Dot {
    std::map<std::string, std::string> node_labels;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
};

Dot parse_dot(const std::string& text) {
    std::regex header(R"(^\s*digraph\s+\w+\s*\{\s*$)"), footer(R"(^\s*\}\s*$)");
    std::regex attr_stmt(R"(^\s*(node|edge|graph)\s*\[[^\]]*\];\s*$)");
    std::regex node(R"re(^\s*(\w+)\s*\[label="((?:[^"\\]|\\.)*)"(?:,\s*\w+=\w+)*\];\s*$)re");
    std::regex edge(R"re(^\s*(\w+)\s*->\s*(\w+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$)re");
    std::istringstream in(text);
    std::string line;
    Dot d;
    REQUIRE(std::getline(in, line));
    REQUIRE(std::regex_match(line, header));
    bool closed = false;
    while (std::getline(in, line)) {
        std::smatch m;
        REQUIRE_FALSE(closed);
        if (std::regex_match(line, footer))
            closed = true;
        else if (std::regex_match(line, m, edge)) {
            REQUIRE(d.node_labels.count(m[1]));
            REQUIRE(d.node_labels.count(m[2]));
            d.edges.emplace_back(m[1], m[2], m[3]);
        } else if (std::regex_match(line, m, node))
            d.node_labels[m[1]] = m[2];
        else
            REQUIRE(std::regex_match(line, attr_stmt));
    }
    REQUIRE(closed);
    return d;
}

}  // namespace

TEST_CASE("classify prints a JSON report") {
    auto r = run({"classify", "--string", "a0", "--field", "Q", "--order", "6"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["verdict"] == "k[[t]]");
    CHECK(j["stable_end_dim"] == 1);
    CHECK(j["ext1_dim"] == 1);
    CHECK(j["lift_order_reached"] == 6);
    CHECK(j["obstruction"].is_null());
    CHECK(j["module"] == "a0");

    CHECK(Json::parse(run({"classify", "--string", "1@0", "--field", "F5"}).out)["verdict"] == "k");
}

TEST_CASE("ext, hom and stablehom") {
    auto r = run({"ext", "--string", "1@0", "--string", "1@0"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    CHECK(run({"ext", "--string", "a0"}).out == "1\n");
    CHECK(run({"stablehom", "--string", "a0", "--string", "a0"}).out == "1\n");
    auto h = Json::parse(run({"hom", "--string", "b0^-1 a0", "--string", "a0^-1 b0", "--json"}).out);
    CHECK(h["isomorphic"] == "yes");
    CHECK(h["hom_dim"] == hom_dim(string_module<Rational>(parse_string("b0^-1 a0"), Field::rationals()),
                                  string_module<Rational>(parse_string("a0^-1 b0"), Field::rationals())));
}

TEST_CASE("omega emits a module that is isomorphic to M[B0]") {
    auto path = temp_path("omega.json");
    auto r = run({"omega", "--string", "a0", "--emit", path});
    REQUIRE(r.code == 0);
    auto h = run({"hom", "--module", path, "--string", "B0"});
    CHECK(h.code == 0);
    CHECK(h.out.find("isomorphic yes") != std::string::npos);
    // Same check with the inputs swapped keeps command-line order.
    CHECK(run({"hom", "--string", "B0", "--module", path}).out.find("isomorphic yes") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("module files round-trip") {
    auto m = string_module<Rational>(parse_string("a0 b0^-1"), Field::rationals());
    auto j = module_to_json(m);
    CHECK(module_from_json<Rational>(j) == m);
    CHECK(module_from_json<Rational>(Json::parse(j.dump())) == m);

    auto path = temp_path("m.json");
    write(path, j.dump(2));
    auto shown = run({"show", "--module", path, "--json"});
    CHECK(Json::parse(shown.out) == j);
    std::remove(path.c_str());

    // Integers are accepted as scalars, omitted matrices are zero.
    Json k = {{"field", "F5"}, {"window", {0, 0}}, {"dims", {{"1@0", 1}, {"2@0", 1}}}, {"mats", {{"b0", {{7}}}}}};
    auto mk = module_from_json<Zp>(k);
    CHECK(mk.mat(Arrow::beta(0))(0, 0) == Zp(2, 5));
    CHECK(mk.mat(Arrow::alpha(0)).is_zero());
}

TEST_CASE("deterministic output") {
    std::vector<std::vector<std::string>> cmds{{"orbit", "--string", "a0", "--radius", "2"},
                                               {"orbit", "--string", "1@0", "--json"},
                                               {"lift", "--string", "b0^-1 a0", "--order", "4", "--json"},
                                               {"enumerate", "--window", "-1:1", "--max-len", "3"},
                                               {"tau", "--string", "a0 b0^-1"}};
    for (const auto& c : cmds) {
        auto a = run(c), b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("orbit DOT output") {
    auto r0 = parse_dot(run({"orbit", "--string", "a0", "--radius", "0"}).out);
    CHECK(r0.node_labels.size() == 1);
    CHECK(r0.edges.empty());

    auto r1 = parse_dot(run({"orbit", "--string", "a0", "--radius", "1"}).out);
    bool tau_loop = false;
    for (const auto& [from, to, label] : r1.edges) {
        CHECK((label == "Ω" || label == "Ω⁻¹" || label == "ν" || label == "τ"));
        tau_loop = tau_loop || (label == "τ" && from == to);
    }
    CHECK(tau_loop);

    auto j = Json::parse(run({"orbit", "--string", "a0", "--radius", "1", "--json"}).out);
    CHECK(j["nodes"].size() == r1.node_labels.size());
    CHECK(j["edges"].size() == r1.edges.size());
    CHECK(j["nodes"][0]["label"] == "a0");
}

TEST_CASE("other verbs") {
    CHECK(run({"enumerate", "--window", "0:0", "--max-len", "1"}).out == "1@0\n2@0\na0\nb0\n");
    auto l = Json::parse(run({"lift", "--string", "a0", "--order", "3", "--json"}).out);
    CHECK(l["tangent_dim"] == 1);
    CHECK(l["classes"][0]["obstruction"].is_null());
    CHECK(l["classes"][0]["lift"]["mats"]["b0"] == Json::parse(R"([[["0","1","0"]]])"));
    auto nu = Json::parse(run({"nu", "--string", "1@0", "--shift", "1"}).out);
    CHECK(nu["dims"] == Json::parse(R"({"1@1": 1})"));
    CHECK(Json::parse(run({"coomega", "--string", "B1"}).out)["mats"].contains("a1"));
    CHECK(run({"validate", "--string", "a0"}).code == 0);
    CHECK(run({"show", "--string", "a0", "--window", "-1:1", "--json"}).out.find("\"window\": [\n    -1,") !=
          std::string::npos);
}

TEST_CASE("errors and exit codes") {
    auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"ext"}).code == 2);
    CHECK(run({"hom", "--string", "a0"}).code == 2);
    CHECK(run({"ext", "--string", "a0", "--field", "F4"}).code == 2);
    CHECK(run({"enumerate"}).code == 2);
    CHECK(run({"classify", "--string", "a0", "--order", "0"}).code == 2);

    auto bad = run({"ext", "--string", "A0 a0", "--json"});
    CHECK(bad.code == 1);
    auto e = Json::parse(bad.out);
    CHECK(e["error"]["kind"] == "relation-violation");
    CHECK(e["error"]["detail"].is_string());

    CHECK(run({"tau", "--string", "a0 a0"}).code == 1);
    CHECK(run({"show", "--module", temp_path("does-not-exist.json")}).code == 1);

    auto broken = temp_path("broken.json");
    write(broken, "{\n  \"field\": \"Q\",\n  \"window\": [0 0]\n}\n");
    auto pe = run({"show", "--module", broken, "--json"});
    CHECK(pe.code == 1);
    auto pj = Json::parse(pe.out);
    CHECK(pj["error"]["kind"] == "bad-json");
    CHECK(pj["error"]["detail"].get<std::string>().find(":3:") != std::string::npos);

    auto f5 = temp_path("f5.json");
    write(f5, R"({"field": "F5", "window": [0, 0], "dims": {"1@0": 1}})");
    auto mm = run({"hom", "--module", f5, "--string", "a0", "--field", "Q", "--json"});
    CHECK(mm.code == 1);
    CHECK(Json::parse(mm.out)["error"]["kind"] == "field-mismatch");
    CHECK(run({"hom", "--module", f5, "--string", "1@0"}).out.find("isomorphic yes") != std::string::npos);
    std::remove(broken.c_str());
    std::remove(f5.c_str());

    auto proj = run({"tau", "--module", "/nonexistent"});
    CHECK(proj.code == 1);
}

TEST_CASE("sample module files") {
    std::string dir = REPALG_SAMPLES_DIR;
    CHECK(run({"validate", "--module", dir + "/arrow_a0.json"}).code == 0);
    CHECK(run({"validate", "--module", dir + "/violates_commutativity.json"}).code == 1);
    CHECK(run({"hom", "--module", dir + "/rad_P1_0.json", "--string", "B0^-1 A0"}).out.find("isomorphic yes") !=
          std::string::npos);
    CHECK(run({"stablehom", "--module", dir + "/projective_P1_0.json", "--module", dir + "/arrow_a0.json"}).out == "0\n");
    CHECK(run({"tau", "--module", dir + "/projective_P1_0.json"}).code == 1);
    auto c = Json::parse(run({"classify", "--module", dir + "/zigzag_f5.json"}).out);
    CHECK(c["ext1_dim"] == ext1_dim(string_module<Zp>(parse_string("a0 b0^-1"), Field::prime(5)),
                                    string_module<Zp>(parse_string("a0 b0^-1"), Field::prime(5))));
}
