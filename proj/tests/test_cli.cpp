#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nervecomp/json_io.hpp>

#include "fixtures.hpp"

namespace {

struct run_result {
    int code = -1;
    std::string out;
};

// Runs the installed binary with stdout+stderr captured; the argument string
// is /bin/sh syntax.
run_result run_cli(const std::string& args) {
    static int counter = 0;
    std::string capture = std::string("/tmp/nervecomp_cli_out_") + std::to_string(counter++);
    std::string cmd = std::string(CLI_PATH) + " " + args + " > " + capture + " 2>&1";
    int status = std::system(cmd.c_str());
    run_result r;
    r.code = WEXITSTATUS(status);
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(capture.c_str());
    return r;
}

std::string fx(const std::string& name) { return fixtures::path(name + ".json"); }

}  // namespace

TEST_CASE("betti reports ranks and invariant factors") {
    auto r = run_cli("betti " + fx("rp2") + " --ring Zp:2");
    REQUIRE(r.code == 0);
    auto j = nervecomp::njson::parse(r.out);
    REQUIRE(j["pipeline"] == "betti");
    REQUIRE(j["ring"] == "Zp:2");
    REQUIRE(j["degrees"].size() == 3);
    for (int p = 0; p <= 2; ++p) {
        REQUIRE(j["degrees"][p]["degree"] == p);
        REQUIRE(j["degrees"][p]["basis_size"] == 1);
    }

    auto rz = run_cli("betti " + fx("rp2") + " --ring Z");
    auto jz = nervecomp::njson::parse(rz.out);
    REQUIRE(jz["degrees"][1]["basis_size"] == 0);
    REQUIRE(jz["degrees"][2]["basis_size"] == 1);
    REQUIRE(jz["degrees"][2]["info"]["invariant_factors"] == "2");
    REQUIRE(jz["degrees"][2]["info"]["free_rank"] == "0");

    auto rt = run_cli("betti " + fx("torus7") + " --ring Z");
    auto jt = nervecomp::njson::parse(rt.out);
    REQUIRE(jt["degrees"][0]["basis_size"] == 1);
    REQUIRE(jt["degrees"][1]["basis_size"] == 2);
    REQUIRE(jt["degrees"][2]["basis_size"] == 1);

    auto rd = run_cli("betti " + fx("torus7") + " --ring Q --degree 1");
    auto jd = nervecomp::njson::parse(rd.out);
    REQUIRE(jd["degrees"].size() == 1);
    REQUIRE(jd["degrees"][0]["degree"] == 1);
    REQUIRE(jd["degrees"][0]["basis_size"] == 2);
}

TEST_CASE("nerve emits the intersection complex with set labels") {
    auto r = run_cli("nerve " + fx("hexagon") + " " + fx("cover_hexagon_two"));
    REQUIRE(r.code == 0);
    auto j = nervecomp::njson::parse(r.out);
    REQUIRE(j["set_ids"] == nervecomp::njson::array({"a", "b"}));
    REQUIRE(j["complex"]["vertices"].size() == 2);
    REQUIRE(j["complex"]["facets"].size() == 1);

    auto r3 = run_cli("nerve " + fx("hexagon") + " " + fx("cover_hexagon_arcs"));
    auto j3 = nervecomp::njson::parse(r3.out);
    REQUIRE(j3["complex"]["vertices"].size() == 3);
    REQUIRE(j3["complex"]["facets"].size() == 3);
}

TEST_CASE("subdivide emits exact barycenter coordinates") {
    auto r = run_cli("subdivide " + fx("triangle") + " --level 1");
    REQUIRE(r.code == 0);
    auto j = nervecomp::njson::parse(r.out);
    REQUIRE(j["level"] == 1);
    REQUIRE(j["vertices"].size() == 6);
    REQUIRE(j["facets"].size() == 6);
    REQUIRE(j["coords"]["3"] == nervecomp::njson::array({"1/2", "1/2", "0"}));
    REQUIRE(j["base_vertices"] == nervecomp::njson::array({0, 1, 2}));
}

TEST_CASE("verification subcommands succeed on the fixture corpus") {
    REQUIRE(run_cli("verify prop-star " + fx("triangle") + " --ring Z").code == 0);
    REQUIRE(run_cli("verify main " + fx("hexagon") + " " + fx("cover_hexagon_arcs") +
                    " --ring Zp:3")
                .code == 0);
    REQUIRE(run_cli("verify naturality " + fx("nat_refine_hexagon") + " --ring Q").code == 0);

    auto r = run_cli("verify main " + fx("hexagon") + " " + fx("cover_hexagon_two") + " --ring Z");
    REQUIRE(r.code == 0);
    auto j = nervecomp::njson::parse(r.out);
    REQUIRE(j["pass"] == true);
    bool noted = false;
    for (const auto& note : j["notes"])
        if (note.get<std::string>().find("not hit") != std::string::npos) noted = true;
    REQUIRE(noted);

    // the greatest-index tie break is accepted and still passes
    REQUIRE(run_cli("verify main " + fx("triangle") + " " + fx("cover_triangle_star") +
                    " --ring Q --tie-break greatest")
                .code == 0);
}

TEST_CASE("eta and fstar expose representatives as exact value pairs") {
    auto r = run_cli("eta " + fx("hexagon") + " " + fx("cover_hexagon_arcs") + " --ring Q");
    REQUIRE(r.code == 0);
    auto j = nervecomp::njson::parse(r.out);
    REQUIRE(j["pass"] == true);
    const auto& deg1 = j["degrees"][1];
    REQUIRE(deg1["classes"].size() == 1);
    REQUIRE(!deg1["classes"][0]["input"].empty());
    REQUIRE(!deg1["classes"][0]["data"].empty());

    auto rf = run_cli("fstar " + fx("hexagon") + " " + fx("cover_hexagon_arcs") + " --ring Q");
    REQUIRE(rf.code == 0);
}

TEST_CASE("repeated runs produce identical bytes") {
    const std::string cmd = "verify main " + fx("rp2") + " " + fx("cover_rp2_star") + " --ring Z";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);

    // timings are additive only: stripping the flag restores canonical bytes
    auto t = run_cli(cmd + " --timings");
    REQUIRE(t.code == 0);
    REQUIRE(t.out != a.out);
    REQUIRE(t.out.find("timings_us") != std::string::npos);
}

TEST_CASE("malformed input files exit with code 2") {
    std::string bad = "/tmp/nervecomp_bad_fixture.json";
    {
        std::ofstream out(bad);
        out << "{ this is not json";
    }
    auto r = run_cli("betti " + bad);
    REQUIRE(r.code == 2);
    auto j = nervecomp::njson::parse(r.out);
    REQUIRE(j["error"]["kind"] == "malformed-input");
    std::remove(bad.c_str());

    auto missing = run_cli("betti /tmp/nervecomp_definitely_absent.json");
    REQUIRE(missing.code == 2);

    // structurally wrong complex: facets must be arrays of integers
    std::string shape = "/tmp/nervecomp_bad_shape.json";
    {
        std::ofstream out(shape);
        out << R"({"vertices": [0, 1], "facets": ["zero-one"]})";
    }
    REQUIRE(run_cli("betti " + shape).code == 2);
    std::remove(shape.c_str());
}

TEST_CASE("semantic violations exit with code 3") {
    auto r = run_cli("betti " + fx("rp2") + " --ring Zp:4");
    REQUIRE(r.code == 3);
    auto j = nervecomp::njson::parse(r.out);
    REQUIRE(j["error"]["kind"] == "precondition");

    // cover leaving a vertex uncovered
    std::string partial = "/tmp/nervecomp_partial_cover.json";
    {
        std::ofstream out(partial);
        out << R"({"sets": {"a": [0, 1, 2]}})";
    }
    REQUIRE(run_cli("nerve " + fx("hexagon") + " " + partial).code == 3);
    std::remove(partial.c_str());

    REQUIRE(run_cli("verify main " + fx("triangle") + " " + fx("cover_triangle_star") +
                    " --tie-break sideways")
                .code == 3);
}
