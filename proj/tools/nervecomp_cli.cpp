// Command-line front end: cohomology ranks, nerve extraction, the two
// comparison maps, and the verification pipelines, all over exact rings.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 malformed input
// file, 3 precondition violated.

#include <CLI11.hpp>
#include <iostream>

#include <nervecomp/json_io.hpp>
#include <nervecomp/nervecomp.hpp>

namespace {

using namespace nervecomp;

struct cli_options {
    std::string complex_path;
    std::string cover_path;
    std::string spec_path;
    std::string ring = "Q";
    std::string tie = "least";
    int degree = -1;
    int level = 1;
    bool timings = false;
};

tie_break parse_tie(const std::string& s) {
    if (s == "least") return tie_break::least_index;
    if (s == "greatest") return tie_break::greatest_index;
    throw precondition_error("tie-break: expected 'least' or 'greatest', got '" + s + "'");
}

int emit(const verification_report& rep, bool timings) {
    std::cout << report_to_json(rep, timings).dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

int emit_json(const njson& j) {
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nerve cohomology comparison toolkit"};
    app.require_subcommand(1);
    cli_options opt;

    auto add_ring = [&](CLI::App* cmd) { cmd->add_option("--ring", opt.ring, "coefficient ring: Q, Zp:<p>, or Z"); };
    auto add_timings = [&](CLI::App* cmd) { cmd->add_flag("--timings", opt.timings, "include stage timings in the report"); };
    auto add_tie = [&](CLI::App* cmd) { cmd->add_option("--tie-break", opt.tie, "approximation tie-break: least or greatest"); };

    CLI::App* betti = app.add_subcommand("betti", "cohomology ranks and invariant factors of a complex");
    betti->add_option("complex", opt.complex_path, "complex JSON file")->required();
    add_ring(betti);
    betti->add_option("--degree", opt.degree, "restrict to one degree");
    add_timings(betti);

    CLI::App* nerve_cmd = app.add_subcommand("nerve", "nerve of a cover as a complex");
    nerve_cmd->add_option("complex", opt.complex_path)->required();
    nerve_cmd->add_option("cover", opt.cover_path)->required();

    CLI::App* subdiv = app.add_subcommand("subdivide", "barycentric subdivision level with exact coordinates");
    subdiv->add_option("complex", opt.complex_path)->required();
    subdiv->add_option("--level", opt.level, "subdivision level (default 1)");

    CLI::App* eta_cmd = app.add_subcommand("eta", "zigzag representatives of the nerve basis classes");
    eta_cmd->add_option("complex", opt.complex_path)->required();
    eta_cmd->add_option("cover", opt.cover_path)->required();
    add_ring(eta_cmd);
    add_timings(eta_cmd);

    CLI::App* fstar_cmd = app.add_subcommand("fstar", "partition-of-unity representatives of the nerve basis classes");
    fstar_cmd->add_option("complex", opt.complex_path)->required();
    fstar_cmd->add_option("cover", opt.cover_path)->required();
    add_ring(fstar_cmd);
    add_tie(fstar_cmd);
    add_timings(fstar_cmd);

    CLI::App* verify = app.add_subcommand("verify", "verification pipelines");
    verify->require_subcommand(1);
    CLI::App* vps = verify->add_subcommand("prop-star", "star cover: zigzag equals the level comparison");
    vps->add_option("complex", opt.complex_path)->required();
    add_ring(vps);
    add_timings(vps);
    CLI::App* vmain = verify->add_subcommand("main", "zigzag matches the partition-of-unity map");
    vmain->add_option("complex", opt.complex_path)->required();
    vmain->add_option("cover", opt.cover_path)->required();
    add_ring(vmain);
    add_tie(vmain);
    add_timings(vmain);
    CLI::App* vnat = verify->add_subcommand("naturality", "the comparison square commutes for a map of covered complexes");
    vnat->add_option("spec", opt.spec_path, "naturality JSON file")->required();
    add_ring(vnat);
    add_timings(vnat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        ring_spec rs = ring_spec::parse(opt.ring);
        if (betti->parsed()) {
            simplicial_complex c = complex_from_json(load_json_file(opt.complex_path));
            std::optional<int> deg;
            if (opt.degree >= 0) deg = opt.degree;
            return dispatch_ring(rs, [&](auto ring) { return emit(run_betti(ring, c, deg), opt.timings); });
        }
        if (nerve_cmd->parsed()) {
            simplicial_complex c = complex_from_json(load_json_file(opt.complex_path));
            star_cover cover = cover_from_json(load_json_file(opt.cover_path), c);
            simplicial_complex n = nerve(cover, c);
            verification_report rep;
            rep.pipeline = "nerve";
            rep.ring = "n/a";
            rep.warnings = cover.warnings;
            for (int i = 0; i < cover.size(); ++i)
                rep.notes.push_back("vertex " + std::to_string(i) + " = set '" +
                                    cover.ids[static_cast<std::size_t>(i)] + "'");
            njson j = report_to_json(rep, false);
            j["complex"] = complex_to_json(n);
            njson ids = njson::array();
            for (const auto& id : cover.ids) ids.push_back(id);
            j["set_ids"] = std::move(ids);
            return emit_json(j);
        }
        if (subdiv->parsed()) {
            simplicial_complex c = complex_from_json(load_json_file(opt.complex_path));
            subdivision_tower tower(c);
            tower.extend_to(opt.level);
            return emit_json(level_to_json(tower.level(opt.level), c));
        }
        if (eta_cmd->parsed()) {
            simplicial_complex c = complex_from_json(load_json_file(opt.complex_path));
            star_cover cover = cover_from_json(load_json_file(opt.cover_path), c);
            return dispatch_ring(rs, [&](auto ring) { return emit(run_eta(ring, c, cover), opt.timings); });
        }
        if (fstar_cmd->parsed()) {
            simplicial_complex c = complex_from_json(load_json_file(opt.complex_path));
            star_cover cover = cover_from_json(load_json_file(opt.cover_path), c);
            tie_break tb = parse_tie(opt.tie);
            return dispatch_ring(rs, [&](auto ring) { return emit(run_fstar(ring, c, cover, tb), opt.timings); });
        }
        if (vps->parsed()) {
            simplicial_complex c = complex_from_json(load_json_file(opt.complex_path));
            return dispatch_ring(rs, [&](auto ring) { return emit(run_prop_star(ring, c), opt.timings); });
        }
        if (vmain->parsed()) {
            simplicial_complex c = complex_from_json(load_json_file(opt.complex_path));
            star_cover cover = cover_from_json(load_json_file(opt.cover_path), c);
            tie_break tb = parse_tie(opt.tie);
            return dispatch_ring(rs, [&](auto ring) { return emit(run_main_theorem(ring, c, cover, tb), opt.timings); });
        }
        if (vnat->parsed()) {
            naturality_instance in = naturality_from_json(load_json_file(opt.spec_path));
            return dispatch_ring(rs, [&](auto ring) { return emit(run_naturality(ring, in), opt.timings); });
        }
        std::cerr << "no subcommand\n";
        return 3;
    } catch (const json_format_error& e) {
        njson j;
        j["error"] = {{"kind", "malformed-input"}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const precondition_error& e) {
        njson j;
        j["error"] = {{"kind", "precondition"}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
        return 3;
    } catch (const std::exception& e) {
        njson j;
        j["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
        return 3;
    }
}
