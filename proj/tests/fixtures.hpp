#pragma once

// Fixture loading shared by the test suites.  Parsing goes through the
// library's own JSON layer; the mathematical cross-checks in each suite use
// the independent oracles instead.

#include <string>

#include <nervecomp/json_io.hpp>
#include <nervecomp/nervecomp.hpp>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

inline nervecomp::simplicial_complex complex(const std::string& name) {
    return nervecomp::complex_from_json(nervecomp::load_json_file(path(name + ".json")));
}

inline nervecomp::star_cover cover(const std::string& name, const nervecomp::simplicial_complex& base) {
    return nervecomp::cover_from_json(nervecomp::load_json_file(path(name + ".json")), base);
}

inline nervecomp::naturality_instance naturality(const std::string& name) {
    return nervecomp::naturality_from_json(nervecomp::load_json_file(path(name + ".json")));
}

// the verification corpus: every complex paired with every cover defined
// on it
struct corpus_entry {
    std::string complex_name;
    std::string cover_name;
};

inline const std::vector<corpus_entry>& corpus() {
    static const std::vector<corpus_entry> entries = {
        {"triangle", "cover_triangle_star"},
        {"tetrahedron", "cover_tetrahedron_star"},
        {"hexagon", "cover_hexagon_two"},
        {"hexagon", "cover_hexagon_arcs"},
        {"hexagon", "cover_hexagon_one"},
        {"rp2", "cover_rp2_star"},
        {"torus7", "cover_torus7_star"},
    };
    return entries;
}

}  // namespace fixtures
