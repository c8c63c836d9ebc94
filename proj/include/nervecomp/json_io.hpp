#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "harness.hpp"

namespace nervecomp {

// Raised for unreadable files and structurally invalid JSON documents; the
// CLI maps it to its own exit code, distinct from precondition failures.
struct json_format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using njson = nlohmann::json;

inline njson parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return njson::parse(text);
    } catch (const njson::parse_error& e) {
        throw json_format_error(origin + ": " + e.what());
    }
}

inline njson load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw json_format_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

inline long long require_integer(const njson& j, const std::string& what) {
    if (!j.is_number_integer()) throw json_format_error(what + ": expected an integer");
    return j.get<long long>();
}

// Complex files are {"vertices": [ints], "facets": [[ints]]}.  Serialization
// is canonical (vertices in stored order, facets as the maximal simplices in
// dimension-then-lexicographic order), so canonical files round-trip to the
// same bytes.
inline simplicial_complex complex_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw json_format_error("complex: expected an object with 'vertices' and 'facets'");
    if (!j["vertices"].is_array() || !j["facets"].is_array())
        throw json_format_error("complex: 'vertices' and 'facets' must be arrays");
    std::vector<int> vertices;
    for (const auto& v : j["vertices"])
        vertices.push_back(static_cast<int>(require_integer(v, "complex vertex")));
    std::vector<vertex_set> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw json_format_error("complex: each facet must be an array");
        vertex_set s;
        for (const auto& v : f) s.push_back(static_cast<int>(require_integer(v, "complex facet entry")));
        facets.push_back(std::move(s));
    }
    return close_downward(facets, vertices);
}

inline njson complex_to_json(const simplicial_complex& c) {
    njson j;
    j["vertices"] = njson::array();
    for (int v : c.vertex_ids()) j["vertices"].push_back(v);
    j["facets"] = njson::array();
    for (const auto& f : c.facets()) {
        njson jf = njson::array();
        for (int rank : f) jf.push_back(c.vertex_id(rank));
        j["facets"].push_back(std::move(jf));
    }
    return j;
}

// Cover files are {"sets": {id: [vertex ids]}, "order": [ids]} with "order"
// optional (alphabetical when absent).
inline star_cover cover_from_json(const njson& j, const simplicial_complex& base) {
    if (!j.is_object() || !j.contains("sets") || !j["sets"].is_object())
        throw json_format_error("cover: expected an object with a 'sets' object");
    std::vector<std::pair<std::string, std::vector<int>>> named;
    for (const auto& [id, arr] : j["sets"].items()) {
        if (!arr.is_array()) throw json_format_error("cover: each set must be an array");
        std::vector<int> ids;
        for (const auto& v : arr) ids.push_back(static_cast<int>(require_integer(v, "cover set entry")));
        named.emplace_back(id, std::move(ids));
    }
    std::optional<std::vector<std::string>> order;
    if (j.contains("order")) {
        if (!j["order"].is_array()) throw json_format_error("cover: 'order' must be an array");
        std::vector<std::string> ids;
        for (const auto& v : j["order"]) {
            if (!v.is_string()) throw json_format_error("cover: 'order' entries must be strings");
            ids.push_back(v.get<std::string>());
        }
        order = std::move(ids);
    }
    return make_cover(base, named, order);
}

inline njson cover_to_json(const star_cover& c, const simplicial_complex& base) {
    njson j;
    j["sets"] = njson::object();
    j["order"] = njson::array();
    for (int i = 0; i < c.size(); ++i) {
        njson arr = njson::array();
        for (int rank : c.sets[static_cast<std::size_t>(i)]) arr.push_back(base.vertex_id(rank));
        j["sets"][c.ids[static_cast<std::size_t>(i)]] = std::move(arr);
        j["order"].push_back(c.ids[static_cast<std::size_t>(i)]);
    }
    return j;
}

// Naturality files bundle the two complexes, the two covers, and the base
// vertex map as [[source id, target id], ...].
inline naturality_instance naturality_from_json(const njson& j) {
    for (const char* key : {"source", "target", "source_cover", "target_cover", "vertex_map"})
        if (!j.is_object() || !j.contains(key))
            throw json_format_error(std::string("naturality: missing '") + key + "'");
    naturality_instance in;
    in.source = complex_from_json(j["source"]);
    in.target = complex_from_json(j["target"]);
    in.source_cover = cover_from_json(j["source_cover"], in.source);
    in.target_cover = cover_from_json(j["target_cover"], in.target);
    if (!j["vertex_map"].is_array()) throw json_format_error("naturality: 'vertex_map' must be an array");
    in.base_map.vertex_map.assign(static_cast<std::size_t>(in.source.vertex_count()), -1);
    for (const auto& pair : j["vertex_map"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw json_format_error("naturality: vertex_map entries must be [source, target] pairs");
        int a = in.source.rank_of(static_cast<int>(require_integer(pair[0], "vertex_map source")));
        int b = in.target.rank_of(static_cast<int>(require_integer(pair[1], "vertex_map target")));
        if (in.base_map.vertex_map[static_cast<std::size_t>(a)] != -1)
            throw precondition_error("naturality: vertex mapped twice");
        in.base_map.vertex_map[static_cast<std::size_t>(a)] = b;
    }
    for (std::size_t a = 0; a < in.base_map.vertex_map.size(); ++a)
        if (in.base_map.vertex_map[a] == -1)
            throw precondition_error("naturality: vertex " +
                                     std::to_string(in.source.vertex_id(static_cast<int>(a))) +
                                     " has no image");
    return in;
}

inline std::string rational_str(const rational& x) { return x.str(); }

// Subdivision levels serialize as the complex plus exact barycentric
// coordinates over the base vertex ids.
inline njson level_to_json(const subdivision_level& l, const simplicial_complex& base) {
    njson j = complex_to_json(l.complex);
    j["level"] = l.level;
    j["coords"] = njson::object();
    for (int v = 0; v < l.complex.vertex_count(); ++v) {
        njson arr = njson::array();
        for (const auto& x : l.coords[static_cast<std::size_t>(v)]) arr.push_back(rational_str(x));
        j["coords"][std::to_string(l.complex.vertex_id(v))] = std::move(arr);
    }
    j["base_vertices"] = njson::array();
    for (int v : base.vertex_ids()) j["base_vertices"].push_back(v);
    return j;
}

inline njson pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
    njson arr = njson::array();
    for (const auto& [k, v] : pairs) arr.push_back(njson::array({k, v}));
    return arr;
}

inline njson report_to_json(const verification_report& rep, bool include_timings = false) {
    njson j;
    j["schema"] = 1;
    j["pipeline"] = rep.pipeline;
    j["ring"] = rep.ring;
    j["config"] = njson::object();
    for (const auto& [k, v] : rep.config) j["config"][k] = v;
    j["degrees"] = njson::array();
    for (const auto& dr : rep.degrees) {
        njson jd;
        jd["degree"] = dr.degree;
        jd["basis_size"] = dr.basis_size;
        jd["info"] = njson::object();
        for (const auto& [k, v] : dr.info) jd["info"][k] = v;
        jd["classes"] = njson::array();
        for (const auto& cr : dr.classes) {
            njson jc;
            jc["index"] = cr.index;
            jc["pass"] = cr.pass;
            jc["checks"] = njson::array();
            for (const auto& ch : cr.checks) {
                njson jch;
                jch["name"] = ch.name;
                jch["pass"] = ch.pass;
                jch["witness"] = pairs_to_json(ch.witness);
                jc["checks"].push_back(std::move(jch));
            }
            if (!cr.input.empty()) jc["input"] = pairs_to_json(cr.input);
            if (!cr.data.empty()) jc["data"] = pairs_to_json(cr.data);
            jd["classes"].push_back(std::move(jc));
        }
        j["degrees"].push_back(std::move(jd));
    }
    j["notes"] = rep.notes;
    j["warnings"] = rep.warnings;
    j["pass"] = rep.pass;
    if (include_timings) {
        njson arr = njson::array();
        for (const auto& [name, us] : rep.timings_us) arr.push_back(njson::array({name, us}));
        j["timings_us"] = std::move(arr);
    }
    return j;
}

}  // namespace nervecomp
