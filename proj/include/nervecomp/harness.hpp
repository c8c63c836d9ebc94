#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mv.hpp"

namespace nervecomp {

// Report model shared by all pipelines.  Everything in here is plain data
// with deterministic ordering, so serializing a report twice on the same
// input yields identical bytes.  Timings are collected separately and are
// not part of the default serialization.

struct check_result {
    std::string name;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> witness;  // [key, value] pairs
};

struct class_result {
    int index = 0;
    bool pass = true;
    std::vector<check_result> checks;
    std::vector<std::pair<std::string, std::string>> input;  // basis cocycle, when emitted
    std::vector<std::pair<std::string, std::string>> data;   // computed representative, when emitted
};

struct degree_result {
    int degree = 0;
    int basis_size = 0;
    std::vector<std::pair<std::string, std::string>> info;
    std::vector<class_result> classes;
};

struct verification_report {
    std::string pipeline;
    std::string ring;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<degree_result> degrees;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;
    bool pass = true;
    std::vector<std::pair<std::string, long long>> timings_us;
};

class stage_timer {
  public:
    explicit stage_timer(verification_report& rep, std::string name)
        : rep_(rep), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
    ~stage_timer() {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        rep_.timings_us.emplace_back(name_, us);
    }

  private:
    verification_report& rep_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string tuple_label(const simplicial_complex& c, const vertex_tuple& t) {
    std::string out = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(c.vertex_id(t[k]));
    }
    return out + ")";
}

template <class R>
std::vector<std::pair<std::string, std::string>> cochain_pairs(const R& ring,
                                                               const simplicial_complex& c,
                                                               const cochain<R>& x) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [t, v] : x.values) out.emplace_back(tuple_label(c, t), ring.str(v));
    return out;
}

template <class R>
std::vector<std::pair<std::string, std::string>> presentation_info(
    const cohomology_presentation<R>& pres) {
    std::vector<std::pair<std::string, std::string>> info;
    info.emplace_back("free_rank", std::to_string(pres.free_rank));
    std::string tor;
    for (std::size_t k = 0; k < pres.invariant_factors.size(); ++k) {
        if (k) tor += ",";
        tor += pres.invariant_factors[k].str();
    }
    info.emplace_back("invariant_factors", tor);
    return info;
}

inline const char* tie_break_name(tie_break tb) {
    return tb == tie_break::least_index ? "least-index" : "greatest-index";
}

// Decides whether cocycles `images` induce an isomorphism from a cohomology
// group with the same presentation onto H^p of `fine`.  Since finitely
// generated modules over these rings are Hopfian, it is enough that the
// presentations match and that every generator of H^p(fine) lies in the span
// of the images modulo coboundaries.
template <class R>
bool spans_isomorphically(const R& ring, const simplicial_complex& fine, int p,
                          const std::vector<cochain<R>>& images,
                          const cohomology_presentation<R>& source_presentation) {
    cohomology_classes<R> target = cohomology(ring, fine, p);
    if (target.presentation.free_rank != source_presentation.free_rank ||
        target.presentation.invariant_factors != source_presentation.invariant_factors)
        return false;
    int rows = static_cast<int>(fine.simplices(p).size());
    sparse_matrix<R> cob =
        p == 0 ? sparse_matrix<R>(rows, 0) : alt_coboundary_matrix(ring, fine, p - 1);
    sparse_matrix<R> m(rows, static_cast<int>(images.size()) + cob.cols());
    for (std::size_t j = 0; j < images.size(); ++j) {
        auto col = alt_vector(ring, fine, p, images[j]);
        for (int i = 0; i < rows; ++i) m.set(ring, i, static_cast<int>(j), col[static_cast<std::size_t>(i)]);
    }
    for (int j = 0; j < cob.cols(); ++j)
        for (int i = 0; i < rows; ++i)
            m.set(ring, i, static_cast<int>(images.size()) + j, cob.get(i, j));
    for (const auto& gen : target.representatives) {
        auto b = alt_vector(ring, fine, p, gen);
        if (!span_membership(ring, m, b).has_value()) return false;
    }
    return true;
}

// Vertex-star cover pipeline: at level 1 the zigzag of the star cover must
// reproduce the max-vertex approximation g on the nose (exact cochain
// equality), and therefore induce the identity on cohomology after the
// level comparison.
template <class R>
verification_report run_prop_star(const R& ring, const simplicial_complex& k) {
    verification_report rep;
    rep.pipeline = "prop-star";
    rep.ring = ring.name();
    subdivision_tower tower(k);
    tower.extend_to(1);
    star_cover cover = make_star_cover(k);
    simplicial_complex nrv = nerve(cover, k);
    choice_rule rule = default_choice_rule(cover, tower, 1);
    rep.config.emplace_back("r", "1");
    rep.config.emplace_back("choice_rule", rule.name);
    mv_complex<R> mv(ring, cover, tower, 1, rule);
    const simplicial_complex& fine = tower.level(1).complex;
    const simplicial_map& g = tower.approximation(0);
    for (int p = 0; p <= k.dim(); ++p) {
        stage_timer t(rep, "degree " + std::to_string(p));
        cohomology_classes<R> h = cohomology(ring, nrv, p);
        degree_result dr;
        dr.degree = p;
        dr.basis_size = h.presentation.generator_count();
        dr.info = presentation_info(h.presentation);
        for (std::size_t idx = 0; idx < h.representatives.size(); ++idx) {
            const cochain<R>& phi = h.representatives[idx];
            class_result cr;
            cr.index = static_cast<int>(idx);
            cochain<R> z = mv.zeta_tilde(phi);
            cochain<R> gphi = pullback(ring, fine, g, phi);
            check_result lemma{"zigzag-equals-approximation-pullback", true, {}};
            if (!cochain_equal(ring, z, gphi)) {
                lemma.pass = false;
                lemma.witness = cochain_pairs(ring, fine, cochain_sub(ring, z, gphi));
            }
            cochain<R> cp = comparison_pullback(ring, tower, 0, 1, phi);
            check_result ident{"class-equals-level-comparison", true, {}};
            if (!class_equal(ring, fine, p, z, cp))
                ident.pass = false;
            cr.checks = {lemma, ident};
            cr.pass = lemma.pass && ident.pass;
            rep.pass = rep.pass && cr.pass;
            dr.classes.push_back(std::move(cr));
        }
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

// Main comparison pipeline: for each nerve cohomology basis class, the
// zigzag representative and the partition-of-unity representative must be
// cohomologous at the common comparison level.
template <class R>
verification_report run_main_theorem(const R& ring, const simplicial_complex& k,
                                     const star_cover& cover,
                                     tie_break tb = tie_break::least_index) {
    verification_report rep;
    rep.pipeline = "main";
    rep.ring = ring.name();
    rep.warnings = cover.warnings;
    subdivision_tower tower(k);
    int r = smallness_level(cover, tower);
    fstar_approximation ap = f_star_approximation(cover, tower, tb);
    int level = std::max(r, ap.level);
    tower.extend_to(level);
    simplicial_complex nrv = nerve(cover, k);
    choice_rule rule = default_choice_rule(cover, tower, r);
    rep.config.emplace_back("r", std::to_string(r));
    rep.config.emplace_back("r_prime", std::to_string(ap.level));
    rep.config.emplace_back("comparison_level", std::to_string(level));
    rep.config.emplace_back("choice_rule", rule.name);
    rep.config.emplace_back("tie_break", tie_break_name(tb));
    mv_complex<R> mv(ring, cover, tower, r, rule);
    const simplicial_complex& fine = tower.level(level).complex;
    for (int p = 0; p <= nrv.dim(); ++p) {
        stage_timer t(rep, "degree " + std::to_string(p));
        cohomology_classes<R> h = cohomology(ring, nrv, p);
        degree_result dr;
        dr.degree = p;
        dr.basis_size = h.presentation.generator_count();
        dr.info = presentation_info(h.presentation);
        for (std::size_t idx = 0; idx < h.representatives.size(); ++idx) {
            const cochain<R>& phi = h.representatives[idx];
            class_result cr;
            cr.index = static_cast<int>(idx);
            cochain<R> z = comparison_pullback(ring, tower, r, level, mv.zeta_tilde(phi));
            cochain<R> f = f_star(ring, cover, tower, phi, level, tb);
            check_result cmp{"zigzag-matches-pou-pullback", true, {}};
            if (!class_equal(ring, fine, p, z, f)) {
                cmp.pass = false;
                cmp.witness = cochain_pairs(ring, fine, cochain_sub(ring, z, f));
            }
            cr.checks = {cmp};
            cr.pass = cmp.pass;
            rep.pass = rep.pass && cr.pass;
            dr.classes.push_back(std::move(cr));
        }
        rep.degrees.push_back(std::move(dr));
    }
    // surface degrees where the space has more cohomology than the nerve
    // offers, e.g. a cover whose double intersections are not connected
    for (int p = 0; p <= k.dim(); ++p) {
        cohomology_presentation<R> hk = cohomology(ring, k, p).presentation;
        cohomology_presentation<R> hn =
            p <= nrv.dim() ? cohomology(ring, nrv, p).presentation : cohomology_presentation<R>{};
        if (hk.generator_count() > hn.generator_count()) {
            std::ostringstream note;
            note << "degree " << p << ": the space has " << hk.generator_count()
                 << " generator(s) but the nerve only " << hn.generator_count()
                 << "; the missing classes are not hit by either map";
            rep.notes.push_back(note.str());
        }
    }
    return rep;
}

struct naturality_instance {
    simplicial_complex source;       // K
    simplicial_complex target;       // L
    star_cover source_cover;         // V on K
    star_cover target_cover;         // W on L
    simplicial_map base_map;         // h: K -> L in ranks
};

// Naturality pipeline: with h carrying each V_i into W_i, the square formed
// by the nerve map and the two zigzags must commute on cohomology classes.
template <class R>
verification_report run_naturality(const R& ring, const naturality_instance& in) {
    verification_report rep;
    rep.pipeline = "naturality";
    rep.ring = ring.name();
    const simplicial_complex& k = in.source;
    const simplicial_complex& l = in.target;
    if (!is_simplicial(k, l, in.base_map))
        throw precondition_error("naturality: base map is not simplicial");

    // match cover members by id
    if (in.source_cover.size() != in.target_cover.size())
        throw precondition_error("naturality: covers must share one index set");
    std::vector<int> w_of_v(static_cast<std::size_t>(in.source_cover.size()), -1);
    for (int i = 0; i < in.source_cover.size(); ++i) {
        const std::string& id = in.source_cover.ids[static_cast<std::size_t>(i)];
        for (int j = 0; j < in.target_cover.size(); ++j)
            if (in.target_cover.ids[static_cast<std::size_t>(j)] == id) w_of_v[static_cast<std::size_t>(i)] = j;
        if (w_of_v[static_cast<std::size_t>(i)] < 0)
            throw precondition_error("naturality: cover member '" + id + "' is missing on the target side");
    }

    // containment h(V_i) <= W_i, equivalent to h(A_i^V) <= A_i^W vertexwise
    for (int i = 0; i < in.source_cover.size(); ++i) {
        const vertex_set& av = in.source_cover.sets[static_cast<std::size_t>(i)];
        const vertex_set& aw = in.target_cover.sets[static_cast<std::size_t>(w_of_v[static_cast<std::size_t>(i)])];
        for (int a : av) {
            int b = in.base_map.vertex_map[static_cast<std::size_t>(a)];
            if (!std::binary_search(aw.begin(), aw.end(), b))
                throw precondition_error("naturality: member '" +
                                         in.source_cover.ids[static_cast<std::size_t>(i)] +
                                         "' vertex " + std::to_string(k.vertex_id(a)) +
                                         " maps outside the target member");
        }
    }

    subdivision_tower tower_v(k);
    subdivision_tower tower_w(l);
    int rv = smallness_level(in.source_cover, tower_v);
    int rw = smallness_level(in.target_cover, tower_w);
    int level = std::max(rv, rw);
    tower_v.extend_to(level);
    tower_w.extend_to(level);
    rep.config.emplace_back("r_source", std::to_string(rv));
    rep.config.emplace_back("r_target", std::to_string(rw));
    rep.config.emplace_back("comparison_level", std::to_string(level));

    simplicial_complex nerve_v = nerve(in.source_cover, k);
    simplicial_complex nerve_w = nerve(in.target_cover, l);
    simplicial_map nerve_map;
    nerve_map.vertex_map = w_of_v;
    if (!is_simplicial(nerve_v, nerve_w, nerve_map))
        throw precondition_error("naturality: induced nerve map is not simplicial");

    choice_rule rule_v = default_choice_rule(in.source_cover, tower_v, rv);
    choice_rule rule_w = default_choice_rule(in.target_cover, tower_w, rw);
    rep.config.emplace_back("choice_rule_source", rule_v.name);
    rep.config.emplace_back("choice_rule_target", rule_w.name);
    mv_complex<R> mv_v(ring, in.source_cover, tower_v, rv, rule_v);
    mv_complex<R> mv_w(ring, in.target_cover, tower_w, rw, rule_w);

    simplicial_map h_level = subdivided_map(tower_v, tower_w, in.base_map, level);
    const simplicial_complex& fine_v = tower_v.level(level).complex;
    if (!is_simplicial(fine_v, tower_w.level(level).complex, h_level))
        throw precondition_error("naturality: subdivided map is not simplicial");

    for (int p = 0; p <= nerve_w.dim(); ++p) {
        stage_timer t(rep, "degree " + std::to_string(p));
        cohomology_classes<R> h = cohomology(ring, nerve_w, p);
        degree_result dr;
        dr.degree = p;
        dr.basis_size = h.presentation.generator_count();
        dr.info = presentation_info(h.presentation);
        for (std::size_t idx = 0; idx < h.representatives.size(); ++idx) {
            const cochain<R>& phi = h.representatives[idx];
            class_result cr;
            cr.index = static_cast<int>(idx);
            cochain<R> nphi = pullback(ring, nerve_v, nerve_map, phi);
            cochain<R> left =
                comparison_pullback(ring, tower_v, rv, level, mv_v.zeta_tilde(nphi));
            cochain<R> right =
                pullback(ring, fine_v, h_level,
                         comparison_pullback(ring, tower_w, rw, level, mv_w.zeta_tilde(phi)));
            check_result sq{"square-commutes-on-classes", true, {}};
            if (!class_equal(ring, fine_v, p, left, right)) {
                sq.pass = false;
                sq.witness = cochain_pairs(ring, fine_v, cochain_sub(ring, left, right));
            }
            cr.checks = {sq};
            cr.pass = sq.pass;
            rep.pass = rep.pass && cr.pass;
            dr.classes.push_back(std::move(cr));
        }
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

// Informational pipelines used by the CLI.

template <class R>
verification_report run_betti(const R& ring, const simplicial_complex& k,
                              std::optional<int> only_degree = std::nullopt) {
    verification_report rep;
    rep.pipeline = "betti";
    rep.ring = ring.name();
    int lo = only_degree.value_or(0);
    int hi = only_degree.value_or(std::max(k.dim(), 0));
    if (lo < 0) throw precondition_error("betti: negative degree");
    for (int p = lo; p <= hi; ++p) {
        cohomology_presentation<R> pres = cohomology(ring, k, p).presentation;
        degree_result dr;
        dr.degree = p;
        dr.basis_size = pres.generator_count();
        dr.info = presentation_info(pres);
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

// Emits the zigzag representative of every nerve basis class at the
// smallness level.
template <class R>
verification_report run_eta(const R& ring, const simplicial_complex& k, const star_cover& cover) {
    verification_report rep;
    rep.pipeline = "eta";
    rep.ring = ring.name();
    rep.warnings = cover.warnings;
    subdivision_tower tower(k);
    int r = smallness_level(cover, tower);
    simplicial_complex nrv = nerve(cover, k);
    choice_rule rule = default_choice_rule(cover, tower, r);
    rep.config.emplace_back("r", std::to_string(r));
    rep.config.emplace_back("choice_rule", rule.name);
    mv_complex<R> mv(ring, cover, tower, r, rule);
    const simplicial_complex& fine = tower.level(r).complex;
    for (int p = 0; p <= nrv.dim(); ++p) {
        cohomology_classes<R> h = cohomology(ring, nrv, p);
        degree_result dr;
        dr.degree = p;
        dr.basis_size = h.presentation.generator_count();
        dr.info = presentation_info(h.presentation);
        for (std::size_t idx = 0; idx < h.representatives.size(); ++idx) {
            class_result cr;
            cr.index = static_cast<int>(idx);
            cr.input = cochain_pairs(ring, nrv, h.representatives[idx]);
            cr.data = cochain_pairs(ring, fine, mv.zeta_tilde(h.representatives[idx]));
            dr.classes.push_back(std::move(cr));
        }
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

// Emits the partition-of-unity representative of every nerve basis class at
// the approximation level.
template <class R>
verification_report run_fstar(const R& ring, const simplicial_complex& k, const star_cover& cover,
                              tie_break tb = tie_break::least_index) {
    verification_report rep;
    rep.pipeline = "fstar";
    rep.ring = ring.name();
    rep.warnings = cover.warnings;
    subdivision_tower tower(k);
    fstar_approximation ap = f_star_approximation(cover, tower, tb);
    simplicial_complex nrv = nerve(cover, k);
    rep.config.emplace_back("r_prime", std::to_string(ap.level));
    rep.config.emplace_back("tie_break", tie_break_name(tb));
    const simplicial_complex& fine = tower.level(ap.level).complex;
    for (int p = 0; p <= nrv.dim(); ++p) {
        cohomology_classes<R> h = cohomology(ring, nrv, p);
        degree_result dr;
        dr.degree = p;
        dr.basis_size = h.presentation.generator_count();
        dr.info = presentation_info(h.presentation);
        for (std::size_t idx = 0; idx < h.representatives.size(); ++idx) {
            class_result cr;
            cr.index = static_cast<int>(idx);
            cr.input = cochain_pairs(ring, nrv, h.representatives[idx]);
            cr.data = cochain_pairs(ring, fine,
                                    f_star(ring, cover, tower, h.representatives[idx], ap.level, tb));
            dr.classes.push_back(std::move(cr));
        }
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

}  // namespace nervecomp
