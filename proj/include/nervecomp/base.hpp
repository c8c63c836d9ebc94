#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nervecomp {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// A simplex is a strictly increasing list of vertex ranks; an algebraic
// simplex is an arbitrary tuple (repeats allowed) whose underlying set is a
// simplex.  Both use vertex ranks, i.e. positions in the ambient complex's
// vertex order, never raw vertex ids.
using vertex_set = std::vector<int>;
using vertex_tuple = std::vector<int>;

// Violated input contracts (bad covers, non-cocycles, composite moduli, ...).
// The CLI maps this to its precondition exit code.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline vertex_set tuple_support(const vertex_tuple& t) {
    vertex_set s(t);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool has_repeats(const vertex_tuple& t) {
    return tuple_support(t).size() != t.size();
}

// Sign of the permutation sorting t ascending, assuming no repeats.
inline int sort_sign(vertex_tuple t) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        std::size_t m = i;
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[j] < t[m]) m = j;
        if (m != i) {
            std::swap(t[i], t[m]);
            sign = -sign;
        }
    }
    return sign;
}

inline vertex_tuple tuple_erase(const vertex_tuple& t, std::size_t k) {
    vertex_tuple r = t;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

inline vertex_tuple tuple_insert(const vertex_tuple& t, std::size_t k, int v) {
    vertex_tuple r = t;
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(k), v);
    return r;
}

}  // namespace nervecomp
