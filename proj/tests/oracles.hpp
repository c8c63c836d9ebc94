#pragma once

// Independent dense reference implementations used to cross-check the
// library's exact linear algebra.  Everything here is deliberately naive:
// full dense storage, classic textbook elimination, no shared code with the
// sparse implementations under test.

#include <nervecomp/nervecomp.hpp>

#include <vector>

namespace oracle {

using nervecomp::bigint;
using nervecomp::rational;

using qmat = std::vector<std::vector<rational>>;
using zmat = std::vector<std::vector<bigint>>;

inline int rank_q(qmat a) {
    if (a.empty() || a[0].empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            rational f = a[r][c] / a[rank][c];
            for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// dense elimination mod a prime, row-reducing left to right
inline int rank_p(zmat a, long long p) {
    if (a.empty() || a[0].empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    auto inv = [p](bigint x) {
        bigint r = 1, base = x % p, e = p - 2;
        while (e > 0) {
            if (e % 2 == 1) r = r * base % p;
            base = base * base % p;
            e /= 2;
        }
        return r;
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        bigint f = inv(a[rank][c]);
        for (int k = c; k < cols; ++k) a[rank][k] = a[rank][k] * f % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            bigint g = a[r][c];
            for (int k = c; k < cols; ++k) a[r][k] = ((a[r][k] - g * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline bigint det_z(zmat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    bigint sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bigint gcd_z(bigint a, bigint b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        bigint t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Smith invariant factors by the classic corner-reduction algorithm; no
// transform tracking, structured differently from the library's version
// (moves the global minimum to the corner, clears, restarts on failure).
inline std::vector<bigint> smith_invariants(zmat a) {
    std::vector<bigint> out;
    if (a.empty() || a[0].empty()) return out;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int corner = 0;
    while (corner < rows && corner < cols) {
        int pi = -1, pj = -1;
        bigint best = 0;
        for (int i = corner; i < rows; ++i)
            for (int j = corner; j < cols; ++j) {
                bigint v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(a[corner], a[pi]);
        for (int i = corner; i < rows; ++i) std::swap(a[i][corner], a[i][pj]);
        bool clean = true;
        for (int i = corner + 1; i < rows; ++i) {
            bigint q = a[i][corner] / a[corner][corner];
            for (int j = corner; j < cols; ++j) a[i][j] -= q * a[corner][j];
            if (a[i][corner] != 0) clean = false;
        }
        for (int j = corner + 1; j < cols; ++j) {
            bigint q = a[corner][j] / a[corner][corner];
            for (int i = corner; i < rows; ++i) a[i][j] -= q * a[i][corner];
            if (a[corner][j] != 0) clean = false;
        }
        if (!clean) continue;
        // enforce divisibility by folding any bad entry into the corner
        bool divides_all = true;
        for (int i = corner + 1; i < rows && divides_all; ++i)
            for (int j = corner + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[corner][corner] != 0) {
                    for (int jj = corner; jj < cols; ++jj) a[corner][jj] += a[i][jj];
                    divides_all = false;
                }
        if (!divides_all) continue;
        ++corner;
    }
    for (int k = 0; k < corner; ++k) {
        bigint d = a[k][k] < 0 ? -a[k][k] : a[k][k];
        out.push_back(d);
    }
    return out;
}

// Column-Hermite membership test: is b an integer combination of the
// columns of a?
inline bool lattice_member(zmat a, std::vector<bigint> b) {
    int rows = static_cast<int>(b.size());
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    // column elimination to a lower-staircase form via gcd steps
    int lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        while (true) {
            int nz = -1;
            for (int c = lead; c < cols; ++c)
                if (a[r][c] != 0) {
                    nz = c;
                    break;
                }
            if (nz < 0) break;
            for (int c = nz + 1; c < cols; ++c) {
                while (a[r][c] != 0) {
                    bigint q = a[r][nz] / a[r][c];
                    for (int i = 0; i < rows; ++i) a[i][nz] -= q * a[i][c];
                    for (int i = 0; i < rows; ++i) std::swap(a[i][nz], a[i][c]);
                }
            }
            if (a[r][nz] != 0) {
                for (int i = 0; i < rows; ++i) std::swap(a[i][lead], a[i][nz]);
                break;
            }
        }
        if (lead < cols && a[r][lead] != 0) {
            if (b[static_cast<std::size_t>(r)] % a[r][lead] != 0) return false;
            bigint q = b[static_cast<std::size_t>(r)] / a[r][lead];
            for (int i = 0; i < rows; ++i) b[static_cast<std::size_t>(i)] -= q * a[i][lead];
            ++lead;
        } else if (b[static_cast<std::size_t>(r)] != 0) {
            return false;
        }
    }
    for (int r = 0; r < rows; ++r)
        if (b[static_cast<std::size_t>(r)] != 0) return false;
    return true;
}

// Alternating coboundary matrix built by face deletion (the library builds
// it by coface insertion): rows are (p+1)-simplices, columns are
// p-simplices, entry (tau, k-th face of tau) gets (-1)^k.
inline zmat alt_delta(const nervecomp::simplicial_complex& c, int p) {
    const auto& rows = c.simplices(p + 1);
    const auto& cols = c.simplices(p);
    zmat m(rows.size(), std::vector<bigint>(cols.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k) {
            nervecomp::vertex_set face = rows[i];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
            std::size_t j = 0;
            while (cols[j] != face) ++j;
            m[i][j] += (k % 2 == 0 ? 1 : -1);
        }
    return m;
}

inline qmat to_q(const zmat& a) {
    qmat q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) q[i].emplace_back(x);
    return q;
}

struct betti_z {
    int free_rank = 0;
    std::vector<bigint> torsion;  // invariant factors > 1 of the incoming matrix
};

// H^p of the alternating integral cochain complex by the textbook formula:
// free rank = nullity(delta_p) - rank(delta_{p-1}), torsion = invariant
// factors > 1 of delta_{p-1}.
inline betti_z cohomology_oracle_z(const nervecomp::simplicial_complex& c, int p) {
    int np = static_cast<int>(c.simplices(p).size());
    zmat dout = alt_delta(c, p);
    int rank_out = rank_q(to_q(dout));
    int rank_in = 0;
    betti_z out;
    if (p > 0) {
        zmat din = alt_delta(c, p - 1);
        rank_in = rank_q(to_q(din));
        for (const auto& d : smith_invariants(din))
            if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = np - rank_out - rank_in;
    return out;
}

// field Betti number: nullity(delta_p) - rank(delta_{p-1}) with ranks mod p
// (or over Q when modulus == 0)
inline int betti_field(const nervecomp::simplicial_complex& c, int p, long long modulus) {
    int np = static_cast<int>(c.simplices(p).size());
    zmat dout = alt_delta(c, p);
    int rank_out = modulus == 0 ? rank_q(to_q(dout)) : rank_p(dout, modulus);
    int rank_in = 0;
    if (p > 0) {
        zmat din = alt_delta(c, p - 1);
        rank_in = modulus == 0 ? rank_q(to_q(din)) : rank_p(din, modulus);
    }
    return np - rank_out - rank_in;
}

inline zmat dense_of(const nervecomp::sparse_matrix<nervecomp::integer_ring>& m) {
    zmat d(static_cast<std::size_t>(m.rows()), std::vector<bigint>(static_cast<std::size_t>(m.cols()), 0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.get(i, j);
    return d;
}

inline zmat matmul(const zmat& a, const zmat& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    zmat c(n, std::vector<bigint>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

}  // namespace oracle
