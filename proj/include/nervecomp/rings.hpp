#pragma once

#include <string>
#include <utility>

#include "base.hpp"

namespace nervecomp {

// Coefficient rings.  Each ring type carries its runtime state (the prime p
// for Z/p) and exposes exact arithmetic on a value type `elem` whose
// default-constructed value is the ring zero.

struct rationals_ring {
    using elem = rational;
    static constexpr bool is_field = true;

    elem zero() const { return elem(0); }
    elem one() const { return elem(1); }
    elem from_int(long long n) const { return elem(n); }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    elem inv(const elem& a) const {
        if (a == 0) throw precondition_error("rationals: division by zero");
        return 1 / a;
    }
    elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const elem& a) const { return a == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    std::string str(const elem& a) const {
        if (boost::multiprecision::denominator(a) == 1)
            return boost::multiprecision::numerator(a).str();
        return a.str();
    }
    std::string name() const { return "Q"; }
};

struct prime_field_ring {
    using elem = long long;  // canonical representative in [0, p)
    static constexpr bool is_field = true;

    long long p = 2;

    explicit prime_field_ring(long long modulus) : p(modulus) {
        if (p < 2) throw precondition_error("prime field: modulus must be >= 2");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw precondition_error("prime field: modulus " + std::to_string(p) + " is composite");
    }

    elem zero() const { return 0; }
    elem one() const { return 1 % p; }
    elem from_int(long long n) const {
        long long r = n % p;
        return r < 0 ? r + p : r;
    }
    elem add(elem a, elem b) const { return (a + b) % p; }
    elem sub(elem a, elem b) const { return ((a - b) % p + p) % p; }
    elem mul(elem a, elem b) const {
        return static_cast<elem>((static_cast<__int128>(a) * b) % p);
    }
    elem neg(elem a) const { return a == 0 ? 0 : p - a; }
    elem inv(elem a) const {
        if (a == 0) throw precondition_error("prime field: division by zero");
        // extended euclid on (a, p)
        long long t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return from_int(t);
    }
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }
    std::string str(elem a) const { return std::to_string(a); }
    std::string name() const { return "Zp:" + std::to_string(p); }
};

struct integer_ring {
    using elem = bigint;
    static constexpr bool is_field = false;

    elem zero() const { return elem(0); }
    elem one() const { return elem(1); }
    elem from_int(long long n) const { return elem(n); }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    bool divides(const elem& a, const elem& b) const {
        if (a == 0) return b == 0;
        return b % a == 0;
    }
    elem exact_div(const elem& a, const elem& b) const {
        if (b == 0 || a % b != 0)
            throw precondition_error("integers: inexact division");
        return a / b;
    }
    bool is_zero(const elem& a) const { return a == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    std::string str(const elem& a) const { return a.str(); }
    std::string name() const { return "Z"; }
};

// Runtime ring selection, parsed from CLI/JSON as "Q", "Zp:<p>", or "Z".
struct ring_spec {
    enum class kind_t { rationals, prime_field, integers };
    kind_t kind = kind_t::rationals;
    long long p = 0;

    static ring_spec Q() { return {kind_t::rationals, 0}; }
    static ring_spec Zp(long long p) { return {kind_t::prime_field, p}; }
    static ring_spec Z() { return {kind_t::integers, 0}; }

    static ring_spec parse(const std::string& s) {
        if (s == "Q") return Q();
        if (s == "Z") return Z();
        if (s.rfind("Zp:", 0) == 0) {
            std::size_t pos = 0;
            long long p = 0;
            try {
                p = std::stoll(s.substr(3), &pos);
            } catch (const std::exception&) {
                throw precondition_error("ring spec: bad modulus in '" + s + "'");
            }
            if (pos != s.size() - 3)
                throw precondition_error("ring spec: bad modulus in '" + s + "'");
            return Zp(p);
        }
        throw precondition_error("ring spec: expected Q, Zp:<p>, or Z, got '" + s + "'");
    }

    std::string name() const {
        switch (kind) {
            case kind_t::rationals: return "Q";
            case kind_t::prime_field: return "Zp:" + std::to_string(p);
            case kind_t::integers: return "Z";
        }
        return "?";
    }
};

// Calls f with the concrete ring object selected by spec.
template <class F>
auto dispatch_ring(const ring_spec& spec, F&& f) {
    switch (spec.kind) {
        case ring_spec::kind_t::rationals: return f(rationals_ring{});
        case ring_spec::kind_t::prime_field: return f(prime_field_ring{spec.p});
        case ring_spec::kind_t::integers: return f(integer_ring{});
    }
    throw precondition_error("ring spec: invalid kind");
}

}  // namespace nervecomp
