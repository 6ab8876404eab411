#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symchev {

// Exact rational scalar. mpq_class does not canonicalize two-argument
// construction, so all construction goes through rat().
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "3/4", "-2", "7". Throws on malformed input.
Rat rat_from_string(const std::string& s);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

// FNV-1a, used for content-addressed caches and hash maps.
struct Fnv1a {
    std::uint64_t h = 1469598103934665603ull;
    void feed(const void* data, std::size_t n) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    }
    void feed(const std::string& s) { feed(s.data(), s.size()); }
    void feed(std::uint64_t v) { feed(&v, sizeof v); }
};

}  // namespace symchev
