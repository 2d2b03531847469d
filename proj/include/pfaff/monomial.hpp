#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "pfaff/errors.hpp"

namespace pfaff {

// Exponent vector; its length always equals the arity of the owning ring.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t arity() const { return exps.size(); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps)
            d += e;
        return d;
    }

    bool is_one() const {
        for (auto e : exps)
            if (e != 0)
                return false;
        return true;
    }

    bool operator==(const Monomial& o) const = default;
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b, std::uint32_t max_exponent) {
    Monomial r(a.exps);
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
        r.exps[i] += b.exps[i];
        if (r.exps[i] > max_exponent)
            throw DegreeLimitError("monomial exponent exceeds ring limit " +
                                   std::to_string(max_exponent));
    }
    return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i])
            return false;
    return true;
}

// b / a; caller guarantees divisibility.
inline Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.exps);
    for (std::size_t i = 0; i < r.exps.size(); ++i)
        r.exps[i] -= a.exps[i];
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps);
    for (std::size_t i = 0; i < r.exps.size(); ++i)
        r.exps[i] = std::max(r.exps[i], b.exps[i]);
    return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != 0 && b.exps[i] != 0)
            return false;
    return true;
}

} // namespace pfaff
