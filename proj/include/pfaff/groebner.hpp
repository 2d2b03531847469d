#pragma once

// Buchberger's algorithm with the normal selection strategy and the
// product/chain pair criteria, multivariate division (normal forms),
// reduced bases, and elimination ideals via block orders.
//
// Everything here is deterministic: the pair queue is totally ordered by
// (lcm degree, lcm exponents, generator indices), so identical inputs give
// identical bases.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pfaff/polynomial.hpp"

namespace pfaff {

struct GroebnerLimits {
    std::uint64_t max_degree = 64;    // total degree of any basis element
    std::size_t max_basis = 4096;     // basis elements kept
    std::size_t max_pairs = 1000000;  // S-pairs processed
};

struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    std::vector<Polynomial> basis; // reduced: monic, auto-reduced, sorted by leading monomial

    bool is_trivial() const { return basis.size() == 1 && basis[0].is_one(); }
    bool is_zero_ideal() const { return basis.empty(); }
};

// Remainder of multivariate division of p by G: no term of the result is
// divisible by any leading monomial of G, and p - result lies in (G).
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G) {
    for (const auto& g : G) {
        if (g.ring() != p.ring())
            throw RingMismatchError("normal form: ring mismatch");
        if (g.order() != p.order())
            throw RingMismatchError("normal form: term order mismatch");
    }
    const MonomialOrder& order = p.order();
    Polynomial h = p;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero())
                continue;
            if (monomial_divides(g.leading_monomial(), h.leading_monomial())) {
                Monomial q = monomial_div(h.leading_monomial(), g.leading_monomial());
                Rational c = h.leading_coefficient() / g.leading_coefficient();
                Polynomial mult = Polynomial::from_terms(p.ring(), order, {{q, c}});
                h = h - mult * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(h.leading_term());
            h = h - Polynomial::from_terms(p.ring(), order, {h.leading_term()});
        }
    }
    return Polynomial::from_terms(p.ring(), order, std::move(remainder));
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial lcm = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial mf = Polynomial::from_terms(
        f.ring(), f.order(),
        {{monomial_div(lcm, f.leading_monomial()), Rational(1) / f.leading_coefficient()}});
    Polynomial mg = Polynomial::from_terms(
        g.ring(), g.order(),
        {{monomial_div(lcm, g.leading_monomial()), Rational(1) / g.leading_coefficient()}});
    return mf * f - mg * g;
}

struct Pair {
    std::uint64_t degree; // total degree of the lcm
    Monomial lcm;
    std::size_t i, j;

    bool operator<(const Pair& o) const {
        if (degree != o.degree)
            return degree < o.degree;
        if (lcm.exps != o.lcm.exps)
            return lcm.exps < o.lcm.exps;
        if (i != o.i)
            return i < o.i;
        return j < o.j;
    }
};

} // namespace detail

inline GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& generators,
                                const MonomialOrder& order, const GroebnerLimits& limits = {}) {
    std::vector<Polynomial> basis;
    for (const auto& g : generators) {
        if (g.ring() != ring)
            throw RingMismatchError("buchberger: generator from different ring");
        if (g.is_zero())
            continue;
        Polynomial h = make_primitive(g.with_order(order));
        if (std::find(basis.begin(), basis.end(), h) == basis.end())
            basis.push_back(std::move(h));
    }

    auto degree_check = [&](const Polynomial& p) {
        if (p.total_degree() > limits.max_degree)
            throw ResourceLimitError("groebner: polynomial degree limit " +
                                     std::to_string(limits.max_degree) + " exceeded");
    };
    for (const auto& b : basis)
        degree_check(b);

    std::set<detail::Pair> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial lcm = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        pending.insert({lcm.degree(), std::move(lcm), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            push_pair(i, j);

    std::size_t processed = 0;
    while (!pending.empty()) {
        detail::Pair pr = *pending.begin();
        pending.erase(pending.begin());
        if (++processed > limits.max_pairs)
            throw ResourceLimitError("groebner: pair limit exceeded");

        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        // Product criterion: coprime leading monomials never contribute.
        if (monomial_coprime(f.leading_monomial(), g.leading_monomial()))
            continue;
        // Chain criterion: some other basis element divides the lcm and
        // both of its pairs with this one are already settled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j)
                continue;
            if (!monomial_divides(basis[k].leading_monomial(), pr.lcm))
                continue;
            detail::Pair a{0, {}, std::min(pr.i, k), std::max(pr.i, k)};
            a.lcm = monomial_lcm(basis[a.i].leading_monomial(), basis[a.j].leading_monomial());
            a.degree = a.lcm.degree();
            detail::Pair b{0, {}, std::min(pr.j, k), std::max(pr.j, k)};
            b.lcm = monomial_lcm(basis[b.i].leading_monomial(), basis[b.j].leading_monomial());
            b.degree = b.lcm.degree();
            if (!pending.count(a) && !pending.count(b))
                skip = true;
        }
        if (skip)
            continue;

        Polynomial r = normal_form(detail::s_polynomial(f, g), basis);
        if (r.is_zero())
            continue;
        r = make_primitive(r);
        degree_check(r);
        basis.push_back(std::move(r));
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("groebner: basis size limit exceeded");
        for (std::size_t i = 0; i + 1 < basis.size(); ++i)
            push_pair(i, basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another surviving one.
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (const auto& p : basis) {
        bool redundant = false;
        for (const auto& q : minimal)
            if (monomial_divides(q.leading_monomial(), p.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant)
            minimal.push_back(p);
    }

    // Tail-reduce each element against the others and normalize monic.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(make_monic(normal_form(minimal[i], others)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return GroebnerBasis{ring, order, std::move(reduced)};
}

// Generators of (gens) ∩ Q[variables not in drop_mask], computed with a
// block order that eliminates the masked variables. Results are returned
// under the ring's default order.
inline std::vector<Polynomial> eliminate(const Ring& ring, const std::vector<Polynomial>& gens,
                                         const std::vector<char>& drop_mask,
                                         const GroebnerLimits& limits = {}) {
    if (drop_mask.size() != ring.arity())
        throw Error("eliminate: drop mask arity mismatch");
    MonomialOrder block = MonomialOrder::block(drop_mask);
    GroebnerBasis gb = buchberger(ring, gens, block, limits);
    std::vector<Polynomial> kept;
    for (const auto& p : gb.basis) {
        bool touches_dropped = false;
        for (std::size_t v = 0; v < ring.arity() && !touches_dropped; ++v)
            if (drop_mask[v] && p.leading_monomial().exps[v] != 0)
                touches_dropped = true;
        if (!touches_dropped)
            kept.push_back(p.with_order(ring.default_order()));
    }
    return kept;
}

} // namespace pfaff
