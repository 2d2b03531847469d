#pragma once

// Ideal-level operations: triviality, membership, radical membership via
// the Rabinowitsch trick, saturation and intersection through elimination,
// Krull dimension from the leading-term staircase, radicals by
// dimension-descending splitting, and Noether exponent search.
//
// Ideals are immutable values; reduced Groebner bases are cached per
// monomial order behind a mutex, so sharing one Ideal across threads is
// safe.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pfaff/gcd.hpp"
#include "pfaff/groebner.hpp"

namespace pfaff {

class Ideal {
  public:
    explicit Ideal(Ring ring, std::vector<Polynomial> generators = {})
        : ring_(std::move(ring)), gens_(std::move(generators)),
          cache_(std::make_shared<Cache>()) {
        for (const auto& g : gens_)
            if (g.ring() != ring_)
                throw RingMismatchError("ideal generator from different ring");
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const GroebnerBasis& groebner_basis(const MonomialOrder& order,
                                        const GroebnerLimits& limits = {}) const {
        std::scoped_lock lock(cache_->mu);
        auto it = cache_->bases.find(order);
        if (it == cache_->bases.end())
            it = cache_->bases.emplace(order, buchberger(ring_, gens_, order, limits)).first;
        return it->second;
    }

    const GroebnerBasis& groebner_basis(const GroebnerLimits& limits = {}) const {
        return groebner_basis(ring_.default_order(), limits);
    }

  private:
    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, GroebnerBasis> bases;
    };

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline bool is_trivial(const Ideal& I, const GroebnerLimits& limits = {}) {
    return I.groebner_basis(limits).is_trivial();
}

inline bool contains(const Ideal& I, const Polynomial& p, const GroebnerLimits& limits = {}) {
    const GroebnerBasis& gb = I.groebner_basis(limits);
    return normal_form(p.with_order(gb.order), gb.basis).is_zero();
}

namespace detail {

inline std::vector<Polynomial> lift_all(const std::vector<Polynomial>& ps, const Ring& target) {
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps)
        out.push_back(transport(p, target));
    return out;
}

} // namespace detail

// f in sqrt(I), decided by triviality of I + (1 - t*f) in one extra variable.
inline bool radical_membership(const Polynomial& f, const Ideal& I,
                               const GroebnerLimits& limits = {}) {
    if (f.ring() != I.ring())
        throw RingMismatchError("radical membership: ring mismatch");
    Ring ext = I.ring().extended("t");
    std::size_t t = ext.arity() - 1;
    std::vector<Polynomial> gens = detail::lift_all(I.generators(), ext);
    gens.push_back(Polynomial::one(ext) -
                   Polynomial::variable(ext, t) * transport(f, ext));
    return buchberger(ext, gens, ext.default_order(), limits).is_trivial();
}

// I : f^inf via elimination of t from I + (t*f - 1).
inline Ideal saturation(const Ideal& I, const Polynomial& f, const GroebnerLimits& limits = {}) {
    if (f.is_zero())
        throw Error("saturation by the zero polynomial");
    if (f.ring() != I.ring())
        throw RingMismatchError("saturation: ring mismatch");
    Ring ext = I.ring().extended("t");
    std::size_t t = ext.arity() - 1;
    std::vector<Polynomial> gens = detail::lift_all(I.generators(), ext);
    gens.push_back(Polynomial::variable(ext, t) * transport(f, ext) - Polynomial::one(ext));
    std::vector<char> drop(ext.arity(), 0);
    drop[t] = 1;
    std::vector<Polynomial> kept = eliminate(ext, gens, drop, limits);
    return Ideal(I.ring(), detail::lift_all(kept, I.ring()));
}

// I ∩ J via elimination of t from t*I + (1-t)*J.
inline Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerLimits& limits = {}) {
    if (I.ring() != J.ring())
        throw RingMismatchError("intersect: ring mismatch");
    Ring ext = I.ring().extended("t");
    std::size_t ti = ext.arity() - 1;
    Polynomial t = Polynomial::variable(ext, ti);
    Polynomial one_minus_t = Polynomial::one(ext) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(t * transport(g, ext));
    for (const auto& g : J.generators())
        gens.push_back(one_minus_t * transport(g, ext));
    std::vector<char> drop(ext.arity(), 0);
    drop[ti] = 1;
    std::vector<Polynomial> kept = eliminate(ext, gens, drop, limits);
    return Ideal(I.ring(), detail::lift_all(kept, I.ring()));
}

// true iff I and J generate the same ideal (mutual reduction to zero).
inline bool ideal_equal(const Ideal& I, const Ideal& J, const GroebnerLimits& limits = {}) {
    if (I.ring() != J.ring())
        throw RingMismatchError("ideal_equal: ring mismatch");
    for (const auto& g : I.generators())
        if (!contains(J, g, limits))
            return false;
    for (const auto& g : J.generators())
        if (!contains(I, g, limits))
            return false;
    return true;
}

namespace detail {

// Largest variable subset independent modulo the leading-term ideal:
// no leading monomial is supported entirely inside the subset. Scans
// subset sizes from above, lexicographically earliest subset first.
// Returns nullopt for the trivial ideal.
inline std::optional<std::vector<std::size_t>>
max_independent_set(const GroebnerBasis& gb) {
    if (gb.is_trivial())
        return std::nullopt;
    std::size_t n = gb.ring.arity();
    std::vector<Monomial> lts;
    lts.reserve(gb.basis.size());
    for (const auto& p : gb.basis)
        lts.push_back(p.leading_monomial());

    auto independent = [&](const std::vector<std::size_t>& subset) {
        std::vector<char> in(n, 0);
        for (auto v : subset)
            in[v] = 1;
        for (const auto& m : lts) {
            bool inside = true;
            for (std::size_t v = 0; v < n && inside; ++v)
                if (m.exps[v] != 0 && !in[v])
                    inside = false;
            if (inside)
                return false;
        }
        return true;
    };

    for (std::size_t r = n + 1; r-- > 0;) {
        // r-subsets in lexicographic order.
        std::vector<std::size_t> subset(r);
        for (std::size_t i = 0; i < r; ++i)
            subset[i] = i;
        while (true) {
            if (independent(subset))
                return subset;
            // next combination
            std::size_t i = r;
            while (i-- > 0) {
                if (subset[i] + 1 <= n - (r - i)) {
                    ++subset[i];
                    for (std::size_t j = i + 1; j < r; ++j)
                        subset[j] = subset[j - 1] + 1;
                    break;
                }
                if (i == 0)
                    goto next_size;
            }
            if (r == 0)
                break;
        }
    next_size:;
    }
    return std::nullopt;
}

} // namespace detail

// Krull dimension of V(I); -1 for the trivial ideal.
inline int dimension(const Ideal& I, const GroebnerLimits& limits = {}) {
    const GroebnerBasis& gb = I.groebner_basis(MonomialOrder::grevlex(), limits);
    auto u = detail::max_independent_set(gb);
    return u ? static_cast<int>(u->size()) : -1;
}

namespace detail {

inline Ideal canonical_ideal(const Ideal& I, const GroebnerLimits& limits) {
    const GroebnerBasis& gb = I.groebner_basis(MonomialOrder::grevlex(), limits);
    return Ideal(I.ring(), gb.basis);
}

inline Ideal radical_impl(const Ideal& I, const GroebnerLimits& limits, std::size_t depth) {
    const Ring& ring = I.ring();
    if (depth > ring.arity() + 1)
        throw InternalError("radical: splitting recursion exceeded its depth bound");

    const GroebnerBasis& gb = I.groebner_basis(MonomialOrder::grevlex(), limits);
    if (gb.is_trivial())
        return Ideal(ring, {Polynomial::one(ring)});
    if (gb.is_zero_ideal())
        return Ideal(ring); // the zero ideal is radical

    auto u = max_independent_set(gb);
    std::vector<char> in_u(ring.arity(), 0);
    for (auto v : *u)
        in_u[v] = 1;

    // For every dependent variable, a squarefree polynomial vanishing on
    // V(I) that is univariate in it over the independent block, obtained
    // from the contraction to Q[u, v].
    std::vector<Polynomial> squarefree;
    Polynomial h = Polynomial::one(ring);
    for (std::size_t v = 0; v < ring.arity(); ++v) {
        if (in_u[v])
            continue;
        std::vector<char> drop(ring.arity(), 1);
        for (std::size_t w = 0; w < ring.arity(); ++w)
            if (in_u[w] || w == v)
                drop[w] = 0;
        std::vector<Polynomial> contraction = eliminate(ring, gb.basis, drop, limits);
        const Polynomial* best = nullptr;
        for (const auto& c : contraction) {
            if (c.degree_in(v) == 0)
                continue;
            if (!best || c.degree_in(v) < best->degree_in(v) ||
                (c.degree_in(v) == best->degree_in(v) &&
                 c.total_degree() < best->total_degree()))
                best = &c;
        }
        if (!best)
            throw InternalError("radical: dependent variable has no univariate relation");
        squarefree.push_back(squarefree_part_in(*best, v));
        h = h * leading_coefficient_in(*best, v);
    }
    h = make_primitive(h);

    std::vector<Polynomial> j_gens = gb.basis;
    j_gens.insert(j_gens.end(), squarefree.begin(), squarefree.end());
    Ideal J(ring, std::move(j_gens));
    if (h.is_constant())
        return canonical_ideal(J, limits);

    Ideal sat = saturation(J, h, limits);
    std::vector<Polynomial> branch_gens = gb.basis;
    branch_gens.push_back(h);
    Ideal branch = radical_impl(Ideal(ring, std::move(branch_gens)), limits, depth + 1);
    return canonical_ideal(intersect(sat, branch, limits), limits);
}

} // namespace detail

// Radical of I; the generators of the result are its reduced grevlex basis.
inline Ideal radical(const Ideal& I, const GroebnerLimits& limits = {}) {
    return detail::radical_impl(I, limits, 0);
}

// Smallest e <= max_e such that every product of e generators of
// radical(I), with repetition, lies in I; nullopt if none does.
inline std::optional<unsigned> noether_exponent(const Ideal& I, unsigned max_e,
                                                const GroebnerLimits& limits = {},
                                                std::size_t max_products = 200000) {
    if (max_e < 1)
        throw Error("noether exponent: max_e must be at least 1");
    Ideal rad = radical(I, limits);
    const std::vector<Polynomial>& rgens = rad.generators();
    if (rgens.empty())
        return 1; // radical of I is zero, so I = 0

    std::size_t budget = max_products;
    for (unsigned e = 1; e <= max_e; ++e) {
        // Multisets of size e over the radical generators.
        std::vector<std::size_t> pick(e, 0);
        bool all_in = true;
        while (true) {
            if (budget-- == 0)
                throw ResourceLimitError("noether exponent: product count ceiling exceeded");
            Polynomial prod = Polynomial::one(I.ring());
            for (auto idx : pick)
                prod = prod * rgens[idx];
            if (!contains(I, prod, limits)) {
                all_in = false;
                break;
            }
            // next multiset (non-decreasing index vectors)
            std::size_t i = e;
            while (i-- > 0) {
                if (pick[i] + 1 < rgens.size()) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < e; ++j)
                        pick[j] = pick[i];
                    break;
                }
                if (i == 0)
                    goto done_level;
            }
        }
    done_level:
        if (all_in)
            return e;
    }
    return std::nullopt;
}

} // namespace pfaff
