#pragma once

// Truncated jet rings: polynomial rings in the formal derivative variables
// y_{i,alpha} with |alpha| bounded, the derivation that shifts alpha, the
// differentiated generators of an autonomous system, and the search for
// the least truncation order at which 1 enters the ideal.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/ideal.hpp"
#include "pfaff/pfaffian.hpp"

namespace pfaff {

struct JetIndex {
    std::size_t i;               // unknown index, 0-based
    std::vector<unsigned> alpha; // m-vector of derivative counts

    unsigned order() const {
        unsigned s = 0;
        for (auto a : alpha)
            s += a;
        return s;
    }

    bool operator<(const JetIndex& o) const {
        if (order() != o.order())
            return order() < o.order();
        if (alpha != o.alpha)
            return alpha < o.alpha;
        return i < o.i;
    }
    bool operator==(const JetIndex& o) const = default;
};

// Ring of all jets y_{i,alpha} with |alpha| <= truncation. The order-zero
// jet keeps the base unknown's name, so base polynomials transport in by
// name. Higher jets are named y_a1_a2.. from the base name. Ring variables
// are listed highest jet first, which makes the default grevlex order (and
// lex) rank low-order jets smallest.
class JetRing {
  public:
    JetRing(std::vector<std::string> base_names, std::size_t m, unsigned truncation)
        : base_names_(std::move(base_names)), m_(m), truncation_(truncation) {
        std::vector<JetIndex> jets;
        std::vector<unsigned> alpha(m_, 0);
        collect(jets, alpha, 0, truncation_);
        std::sort(jets.begin(), jets.end());
        std::reverse(jets.begin(), jets.end()); // highest first
        std::vector<std::string> names;
        names.reserve(jets.size());
        for (const auto& j : jets)
            names.push_back(jet_name(j));
        ring_.emplace(std::move(names));
        jets_ = std::move(jets);
        for (std::size_t v = 0; v < jets_.size(); ++v)
            index_[jets_[v]] = v;
    }

    const Ring& ring() const { return *ring_; }
    std::size_t unknown_count() const { return base_names_.size(); }
    std::size_t direction_count() const { return m_; }
    unsigned truncation() const { return truncation_; }
    const std::vector<JetIndex>& jets() const { return jets_; }
    const JetIndex& jet_at(std::size_t var) const { return jets_.at(var); }

    std::size_t variable_of(const JetIndex& j) const {
        auto it = index_.find(j);
        if (it == index_.end())
            throw Error("jet variable outside this truncation");
        return it->second;
    }

    std::size_t variable_of(std::size_t i, const std::vector<unsigned>& alpha) const {
        return variable_of(JetIndex{i, alpha});
    }

  private:
    std::string jet_name(const JetIndex& j) const {
        if (j.order() == 0)
            return base_names_[j.i];
        std::string s = base_names_[j.i];
        for (auto a : j.alpha)
            s += "_" + std::to_string(a);
        return s;
    }

    void collect(std::vector<JetIndex>& out, std::vector<unsigned>& alpha, std::size_t pos,
                 unsigned left) {
        if (pos == m_) {
            for (std::size_t i = 0; i < base_names_.size(); ++i)
                out.push_back(JetIndex{i, alpha});
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            alpha[pos] = a;
            collect(out, alpha, pos + 1, left - a);
        }
        alpha[pos] = 0;
    }

    std::vector<std::string> base_names_;
    std::size_t m_;
    unsigned truncation_;
    std::optional<Ring> ring_;
    std::vector<JetIndex> jets_;
    std::map<JetIndex, std::size_t> index_;
};

// The derivation d/dx_j on jets:  sum over variables of dh/dy_{i,alpha} *
// y_{i,alpha+e_j}. `from` and `to` may be the same ring as long as every
// jet occurring in h has order below the target truncation.
inline Polynomial jet_derivative(const Polynomial& h, std::size_t j, const JetRing& from,
                                 const JetRing& to) {
    if (j >= from.direction_count())
        throw Error("jet derivative: direction index out of range");
    if (h.ring() != from.ring())
        throw RingMismatchError("jet derivative: polynomial from different ring");
    Polynomial acc = Polynomial::zero(to.ring());
    for (std::size_t v = 0; v < from.ring().arity(); ++v) {
        Polynomial dh = h.partial(v);
        if (dh.is_zero())
            continue;
        JetIndex shifted = from.jet_at(v);
        shifted.alpha[j] += 1;
        Polynomial lifted = transport(dh, to.ring());
        acc = acc + lifted * Polynomial::variable(to.ring(), to.variable_of(shifted));
    }
    return acc;
}

// All derivatives up to total order k of the defining generators
//   y_{i,e_j} - f_ij   and   g,
// expressed in `jr`, which must truncate at k+1 or higher. Derivatives are
// built once per multi-index by walking them in graded order.
inline std::vector<Polynomial> truncated_system(const PfaffianSystem& S, unsigned k,
                                                const JetRing& jr) {
    if (!S.autonomous())
        throw Error("jet truncation is defined for autonomous systems");
    if (jr.truncation() < k + 1)
        throw Error("jet ring truncation too small for this order");
    std::size_t n = S.unknown_count(), m = S.independent_count();

    std::vector<Polynomial> base;
    std::vector<unsigned> zero(m, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<unsigned> ej(m, 0);
            ej[j] = 1;
            base.push_back(Polynomial::variable(jr.ring(), jr.variable_of(i, ej)) -
                           transport(S.f(i, j), jr.ring()));
        }
    for (const auto& g : S.constraints())
        base.push_back(transport(g, jr.ring()));

    // per-generator map: multi-index alpha -> derivative d^alpha(gen)
    std::vector<Polynomial> out = base;
    std::vector<std::map<std::vector<unsigned>, Polynomial>> memo(base.size());
    for (std::size_t b = 0; b < base.size(); ++b)
        memo[b].emplace(zero, base[b]);

    std::vector<std::vector<unsigned>> level = {zero};
    for (unsigned t = 1; t <= k; ++t) {
        std::vector<std::vector<unsigned>> next_level;
        for (const auto& alpha : level)
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<unsigned> beta = alpha;
                beta[j] += 1;
                bool fresh = false;
                for (std::size_t b = 0; b < base.size(); ++b) {
                    if (memo[b].count(beta))
                        continue;
                    const Polynomial& prev = memo[b].at(alpha);
                    Polynomial d = jet_derivative(prev, j, jr, jr);
                    out.push_back(d);
                    memo[b].emplace(beta, std::move(d));
                    fresh = true;
                }
                if (fresh)
                    next_level.push_back(std::move(beta));
            }
        level = std::move(next_level);
    }
    return out;
}

// Least k <= k_max with 1 in the ideal of the order-k truncated system;
// nullopt when no such certificate exists within the cap. Integrable
// systems never produce one. Triviality is order-independent, so the
// basis runs under lex, where the differentiated generators stay nearly
// triangular.
inline std::optional<unsigned> minimal_order(const PfaffianSystem& S, unsigned k_max,
                                             const GroebnerLimits& limits = {}) {
    if (!S.autonomous())
        throw Error("minimal differentiation order is defined for autonomous systems");
    for (unsigned k = 0; k <= k_max; ++k) {
        JetRing jr(S.y_vars(), S.independent_count(), k + 1);
        std::vector<Polynomial> gens = truncated_system(S, k, jr);
        GroebnerBasis gb = buchberger(jr.ring(), gens, MonomialOrder::lex(), limits);
        if (gb.is_trivial())
            return k;
    }
    return std::nullopt;
}

} // namespace pfaff
