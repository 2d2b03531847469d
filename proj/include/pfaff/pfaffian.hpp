#pragma once

// Pfaffian systems  dy_i/dx_j = f_ij,  g = 0  and the decision machinery:
// total derivatives, compatibility (Frobenius) generators, prolongation,
// reduction to the autonomous case, and the ascending chain of radical
// ideals whose stabilization decides integrability.

#include <optional>
#include <string>
#include <vector>

#include "pfaff/ideal.hpp"
#include "pfaff/parser.hpp"

namespace pfaff {

class PfaffianSystem {
  public:
    // f is an n x m matrix: f[i][j] is the right-hand side of dy_i/dx_j.
    // Autonomy is detected from the polynomials; autonomous systems live
    // in the ring of the unknowns only.
    PfaffianSystem(std::vector<std::string> x_vars, std::vector<std::string> y_vars,
                   std::vector<std::vector<Polynomial>> f, std::vector<Polynomial> g)
        : x_vars_(std::move(x_vars)), y_vars_(std::move(y_vars)),
          ring_(f.empty() || f[0].empty() ? Ring({"_"}) : f[0][0].ring()),
          f_(std::move(f)), g_(std::move(g)) {
        if (x_vars_.empty() || y_vars_.empty())
            throw Error("pfaffian system needs at least one independent variable "
                        "and one unknown");
        if (f_.size() != y_vars_.size())
            throw Error("pfaffian system: f must have one row per unknown");
        for (const auto& row : f_)
            if (row.size() != x_vars_.size())
                throw Error("pfaffian system: f must have one column per "
                            "independent variable");
        for (const auto& row : f_)
            for (const auto& p : row)
                if (p.ring() != ring_)
                    throw RingMismatchError("pfaffian system: mixed rings in f");
        for (const auto& p : g_)
            if (p.ring() != ring_)
                throw RingMismatchError("pfaffian system: mixed rings in g");
        for (const auto& y : y_vars_)
            if (!ring_.has_variable(y))
                throw Error("pfaffian system: unknown '" + y + "' missing from ring");
        autonomous_ = true;
        for (const auto& x : x_vars_) {
            auto idx = ring_.index_of(x);
            if (!idx)
                continue;
            for (const auto& row : f_)
                for (const auto& p : row)
                    if (p.degree_in(*idx) > 0)
                        autonomous_ = false;
            for (const auto& p : g_)
                if (p.degree_in(*idx) > 0)
                    autonomous_ = false;
        }
    }

    // Builds the ring from the variable names and parses the entries.
    // Autonomous systems are restricted to the ring of their unknowns.
    static PfaffianSystem parse(std::vector<std::string> x_vars, std::vector<std::string> y_vars,
                                const std::vector<std::vector<std::string>>& f,
                                const std::vector<std::string>& g) {
        std::vector<std::string> all = x_vars;
        all.insert(all.end(), y_vars.begin(), y_vars.end());
        Ring full(all);
        std::vector<std::vector<Polynomial>> fp;
        for (const auto& row : f) {
            std::vector<Polynomial> r;
            for (const auto& s : row)
                r.push_back(parse_polynomial(s, full));
            fp.push_back(std::move(r));
        }
        std::vector<Polynomial> gp;
        for (const auto& s : g)
            gp.push_back(parse_polynomial(s, full));

        bool uses_x = false;
        for (std::size_t j = 0; j < x_vars.size(); ++j) {
            auto idx = full.index_of(x_vars[j]);
            for (const auto& row : fp)
                for (const auto& p : row)
                    if (p.degree_in(*idx) > 0)
                        uses_x = true;
            for (const auto& p : gp)
                if (p.degree_in(*idx) > 0)
                    uses_x = true;
        }
        if (uses_x)
            return PfaffianSystem(std::move(x_vars), std::move(y_vars), std::move(fp),
                                  std::move(gp));
        Ring yring(y_vars);
        std::vector<std::vector<Polynomial>> fy;
        for (auto& row : fp) {
            std::vector<Polynomial> r;
            for (auto& p : row)
                r.push_back(transport(p, yring));
            fy.push_back(std::move(r));
        }
        std::vector<Polynomial> gy;
        for (auto& p : gp)
            gy.push_back(transport(p, yring));
        return PfaffianSystem(std::move(x_vars), std::move(y_vars), std::move(fy),
                              std::move(gy));
    }

    const std::vector<std::string>& x_vars() const { return x_vars_; }
    const std::vector<std::string>& y_vars() const { return y_vars_; }
    std::size_t independent_count() const { return x_vars_.size(); } // m
    std::size_t unknown_count() const { return y_vars_.size(); }     // n
    const Ring& ring() const { return ring_; }
    const std::vector<std::vector<Polynomial>>& f() const { return f_; }
    const Polynomial& f(std::size_t i, std::size_t j) const { return f_.at(i).at(j); }
    const std::vector<Polynomial>& constraints() const { return g_; }
    bool autonomous() const { return autonomous_; }

    bool operator==(const PfaffianSystem& o) const {
        return x_vars_ == o.x_vars_ && y_vars_ == o.y_vars_ && ring_ == o.ring_ &&
               f_ == o.f_ && g_ == o.g_;
    }

  private:
    std::vector<std::string> x_vars_, y_vars_;
    Ring ring_;
    std::vector<std::vector<Polynomial>> f_;
    std::vector<Polynomial> g_;
    bool autonomous_ = false;
};

// j-th total derivative induced by the system:
//   D_j(h) = dh/dx_j + sum_i dh/dy_i * f_ij
// (the dh/dx_j term vanishes for autonomous systems). j is 0-based.
inline Polynomial total_derivative(const Polynomial& h, std::size_t j,
                                   const PfaffianSystem& S) {
    if (j >= S.independent_count())
        throw Error("total derivative: direction index out of range");
    if (h.ring() != S.ring())
        throw RingMismatchError("total derivative: polynomial from different ring");
    Polynomial acc = Polynomial::zero(S.ring());
    if (!S.autonomous()) {
        auto xj = S.ring().index_of(S.x_vars()[j]);
        if (xj)
            acc = acc + h.partial(*xj);
    }
    for (std::size_t i = 0; i < S.unknown_count(); ++i) {
        auto yi = S.ring().index_of(S.y_vars()[i]);
        acc = acc + h.partial(*yi) * S.f(i, j);
    }
    return acc;
}

// The compatibility polynomials D_j(f_ik) - D_k(f_ij), one per unknown and
// unordered direction pair j < k.
inline std::vector<Polynomial> frobenius_generators(const PfaffianSystem& S) {
    std::vector<Polynomial> out;
    std::size_t m = S.independent_count();
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k)
            for (std::size_t i = 0; i < S.unknown_count(); ++i)
                out.push_back(total_derivative(S.f(i, k), j, S) -
                              total_derivative(S.f(i, j), k, S));
    return out;
}

// Classical (constraint-free) complete integrability: all compatibility
// polynomials vanish identically.
inline bool complete_integrability(const PfaffianSystem& S) {
    if (!S.constraints().empty())
        throw Error("complete integrability is only defined for systems "
                    "without algebraic constraints");
    for (const auto& p : frobenius_generators(S))
        if (!p.is_zero())
            return false;
    return true;
}

// Generators of the prolongation ideal: the input generators followed by
// all their total derivatives. The list is returned as built; duplicates
// are left for the ideal layer to absorb.
inline std::vector<Polynomial> prolong(const std::vector<Polynomial>& gens,
                                       const PfaffianSystem& S) {
    if (!S.autonomous())
        throw Error("prolongation is defined for autonomous systems; "
                    "autonomize first");
    std::vector<Polynomial> out = gens;
    for (const auto& g : gens)
        for (std::size_t j = 0; j < S.independent_count(); ++j)
            out.push_back(total_derivative(g, j, S));
    return out;
}

// Equivalent autonomous system: each independent variable x_l becomes a
// fresh unknown w_l with dw_l/dx_j equal to the identity pattern.
inline PfaffianSystem autonomize(const PfaffianSystem& S) {
    if (S.autonomous())
        return S;
    std::size_t n = S.unknown_count(), m = S.independent_count();

    std::vector<std::string> w_names;
    for (std::size_t l = 0; l < m; ++l) {
        std::string cand = "w" + std::to_string(l + 1);
        auto taken = [&](const std::string& s) {
            for (const auto& v : S.x_vars())
                if (v == s)
                    return true;
            for (const auto& v : S.y_vars())
                if (v == s)
                    return true;
            for (const auto& v : w_names)
                if (v == s)
                    return true;
            return false;
        };
        while (taken(cand))
            cand += "_";
        w_names.push_back(cand);
    }

    std::vector<std::string> new_y = S.y_vars();
    new_y.insert(new_y.end(), w_names.begin(), w_names.end());
    Ring new_ring(new_y);

    // Old ring is Q[x, y]: x_l maps to w_l, y_i keeps its name.
    std::vector<std::size_t> rename(S.ring().arity());
    for (std::size_t v = 0; v < S.ring().arity(); ++v) {
        const std::string& name = S.ring().variable(v);
        bool mapped = false;
        for (std::size_t l = 0; l < m; ++l)
            if (name == S.x_vars()[l]) {
                rename[v] = *new_ring.index_of(w_names[l]);
                mapped = true;
            }
        if (!mapped)
            rename[v] = *new_ring.index_of(name);
    }

    std::vector<std::vector<Polynomial>> new_f;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < m; ++j)
            row.push_back(transport_renamed(S.f(i, j), new_ring, rename));
        new_f.push_back(std::move(row));
    }
    for (std::size_t l = 0; l < m; ++l) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < m; ++j)
            row.push_back(l == j ? Polynomial::one(new_ring) : Polynomial::zero(new_ring));
        new_f.push_back(std::move(row));
    }
    std::vector<Polynomial> new_g;
    for (const auto& p : S.constraints())
        new_g.push_back(transport_renamed(p, new_ring, rename));

    return PfaffianSystem(S.x_vars(), std::move(new_y), std::move(new_f), std::move(new_g));
}

struct ChainStep {
    int p = 0;
    std::vector<Polynomial> generators; // reduced grevlex basis
    int dim = 0;
    bool trivial = false;
};

struct ChainReport {
    std::vector<ChainStep> steps;
    int p_infinity = 0;
    bool integrable = false;
    int rho = 0; // dim of the stable variety; -1 when inconsistent
    bool autonomized = false;
    std::size_t n_aut = 0; // unknown count of the system the chain ran on
};

struct ChainLimits {
    GroebnerLimits gb;
    std::optional<std::size_t> max_steps; // overrides the n_aut + 1 bound
};

// Builds the ascending chain of radical ideals obtained by alternating
// prolongation and radical, starting from the constraints and folding the
// compatibility conditions into the first step. Stops at the first
// repetition or at the unit ideal; the stop index never legitimately
// exceeds n_aut + 1.
inline ChainReport build_chain(const PfaffianSystem& S, const ChainLimits& limits = {}) {
    PfaffianSystem A = S.autonomous() ? S : autonomize(S);
    const Ring& ring = A.ring();
    std::size_t n_aut = A.unknown_count();
    std::size_t bound = n_aut + 1;
    std::size_t max_steps = limits.max_steps.value_or(bound);

    ChainReport report;
    report.autonomized = !S.autonomous();
    report.n_aut = n_aut;

    auto record = [&](int p, const Ideal& J) {
        ChainStep step;
        step.p = p;
        step.generators = J.groebner_basis(limits.gb).basis;
        step.trivial = J.groebner_basis(limits.gb).is_trivial();
        step.dim = step.trivial ? -1 : dimension(J, limits.gb);
        report.steps.push_back(step);
        return step;
    };

    auto at_step = [](std::size_t p, auto&& fn) {
        try {
            return fn();
        } catch (const ResourceLimitError& e) {
            throw ResourceLimitError(std::string(e.what()) + " (chain step " +
                                     std::to_string(p) + ")");
        }
    };

    Ideal current =
        at_step(0, [&] { return radical(Ideal(ring, A.constraints()), limits.gb); });
    ChainStep step0 = record(0, current);
    if (step0.trivial) {
        report.p_infinity = 0;
        report.integrable = false;
        report.rho = -1;
        return report;
    }

    std::vector<Polynomial> frob = frobenius_generators(A);
    bool frob_zero = true;
    for (const auto& p : frob)
        if (!p.is_zero())
            frob_zero = false;
    if (A.constraints().empty() && frob_zero) {
        // Chain is constantly the zero ideal: classical Frobenius case.
        report.p_infinity = 0;
        report.integrable = true;
        report.rho = static_cast<int>(n_aut);
        return report;
    }

    for (std::size_t p = 1; p <= max_steps + 1; ++p) {
        std::vector<Polynomial> gens = prolong(current.generators(), A);
        if (p == 1)
            gens.insert(gens.end(), frob.begin(), frob.end());
        Ideal next = at_step(
            p, [&] { return radical(Ideal(ring, std::move(gens)), limits.gb); });
        ChainStep step = record(static_cast<int>(p), next);

        if (step.trivial) {
            if (p > bound)
                throw InternalError("chain reached the unit ideal beyond its bound");
            report.p_infinity = static_cast<int>(p);
            report.integrable = false;
            report.rho = -1;
            return report;
        }
        // The chain ascends, so equality of the reduced bases is the
        // stabilization test.
        if (step.generators == report.steps[p - 1].generators) {
            if (p - 1 > bound)
                throw InternalError("chain stabilized beyond its bound");
            report.p_infinity = static_cast<int>(p - 1);
            report.integrable = true;
            report.rho = step.dim;
            return report;
        }
        current = std::move(next);
    }
    if (limits.max_steps)
        throw ResourceLimitError("chain step limit exceeded at step " +
                                 std::to_string(max_steps + 1));
    throw InternalError("chain failed to stabilize within its bound");
}

struct Decision {
    bool integrable = false;
    int rho = 0;
    ChainReport report;
};

inline Decision decide(const PfaffianSystem& S, const ChainLimits& limits = {}) {
    ChainReport report = build_chain(S, limits);
    return Decision{report.integrable, report.rho, std::move(report)};
}

// Dimension of the stable variety: the maximal dimension of integral
// submanifolds; n for completely integrable systems, -1 for inconsistent
// ones.
inline int integral_dimension(const PfaffianSystem& S, const ChainLimits& limits = {}) {
    return build_chain(S, limits).rho;
}

} // namespace pfaff
