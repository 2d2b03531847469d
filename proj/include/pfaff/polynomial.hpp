#pragma once

// Sparse multivariate polynomials over the rationals in canonical form:
// no zero coefficients, terms strictly decreasing in the active monomial
// order. Values are immutable; every operation returns a fresh polynomial.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/monomial.hpp"
#include "pfaff/rational.hpp"
#include "pfaff/ring.hpp"

namespace pfaff {

struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term& o) const = default;
};

class Polynomial {
  public:
    explicit Polynomial(Ring ring)
        : ring_(std::move(ring)), order_(ring_.default_order()) {}

    Polynomial(Ring ring, MonomialOrder order)
        : ring_(std::move(ring)), order_(std::move(order)) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }

    static Polynomial constant(const Ring& ring, Rational value) {
        Polynomial p(ring);
        if (value != 0)
            p.terms_.push_back({Monomial(ring.arity()), std::move(value)});
        return p;
    }

    static Polynomial one(const Ring& ring) { return constant(ring, 1); }

    static Polynomial variable(const Ring& ring, std::size_t index) {
        if (index >= ring.arity())
            throw Error("variable index out of range");
        Polynomial p(ring);
        Monomial m(ring.arity());
        m.exps[index] = 1;
        p.terms_.push_back({std::move(m), Rational(1)});
        return p;
    }

    static Polynomial variable(const Ring& ring, std::string_view name) {
        auto i = ring.index_of(name);
        if (!i)
            throw Error("unknown variable '" + std::string(name) + "'");
        return variable(ring, *i);
    }

    // Terms in any order, possibly with repeats and zeros; canonicalizes.
    static Polynomial from_terms(const Ring& ring, const MonomialOrder& order,
                                 std::vector<Term> terms) {
        Polynomial p(ring, order);
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const Ring& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_)
            d = std::max(d, t.mono.degree());
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_)
            d = std::max(d, t.mono.exps[var]);
        return d;
    }

    const Term& leading_term() const {
        if (terms_.empty())
            throw Error("zero polynomial has no leading term");
        return terms_[0];
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    // Same polynomial re-sorted under a different order.
    Polynomial with_order(const MonomialOrder& order) const {
        if (order == order_)
            return *this;
        Polynomial p(ring_, order);
        p.terms_ = terms_;
        std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
            return order.compare(a.mono, b.mono) > 0;
        });
        return p;
    }

    Polynomial operator-() const {
        Polynomial p(ring_, order_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            p.terms_.push_back({t.mono, -t.coeff});
        return p;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(ring_, order_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Rational s = terms_[i].coeff + o.terms_[j].coeff;
                if (s != 0)
                    r.terms_.push_back({terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i)
            r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j)
            r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(ring_, order_);
        if (is_zero() || o.is_zero())
            return r;
        r.terms_.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                r.terms_.push_back(
                    {monomial_mul(a.mono, b.mono, ring_.max_exponent()), a.coeff * b.coeff});
        r.canonicalize();
        return r;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial r(ring_, order_);
        if (c == 0)
            return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = one(ring_).with_order(order_);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u)
                r = r * base;
            e >>= 1u;
            if (e)
                base = base * base;
        }
        return r;
    }

    // Formal partial derivative; term order is preserved.
    Polynomial partial(std::size_t var) const {
        if (var >= ring_.arity())
            throw Error("unknown variable index in partial derivative");
        Polynomial r(ring_, order_);
        for (const auto& t : terms_) {
            std::uint32_t e = t.mono.exps[var];
            if (e == 0)
                continue;
            Monomial m = t.mono;
            m.exps[var] = e - 1;
            r.terms_.push_back({std::move(m), t.coeff * e});
        }
        return r;
    }

    Polynomial partial(std::string_view name) const {
        auto i = ring_.index_of(name);
        if (!i)
            throw Error("unknown variable '" + std::string(name) + "'");
        return partial(*i);
    }

    Rational eval(std::span<const Rational> point) const {
        if (point.size() != ring_.arity())
            throw Error("evaluation point arity mismatch");
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i) {
                std::uint32_t e = t.mono.exps[i];
                if (e == 0)
                    continue;
                Rational pw;
                mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(point[i].get_mpq_t()), e);
                mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(point[i].get_mpq_t()), e);
                v *= pw;
            }
            acc += v;
        }
        return acc;
    }

    // Mathematical equality; orders are aligned first if they differ.
    bool operator==(const Polynomial& o) const {
        if (ring_ != o.ring_)
            return false;
        if (order_ == o.order_)
            return terms_ == o.terms_;
        return terms_ == o.with_order(order_).terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c < 0) {
                    out << "-";
                    c = -c;
                }
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0)
                    c = -c;
            }
            first = false;
            bool printed_coeff = false;
            if (c != 1 || t.mono.is_one()) {
                out << c.get_str();
                printed_coeff = true;
            }
            bool any_var = false;
            for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
                std::uint32_t e = t.mono.exps[i];
                if (e == 0)
                    continue;
                if (printed_coeff || any_var)
                    out << "*";
                out << ring_.variable(i);
                if (e > 1)
                    out << "^" << e;
                any_var = true;
            }
        }
        return out.str();
    }

  private:
    void check_compatible(const Polynomial& o) const {
        if (ring_ != o.ring_)
            throw RingMismatchError("polynomial operands from different rings");
        if (order_ != o.order_)
            throw RingMismatchError("polynomial operands carry different term orders; "
                                    "convert explicitly with with_order()");
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return order_.compare(a.mono, b.mono) > 0;
        });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
        terms_ = std::move(merged);
    }

    Ring ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Re-expresses p in `target`, matching variables by name. Every variable
// that actually occurs in p must exist in the target ring.
inline Polynomial transport(const Polynomial& p, const Ring& target) {
    const Ring& src = p.ring();
    std::vector<std::optional<std::size_t>> map(src.arity());
    for (std::size_t i = 0; i < src.arity(); ++i)
        map[i] = target.index_of(src.variable(i));
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m(target.arity());
        for (std::size_t i = 0; i < src.arity(); ++i) {
            if (t.mono.exps[i] == 0)
                continue;
            if (!map[i])
                throw Error("variable '" + src.variable(i) + "' not present in target ring");
            m.exps[*map[i]] += t.mono.exps[i];
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, target.default_order(), std::move(terms));
}

// transport() with explicit renaming applied first: source variable i
// becomes target variable rename[i].
inline Polynomial transport_renamed(const Polynomial& p, const Ring& target,
                                    const std::vector<std::size_t>& rename) {
    const Ring& src = p.ring();
    if (rename.size() != src.arity())
        throw Error("rename map arity mismatch");
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m(target.arity());
        for (std::size_t i = 0; i < src.arity(); ++i) {
            if (t.mono.exps[i] == 0)
                continue;
            m.exps.at(rename[i]) += t.mono.exps[i];
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, target.default_order(), std::move(terms));
}

// Divides out the rational content and normalizes the leading coefficient
// to be positive: the canonical integer-coefficient representative of the
// line through p.
inline Polynomial make_primitive(const Polynomial& p) {
    if (p.is_zero())
        return p;
    Rational content(0);
    for (const auto& t : p.terms())
        content = rational_gcd(content, t.coeff);
    if (p.leading_coefficient() < 0)
        content = -content;
    return p * (Rational(1) / content);
}

// Divides by the leading coefficient.
inline Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero())
        return p;
    return p * (Rational(1) / p.leading_coefficient());
}

} // namespace pfaff
