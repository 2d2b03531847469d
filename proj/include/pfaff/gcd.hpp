#pragma once

// Multivariate gcd over Q by primitive pseudo-remainder sequences, plus
// the derived pieces the radical computation needs: contents, exact
// division, and squarefree parts of polynomials viewed as univariate in
// one variable over the remaining ones.

#include <vector>

#include "pfaff/polynomial.hpp"

namespace pfaff {

// p as a univariate polynomial in `var`: result[k] is the coefficient of
// var^k, a polynomial free of `var`.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
    std::vector<Polynomial> coeffs(p.degree_in(var) + 1, Polynomial::zero(p.ring()));
    std::vector<std::vector<Term>> buckets(coeffs.size());
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        std::uint32_t e = m.exps[var];
        m.exps[var] = 0;
        buckets[e].push_back({std::move(m), t.coeff});
    }
    for (std::size_t k = 0; k < buckets.size(); ++k)
        coeffs[k] = Polynomial::from_terms(p.ring(), p.ring().default_order(),
                                           std::move(buckets[k]));
    return coeffs;
}

inline Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
    auto coeffs = coefficients_in(p, var);
    return coeffs.back();
}

inline Polynomial from_coefficients_in(const std::vector<Polynomial>& coeffs, std::size_t var,
                                       const Ring& ring) {
    Polynomial acc = Polynomial::zero(ring);
    Polynomial v = Polynomial::variable(ring, var);
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * v + coeffs[k];
    return acc;
}

// Exact division p / d; throws InternalError if d does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero())
        throw Error("division by zero polynomial");
    const MonomialOrder order = MonomialOrder::grevlex();
    Polynomial h = p.with_order(order);
    Polynomial dd = d.with_order(order);
    std::vector<Term> quotient;
    while (!h.is_zero()) {
        if (!monomial_divides(dd.leading_monomial(), h.leading_monomial()))
            throw InternalError("divide_exact: not divisible");
        Term q{monomial_div(h.leading_monomial(), dd.leading_monomial()),
               h.leading_coefficient() / dd.leading_coefficient()};
        h = h - Polynomial::from_terms(p.ring(), order, {q}) * dd;
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(p.ring(), p.ring().default_order(), std::move(quotient));
}

namespace detail {

// Pseudo-remainder of a by b with respect to var: lc(b)^k * a reduced
// until its var-degree drops below deg_var(b).
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    std::uint32_t db = b.degree_in(var);
    Polynomial lc_b = leading_coefficient_in(b, var);
    Polynomial r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        std::uint32_t dr = r.degree_in(var);
        Polynomial lc_r = leading_coefficient_in(r, var);
        Polynomial shift = Polynomial::variable(a.ring(), var).pow(dr - db);
        r = lc_b * r - lc_r * shift * b;
    }
    return r;
}

} // namespace detail

inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as univariate in var.
inline Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial c = Polynomial::zero(p.ring());
    for (const auto& coeff : coefficients_in(p, var)) {
        if (coeff.is_zero())
            continue;
        c = c.is_zero() ? make_primitive(coeff) : polynomial_gcd(c, coeff);
        if (c.is_one())
            break;
    }
    return c;
}

inline Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
    if (p.is_zero())
        return p;
    return make_primitive(divide_exact(p, content_in(p, var)));
}

// gcd over Q[x1..xn], normalized primitive with positive leading
// coefficient; gcd of two nonzero constants is 1.
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring())
        throw RingMismatchError("gcd: ring mismatch");
    if (a.is_zero())
        return make_primitive(b);
    if (b.is_zero())
        return make_primitive(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::one(a.ring());

    // Main variable: highest index occurring in either operand.
    std::size_t var = 0;
    for (std::size_t v = a.ring().arity(); v-- > 0;) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
            var = v;
            break;
        }
    }

    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial cg = polynomial_gcd(ca, cb);
    Polynomial A = make_primitive(divide_exact(a, ca));
    Polynomial B = make_primitive(divide_exact(b, cb));
    if (A.degree_in(var) < B.degree_in(var))
        std::swap(A, B);

    while (true) {
        Polynomial r = detail::pseudo_remainder(A, B, var);
        if (r.is_zero())
            return make_primitive(cg * primitive_part_in(B, var));
        if (r.degree_in(var) == 0)
            return make_primitive(cg);
        A = B;
        B = primitive_part_in(r, var);
    }
}

// Squarefree part of p as a univariate polynomial in var over the field
// of fractions of the remaining variables: primitive, same var-roots as p,
// each with multiplicity one. Coefficient factors free of var are dropped.
inline Polynomial squarefree_part_in(const Polynomial& p, std::size_t var) {
    if (p.is_zero() || p.degree_in(var) == 0)
        throw Error("squarefree part needs positive degree in the chosen variable");
    Polynomial P = primitive_part_in(p, var);
    Polynomial G = polynomial_gcd(P, P.partial(var));
    if (G.is_constant())
        return P;
    return make_primitive(divide_exact(P, G));
}

} // namespace pfaff
