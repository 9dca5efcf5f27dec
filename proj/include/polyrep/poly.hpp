#pragma once

#include <map>
#include <optional>
#include <vector>

#include "polyrep/params.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

// Sparse exponent vector, sorted by ParamId. Radical params are kept at power <= 1;
// squares are folded into the base param (sr^2 -> r).
struct Monomial {
    std::vector<std::pair<ParamId, int>> exps;

    Monomial() = default;
    static Monomial one() { return {}; }
    static Monomial var(ParamId p, int e = 1);

    bool is_one() const { return exps.empty(); }
    int degree() const;
    int exponent(ParamId p) const;
    bool contains(ParamId p) const { return exponent(p) != 0; }

    // Fold radical squares into base params; sorts entries, drops zeros.
    void normalize();
    // Substitute base -> radical^2 for every param carrying a radical (the
    // relation-free isomorphic ring used for gcd / exact division).
    Monomial radical_expanded() const;

    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator<(const Monomial& o) const; // graded, then lex (smallest id most significant)
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly var(ParamId p, int e = 1);
    static Poly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; zero polynomial yields 0.
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // Leading term under the monomial order (largest monomial); poly must be nonzero.
    const std::pair<const Monomial, Rational>& leading() const;

    int degree_in(ParamId p) const;
    bool contains(ParamId p) const;
    std::vector<ParamId> params() const;

    Poly derivative(ParamId p) const;
    // Dense coefficient list in powers of p (index = exponent).
    std::vector<Poly> coeffs_in(ParamId p) const;
    static Poly from_coeffs_in(ParamId p, const std::vector<Poly>& cs);

    std::string to_text() const;

private:
    TermMap terms_; // no zero coefficients stored
};

// All of these operate in the radical-expanded isomorphic ring and reduce back,
// so results respect the square relations exactly.
Poly poly_gcd(const Poly& a, const Poly& b);
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

} // namespace polyrep
