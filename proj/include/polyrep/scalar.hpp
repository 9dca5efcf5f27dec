#pragma once

#include <map>

#include "polyrep/poly.hpp"

namespace polyrep {

// Element of the fraction field of the parameter ring. Canonical form:
// gcd(num, den) is a unit and den has leading rational coefficient 1.
class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    Scalar(int c) : num_(Rational(c)), den_(Rational(1)) {}
    Scalar(const Poly& num) : num_(num), den_(Rational(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar param(ParamId p, int e = 1) { return Scalar(Poly::var(p, e)); }
    static Scalar param(const std::string& name, int e = 1);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const; // arbitrary canonical total order (for maps)

    Scalar derivative(ParamId p) const;
    bool contains(ParamId p) const { return num_.contains(p) || den_.contains(p); }

    std::string to_text() const;

private:
    void reduce();
    Poly num_, den_;
};

// Substitution of whole params by Scalars. Radicals of substituted bases are
// rebound automatically when a consistent square root exists (0, a squared
// monomial, or a param with its own radical); otherwise InconsistentRadical.
Scalar substitute(const Scalar& a, const std::map<ParamId, Scalar>& bindings);

enum class ScalarOp { Add, Sub, Mul, Div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

} // namespace polyrep
