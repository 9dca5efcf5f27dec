#include "polyrep/scalar.hpp"

#include "polyrep/errors.hpp"

namespace polyrep {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

Scalar Scalar::param(const std::string& name, int e) {
    auto id = ParamTable::instance().find(name);
    if (!id) throw Error("unknown param '" + name + "'");
    return Scalar(Poly::var(*id, e));
}

bool Scalar::is_one() const {
    return den_ == Poly(Rational(1)) && num_ == Poly(Rational(1));
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw Error("scalar is not a plain rational: " + to_text());
    return num_.constant_value() / den_.constant_value();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            auto qn = poly_divide_exact(num_, g);
            auto qd = poly_divide_exact(den_, g);
            if (qn && qd) {
                num_ = *qn;
                den_ = *qd;
            }
        }
    }
    // normalize: leading rational coefficient of den becomes 1
    Rational lc = den_.leading().second;
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
}

Scalar Scalar::derivative(ParamId p) const {
    if (!den_.contains(p)) return Scalar(num_.derivative(p), den_);
    Poly n = num_.derivative(p) * den_ - num_ * den_.derivative(p);
    return Scalar(n, den_ * den_);
}

std::string Scalar::to_text() const {
    if (den_ == Poly(Rational(1))) {
        if (num_.term_count() > 0) return num_.to_text();
        return "0";
    }
    return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

namespace {

// square root of a scalar that is a perfect square in an obvious way: 0, a
// squared rational times even-power monomial, or base params with radicals.
std::optional<Scalar> try_sqrt(const Scalar& v) {
    if (v.is_zero()) return Scalar(0);
    if (!v.den().is_constant()) return std::nullopt;
    if (v.num().term_count() != 1) return std::nullopt;
    auto& [m, c] = *v.num().terms().begin();
    Rational cv = c / v.den().constant_value();
    Rational rc;
    if (!rational_sqrt(cv, rc)) return std::nullopt;
    auto& table = ParamTable::instance();
    Poly mono(rc);
    for (auto& [p, e] : m.exps) {
        if (e % 2 == 0) {
            mono = mono * Poly::var(p, e / 2);
        } else if (auto rad = table.radical_of(p)) {
            mono = mono * Poly::var(p, e / 2) * Poly::var(*rad, 1);
        } else {
            return std::nullopt;
        }
    }
    return Scalar(mono);
}

Scalar substitute_scalar(const Scalar& a, const std::map<ParamId, Scalar>& b) {
    Scalar num(0), den(0);
    {
        Scalar acc(0);
        for (auto& [m, c] : a.num().terms()) {
            Scalar t{Poly(c)};
            for (auto& [p, e] : m.exps) {
                auto it = b.find(p);
                Scalar base = (it != b.end()) ? it->second : Scalar::param(p);
                for (int k = 0; k < e; ++k) t *= base;
            }
            acc += t;
        }
        num = acc;
    }
    {
        Scalar acc(0);
        for (auto& [m, c] : a.den().terms()) {
            Scalar t{Poly(c)};
            for (auto& [p, e] : m.exps) {
                auto it = b.find(p);
                Scalar base = (it != b.end()) ? it->second : Scalar::param(p);
                for (int k = 0; k < e; ++k) t *= base;
            }
            acc += t;
        }
        den = acc;
    }
    if (den.is_zero()) throw DivisionByZero();
    return num / den;
}

} // namespace

Scalar substitute(const Scalar& a, const std::map<ParamId, Scalar>& bindings) {
    auto& table = ParamTable::instance();
    // close the binding map over radicals of bound bases
    std::map<ParamId, Scalar> full = bindings;
    for (auto& [p, v] : bindings) {
        if (auto rad = table.radical_of(p)) {
            auto explicit_it = bindings.find(*rad);
            if (explicit_it != bindings.end()) {
                // verify the square relation
                Scalar sq = explicit_it->second * explicit_it->second;
                if (!(sq == substitute_scalar(Scalar::param(p), bindings)))
                    throw InconsistentRadical("binding of '" + table.name(*rad) +
                                              "' violates its square relation");
            } else {
                auto root = try_sqrt(v);
                if (!root)
                    throw InconsistentRadical("base '" + table.name(p) +
                                              "' bound but no consistent binding for radical '" +
                                              table.name(*rad) + "'");
                full[*rad] = *root;
            }
        }
        if (auto base = table.radical_base(p)) {
            // radical bound directly: base must be bound too (or bind it now)
            if (!bindings.count(*base)) full[*base] = v * v;
        }
    }
    return substitute_scalar(a, full);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::Add: return a + b;
        case ScalarOp::Sub: return a - b;
        case ScalarOp::Mul: return a * b;
        case ScalarOp::Div: return a / b;
    }
    throw Error("bad scalar op");
}

} // namespace polyrep
