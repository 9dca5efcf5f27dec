#include "polyrep/poly.hpp"

#include <algorithm>
#include <sstream>

namespace polyrep {

Monomial Monomial::var(ParamId p, int e) {
    Monomial m;
    if (e != 0) m.exps.push_back({p, e});
    m.normalize();
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [p, e] : exps) d += e;
    return d;
}

int Monomial::exponent(ParamId p) const {
    for (auto& [q, e] : exps)
        if (q == p) return e;
    return 0;
}

void Monomial::normalize() {
    std::sort(exps.begin(), exps.end());
    // merge duplicates
    std::vector<std::pair<ParamId, int>> merged;
    for (auto& [p, e] : exps) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.push_back({p, e});
    }
    // fold radical squares into bases until none remain
    auto& table = ParamTable::instance();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<ParamId, int>> next;
        for (auto& [p, e] : merged) {
            auto base = table.radical_base(p);
            if (base && e >= 2) {
                if (e % 2) next.push_back({p, 1});
                next.push_back({*base, e / 2});
                changed = true;
            } else {
                next.push_back({p, e});
            }
        }
        std::sort(next.begin(), next.end());
        merged.clear();
        for (auto& [p, e] : next) {
            if (!merged.empty() && merged.back().first == p)
                merged.back().second += e;
            else
                merged.push_back({p, e});
        }
    }
    exps.clear();
    for (auto& [p, e] : merged)
        if (e != 0) exps.push_back({p, e});
}

Monomial Monomial::radical_expanded() const {
    auto& table = ParamTable::instance();
    Monomial m;
    for (auto& [p, e] : exps) {
        auto rad = table.radical_of(p);
        if (rad)
            m.exps.push_back({*rad, 2 * e});
        else
            m.exps.push_back({p, e});
    }
    std::sort(m.exps.begin(), m.exps.end());
    std::vector<std::pair<ParamId, int>> merged;
    for (auto& [p, e] : m.exps) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.push_back({p, e});
    }
    m.exps = std::move(merged);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.exps = exps;
    m.exps.insert(m.exps.end(), o.exps.begin(), o.exps.end());
    m.normalize();
    return m;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // lex with the smallest ParamId most significant; higher exponent first
    size_t i = 0, j = 0;
    while (i < exps.size() && j < o.exps.size()) {
        if (exps[i].first != o.exps[j].first)
            // the one holding the smaller id has positive power there: it is larger
            return exps[i].first > o.exps[j].first;
        if (exps[i].second != o.exps[j].second)
            return exps[i].second < o.exps[j].second;
        ++i, ++j;
    }
    return i == exps.size() && j < o.exps.size();
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[Monomial::one()] = c;
}

Poly Poly::var(ParamId p, int e) {
    Poly f;
    f.terms_[Monomial::var(p, e)] = 1;
    return f;
}

Poly Poly::term(const Rational& c, const Monomial& m) {
    Poly f;
    if (c != 0) f.terms_[m] = c;
    return f;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

const std::pair<const Monomial, Rational>& Poly::leading() const {
    return *terms_.rbegin();
}

int Poly::degree_in(ParamId p) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent(p));
    return d;
}

bool Poly::contains(ParamId p) const {
    for (auto& [m, c] : terms_)
        if (m.contains(p)) return true;
    return false;
}

std::vector<ParamId> Poly::params() const {
    std::vector<ParamId> out;
    for (auto& [m, c] : terms_)
        for (auto& [p, e] : m.exps)
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

Poly Poly::derivative(ParamId p) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        int e = m.exponent(p);
        if (e == 0) continue;
        Monomial n = m;
        for (auto& [q, f] : n.exps)
            if (q == p) f -= 1;
        n.normalize();
        r.add_term(n, c * e);
    }
    return r;
}

std::vector<Poly> Poly::coeffs_in(ParamId p) const {
    std::vector<Poly> cs(static_cast<size_t>(degree_in(p)) + 1);
    for (auto& [m, c] : terms_) {
        int e = m.exponent(p);
        Monomial n;
        for (auto& [q, f] : m.exps)
            if (q != p) n.exps.push_back({q, f});
        cs[static_cast<size_t>(e)].add_term(n, c);
    }
    return cs;
}

Poly Poly::from_coeffs_in(ParamId p, const std::vector<Poly>& cs) {
    Poly r;
    for (size_t e = 0; e < cs.size(); ++e) {
        Poly pe = cs[e];
        if (e > 0) pe = pe * Poly::var(p, static_cast<int>(e));
        r += pe;
    }
    return r;
}

std::string Poly::to_text() const {
    if (terms_.empty()) return "0";
    // print highest terms first; params within a monomial sorted by name
    auto& table = ParamTable::instance();
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::pair<std::string, int>> named;
        for (auto& [p, e] : m.exps) named.push_back({table.name(p), e});
        std::sort(named.begin(), named.end());
        if (named.empty()) {
            os << to_text(a);
        } else {
            bool need_star = false;
            if (a != 1) {
                os << to_text(a);
                need_star = true;
            }
            for (auto& [n, e] : named) {
                if (need_star) os << "*";
                os << n;
                if (e != 1) os << "^" << e;
                need_star = true;
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd / exact division in the radical-expanded ring
// ---------------------------------------------------------------------------

namespace {

// The quotient by sr^2 = r is isomorphic to a plain polynomial ring in a shadow
// variable: r -> S^2, sr -> S. Shadows carry no square relation, so ordinary
// polynomial gcd / division applies; results are mapped back afterwards.
ParamId shadow_of(ParamId radical) {
    auto& table = ParamTable::instance();
    return table.intern(table.name(radical) + "~", ParamKind::Free);
}

Monomial shadow_expand(const Monomial& m) {
    auto& table = ParamTable::instance();
    Monomial out;
    for (auto& [p, e] : m.exps) {
        if (table.radical_base(p))
            out.exps.push_back({shadow_of(p), e});
        else if (auto rad = table.radical_of(p))
            out.exps.push_back({shadow_of(*rad), 2 * e});
        else
            out.exps.push_back({p, e});
    }
    std::sort(out.exps.begin(), out.exps.end());
    std::vector<std::pair<ParamId, int>> merged;
    for (auto& [p, e] : out.exps) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.push_back({p, e});
    }
    out.exps = std::move(merged);
    return out;
}

Poly expand_radicals(const Poly& f) {
    Poly r;
    for (auto& [m, c] : f.terms()) r.add_term(shadow_expand(m), c);
    return r;
}

Poly reduce_radicals(const Poly& f) {
    auto& table = ParamTable::instance();
    Poly r;
    for (auto& [m, c] : f.terms()) {
        Monomial n;
        for (auto& [p, e] : m.exps) {
            const std::string& nm = table.name(p);
            if (!nm.empty() && nm.back() == '~') {
                ParamId rad = *table.find(nm.substr(0, nm.size() - 1));
                ParamId base = *table.radical_base(rad);
                if (e / 2 > 0) n.exps.push_back({base, e / 2});
                if (e % 2) n.exps.push_back({rad, 1});
            } else {
                n.exps.push_back({p, e});
            }
        }
        n.normalize();
        r.add_term(n, c);
    }
    return r;
}

// make the leading rational coefficient 1
Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f * (Rational(1) / f.leading().second);
}

ParamId main_var(const Poly& a, const Poly& b) {
    auto pa = a.params(), pb = b.params();
    ParamId best = 0;
    bool have = false;
    for (auto p : pa)
        if (!have || p < best) best = p, have = true;
    for (auto p : pb)
        if (!have || p < best) best = p, have = true;
    return best;
}

Poly gcd_expanded(Poly a, Poly b);

// gcd of the univariate-in-v coefficient list (content), recursive
Poly content_of(const std::vector<Poly>& cs) {
    Poly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_expanded(g, c);
        if (g.is_constant() && !g.is_zero()) return Poly(Rational(1));
    }
    return g.is_zero() ? Poly() : monic(g);
}

std::optional<Poly> divide_exact_expanded(const Poly& a, const Poly& b);

// classical pseudo-remainder of dense coefficient vectors in one variable
std::vector<Poly> prem(std::vector<Poly> u, const std::vector<Poly>& v) {
    auto deg = [](const std::vector<Poly>& w) -> int {
        for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
            if (!w[i].is_zero()) return i;
        return -1;
    };
    int m = deg(u), n = deg(v);
    const Poly& lv = v[static_cast<size_t>(n)];
    while ((m = deg(u)) >= n && m >= 0) {
        Poly lu = u[static_cast<size_t>(m)];
        // u = lv*u - lu * v * x^(m-n)
        for (auto& c : u) c = c * lv;
        for (int i = 0; i <= n; ++i)
            u[static_cast<size_t>(m - n + i)] -= lu * v[static_cast<size_t>(i)];
    }
    return u;
}

Poly gcd_expanded(Poly a, Poly b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
    ParamId v = main_var(a, b);
    auto ua = a.coeffs_in(v), ub = b.coeffs_in(v);
    Poly ca = content_of(ua), cb = content_of(ub);
    auto divout = [&](std::vector<Poly>& u, const Poly& c) {
        for (auto& w : u) {
            if (w.is_zero()) continue;
            auto q = divide_exact_expanded(w, c);
            w = q ? *q : w;
        }
    };
    if (!ca.is_constant()) divout(ua, ca);
    if (!cb.is_constant()) divout(ub, cb);
    Poly gc = gcd_expanded(ca, cb);

    auto deg = [](const std::vector<Poly>& w) -> int {
        for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
            if (!w[i].is_zero()) return i;
        return -1;
    };
    if (deg(ua) < deg(ub)) std::swap(ua, ub);
    while (true) {
        int dn = deg(ub);
        if (dn < 0) {
            // gcd = primitive(ua)
            Poly cu = content_of(ua);
            if (!cu.is_constant()) divout(ua, cu);
            Poly pp = Poly::from_coeffs_in(v, ua);
            return monic(gc * pp);
        }
        if (dn == 0) return monic(gc); // coprime in v
        auto r = prem(ua, ub);
        // make r primitive to keep coefficients small
        Poly cr = content_of(r);
        if (!cr.is_zero() && !cr.is_constant()) divout(r, cr);
        ua = std::move(ub);
        ub = std::move(r);
    }
}

std::optional<Poly> divide_exact_expanded(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly();
    Poly rem = a, quot;
    const auto& [lbm, lbc] = b.leading();
    // leading(rem) strictly decreases each round, so the loop terminates
    while (!rem.is_zero()) {
        const auto& [lam, lac] = rem.leading();
        // monomial division lam / lbm
        Monomial q;
        {
            size_t i = 0, j = 0;
            bool ok = true;
            while (j < lbm.exps.size()) {
                if (i >= lam.exps.size()) { ok = false; break; }
                if (lam.exps[i].first < lbm.exps[j].first) {
                    q.exps.push_back(lam.exps[i]);
                    ++i;
                } else if (lam.exps[i].first > lbm.exps[j].first) {
                    ok = false;
                    break;
                } else {
                    int e = lam.exps[i].second - lbm.exps[j].second;
                    if (e < 0) { ok = false; break; }
                    if (e > 0) q.exps.push_back({lam.exps[i].first, e});
                    ++i, ++j;
                }
            }
            if (!ok) return std::nullopt;
            for (; i < lam.exps.size(); ++i) q.exps.push_back(lam.exps[i]);
        }
        Rational qc = lac / lbc;
        Poly qt = Poly::term(qc, q);
        quot += qt;
        rem -= qt * b;
    }
    return quot;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly g = gcd_expanded(expand_radicals(a), expand_radicals(b));
    return reduce_radicals(g);
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
    auto q = divide_exact_expanded(expand_radicals(a), expand_radicals(b));
    if (!q) return std::nullopt;
    return reduce_radicals(*q);
}

} // namespace polyrep
