#include "polyrep/algelem.hpp"

#include <sstream>

namespace polyrep {

int AlgElement::max_weight() const {
    int w = 0;
    for (auto& [word, c] : terms_) w = std::max(w, word.weight());
    return w;
}

void AlgElement::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    AlgElement r = *this;
    r += o;
    return r;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    AlgElement r = *this;
    r -= o;
    return r;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

AlgElement AlgElement::operator-() const {
    AlgElement r;
    for (auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    AlgElement r;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) r.add(w1 * w2, c1 * c2);
    return r;
}

AlgElement AlgElement::operator*(const Scalar& c) const {
    AlgElement r;
    if (c.is_zero()) return r;
    for (auto& [w, k] : terms_) r.terms_[w] = k * c;
    return r;
}

AlgElement AlgElement::pow(int n) const {
    AlgElement r = AlgElement::one();
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

std::string AlgElement::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest words first, matching how the relations are written in the sources
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Scalar a = c;
        bool neg = false;
        // pull a leading minus out of pure-numerator scalars with a single term
        if (a.num().term_count() == 1 && a.num().terms().begin()->second < 0) {
            neg = true;
            a = -a;
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;

        std::string ctext = a.to_text();
        bool compound = a.num().term_count() > 1;
        if (w.is_one()) {
            os << (compound ? "(" + ctext + ")" : ctext);
        } else if (a.is_one()) {
            os << w.to_text();
        } else {
            os << (compound ? "(" + ctext + ")" : ctext) << "*" << w.to_text();
        }
    }
    return os.str();
}

} // namespace polyrep
