#pragma once

#include <map>

#include "polyrep/generators.hpp"
#include "polyrep/scalar.hpp"

namespace polyrep {

// Finite Scalar-linear combination of words; no zero coefficients stored.
class AlgElement {
public:
    using TermMap = std::map<Word, Scalar>;

    AlgElement() = default;
    explicit AlgElement(const Scalar& c) { add(Word::one(), c); }
    static AlgElement gen(GenId g, int e = 1) {
        AlgElement a;
        a.add(Word::gen(g, e), Scalar(1));
        return a;
    }
    static AlgElement word(const Word& w, const Scalar& c = Scalar(1)) {
        AlgElement a;
        a.add(w, c);
        return a;
    }
    static AlgElement one() { return AlgElement(Scalar(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int max_weight() const;

    void add(const Word& w, const Scalar& c);

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator-() const;
    AlgElement operator*(const AlgElement& o) const; // free (concatenation) product
    AlgElement operator*(const Scalar& c) const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);

    AlgElement pow(int n) const;

    bool operator==(const AlgElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgElement& o) const { return !(*this == o); }

    std::string to_text() const;

private:
    TermMap terms_;
};

inline AlgElement anticommutator_raw(const AlgElement& a, const AlgElement& b) {
    return a * b + b * a;
}
inline AlgElement commutator_raw(const AlgElement& a, const AlgElement& b) {
    return a * b - b * a;
}

} // namespace polyrep
