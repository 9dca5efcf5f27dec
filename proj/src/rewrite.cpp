#include "polyrep/rewrite.hpp"

#include <cstdlib>

namespace polyrep {

uint64_t default_fuel() {
    if (const char* env = std::getenv("POLYREP_FUEL")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

Rewriter::Rewriter(const Presentation& p, std::vector<GenId> order, RewriteStrategy strategy,
                   uint64_t fuel)
    : p_(p), order_(order.empty() ? p.generators : std::move(order)), strategy_(strategy),
      fuel_(fuel) {}

int Rewriter::rank(GenId g) const {
    for (size_t i = 0; i < order_.size(); ++i)
        if (order_[i] == g) return static_cast<int>(i);
    throw MixedPresentation("generator '" + GenTable::instance().name(g) +
                            "' not in presentation '" + p_.name + "'");
}

int Rewriter::find_inversion(const Word& w) const {
    if (w.letters.size() < 2) return -1;
    if (strategy_ == RewriteStrategy::LeftmostFirst) {
        for (size_t i = 0; i + 1 < w.letters.size(); ++i)
            if (rank(w.letters[i]) > rank(w.letters[i + 1])) return static_cast<int>(i);
        return -1;
    }
    for (size_t i = w.letters.size() - 1; i-- > 0;)
        if (rank(w.letters[i]) > rank(w.letters[i + 1])) return static_cast<int>(i);
    return -1;
}

AlgElement Rewriter::normal_order(const AlgElement& a) {
    std::map<Word, Scalar> work(a.terms().begin(), a.terms().end());
    auto push = [&work](const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = work.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    AlgElement out;
    while (!work.empty()) {
        auto it = std::prev(work.end()); // heaviest word first
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        int pos = find_inversion(w);
        if (pos < 0) {
            out.add(w, c);
            continue;
        }
        if (fuel_ == 0) throw FuelExhausted();
        --fuel_;
        GenId x = w.letters[static_cast<size_t>(pos)];
        GenId y = w.letters[static_cast<size_t>(pos) + 1];
        Word swapped = w;
        std::swap(swapped.letters[static_cast<size_t>(pos)],
                  swapped.letters[static_cast<size_t>(pos) + 1]);
        push(swapped, c);
        AlgElement cm = p_.table_commutator(x, y); // x y = y x + [x,y]
        for (auto& [rw, rc] : cm.terms()) {
            Word nw;
            nw.letters.assign(w.letters.begin(), w.letters.begin() + pos);
            nw.letters.insert(nw.letters.end(), rw.letters.begin(), rw.letters.end());
            nw.letters.insert(nw.letters.end(), w.letters.begin() + pos + 2, w.letters.end());
            push(nw, c * rc);
        }
    }
    return out;
}

AlgElement Rewriter::commutator(const AlgElement& a, const AlgElement& b) {
    return normal_order(a * b - b * a);
}

AlgElement Rewriter::ad_power(const AlgElement& a, const AlgElement& b, int k) {
    AlgElement r = normal_order(b);
    for (int i = 0; i < k; ++i) r = commutator(a, r);
    return r;
}

AlgElement Rewriter::power_commutator_direct(const AlgElement& a, const AlgElement& b, int n) {
    AlgElement an = a.pow(n);
    return normal_order(an * b - b * an);
}

AlgElement Rewriter::remark_power_commutator(const AlgElement& a, const AlgElement& b, int n) {
    AlgElement ab = commutator(a, b);
    AlgElement sum;
    for (int j = 1; j <= n; ++j) sum += a.pow(n - j) * ab * a.pow(j - 1);
    return normal_order(sum);
}

AlgElement Rewriter::lemma23_expand(const AlgElement& a, const AlgElement& b, int n) {
    // cache nested commutators ad_a^d(b) for d = 1..n
    std::vector<AlgElement> ad(static_cast<size_t>(n) + 1);
    ad[0] = normal_order(b);
    for (int d = 1; d <= n; ++d) ad[static_cast<size_t>(d)] = commutator(a, ad[static_cast<size_t>(d) - 1]);
    AlgElement sum;
    for (int l = 0; l <= n - 1; ++l) {
        for (int j = 0; j <= n - l; ++j) {
            int depth = n - j;
            if (depth == 0) continue; // zero-depth nestings excluded (boundary reading)
            Rational coeff = Rational(binomial(n, j) * binomial(j, l));
            if (j % 2) coeff = -coeff;
            if (coeff == 0) continue;
            sum += (a.pow(l) * ad[static_cast<size_t>(depth)]) * Scalar(coeff);
        }
    }
    return normal_order(sum);
}

} // namespace polyrep
