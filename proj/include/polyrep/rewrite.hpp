#pragma once

#include <cstdint>

#include "polyrep/presentation.hpp"

namespace polyrep {

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

// Step budget; overridable through POLYREP_FUEL.
uint64_t default_fuel();

// Straightens words into the given generator order using the presentation's
// commutation table. Termination is guarded by fuel; the weight guard validated
// at load makes the built-ins terminate long before the budget.
class Rewriter {
public:
    explicit Rewriter(const Presentation& p, std::vector<GenId> order = {},
                      RewriteStrategy strategy = RewriteStrategy::LeftmostFirst,
                      uint64_t fuel = default_fuel());

    AlgElement normal_order(const AlgElement& a);
    AlgElement commutator(const AlgElement& a, const AlgElement& b);
    AlgElement ad_power(const AlgElement& a, const AlgElement& b, int k);
    // [a^n, b] by brute expansion; the oracle for lemma23_expand
    AlgElement power_commutator_direct(const AlgElement& a, const AlgElement& b, int n);
    // sum_{j=1}^n a^{n-j} [a,b] a^{j-1}  (the unconditional identity)
    AlgElement remark_power_commutator(const AlgElement& a, const AlgElement& b, int n);
    // the double binomial sum as displayed; zero-depth nestings are excluded
    AlgElement lemma23_expand(const AlgElement& a, const AlgElement& b, int n);

    uint64_t fuel_left() const { return fuel_; }
    const Presentation& presentation() const { return p_; }

private:
    int rank(GenId g) const;
    int find_inversion(const Word& w) const; // -1 if sorted

    const Presentation& p_;
    std::vector<GenId> order_;
    RewriteStrategy strategy_;
    uint64_t fuel_;
};

} // namespace polyrep
