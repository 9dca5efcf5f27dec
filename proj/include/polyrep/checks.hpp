#pragma once

#include "polyrep/rewrite.hpp"

namespace polyrep {

// Ordering used to push operators toward the lowest state: raising slots first,
// then eliminated (base-rule) generators, then eigen generators.
std::vector<GenId> module_order(const Presentation& p);

void validate_complete_table(const Presentation& p);   // IncompleteCommTable
void validate_weight_guard(const Presentation& p);     // WeightGuardViolation
void validate_jacobi(const Presentation& p);           // JacobiViolation
void validate_casimir_central(const Presentation& p);  // CasimirNotCentral
void validate_functional_nonzero(const Presentation& p);

// Jacobi residual for one triple, normal-ordered (zero means consistent).
AlgElement jacobi_residual(const Presentation& p, GenId a, GenId b, GenId c);

// Solve `target * Psi` from a functional relation rel == 0: normal-order rel in
// module order, evaluate eigen generators on Psi, demand the relation be linear
// in `target` with a scalar coefficient. Returns the rule (element in raising
// generators) and the denominator that must stay nonzero.
std::pair<AlgElement, Scalar> derive_base_rule(const Presentation& p, GenId target,
                                               const AlgElement& rel);

// Full structural validation, plus base-rule derivation for `eliminate` targets
// recorded by the loader in rule_denominators with empty rules.
void validate_presentation(Presentation& p);

} // namespace polyrep
