#include "polyrep/checks.hpp"

namespace polyrep {

std::vector<GenId> module_order(const Presentation& p) {
    std::vector<GenId> order = p.module.raising;
    for (auto g : p.generators) {
        if (p.module.is_raising(g)) continue;
        if (p.module.eigen.count(g)) continue;
        order.push_back(g);
    }
    for (auto g : p.generators) {
        if (p.module.eigen.count(g) && !p.module.is_raising(g)) order.push_back(g);
    }
    return order;
}

void validate_complete_table(const Presentation& p) {
    for (size_t i = 0; i < p.generators.size(); ++i)
        for (size_t j = i + 1; j < p.generators.size(); ++j)
            if (!p.comm.count({p.generators[i], p.generators[j]}))
                throw IncompleteCommTable(
                    "presentation '" + p.name + "' lacks [" +
                    GenTable::instance().name(p.generators[i]) + "," +
                    GenTable::instance().name(p.generators[j]) + "]");
}

void validate_weight_guard(const Presentation& p) {
    auto& gt = GenTable::instance();
    for (auto& [pair, rhs] : p.comm) {
        int W = gt.weight(pair.first) + gt.weight(pair.second);
        for (auto& [w, c] : rhs.terms()) {
            int ww = w.weight();
            bool ok = ww < W || (ww == W && w.length() < 2);
            if (!ok)
                throw WeightGuardViolation("rule [" + gt.name(pair.first) + "," +
                                           gt.name(pair.second) + "] has word " + w.to_text() +
                                           " violating the weight guard in '" + p.name + "'");
        }
    }
}

AlgElement jacobi_residual(const Presentation& p, GenId a, GenId b, GenId c) {
    Rewriter rw(p);
    AlgElement A = AlgElement::gen(a), B = AlgElement::gen(b), C = AlgElement::gen(c);
    AlgElement r = rw.commutator(rw.commutator(A, B), C) + rw.commutator(rw.commutator(B, C), A) +
                   rw.commutator(rw.commutator(C, A), B);
    return rw.normal_order(r);
}

void validate_jacobi(const Presentation& p) {
    auto& gt = GenTable::instance();
    for (size_t i = 0; i < p.generators.size(); ++i)
        for (size_t j = i + 1; j < p.generators.size(); ++j)
            for (size_t k = j + 1; k < p.generators.size(); ++k) {
                AlgElement r =
                    jacobi_residual(p, p.generators[i], p.generators[j], p.generators[k]);
                if (!r.is_zero())
                    throw JacobiViolation("Jacobi fails in '" + p.name + "' on (" +
                                          gt.name(p.generators[i]) + "," +
                                          gt.name(p.generators[j]) + "," +
                                          gt.name(p.generators[k]) + "): residual " + r.to_text());
            }
}

void validate_casimir_central(const Presentation& p) {
    if (p.casimir.is_zero()) return;
    Rewriter rw(p);
    for (auto g : p.generators) {
        AlgElement r = rw.commutator(p.casimir, AlgElement::gen(g));
        if (!r.is_zero())
            throw CasimirNotCentral("casimir " + p.casimir_name + " of '" + p.name +
                                    "' does not commute with " + GenTable::instance().name(g) +
                                    ": [" + p.casimir_name + "," + GenTable::instance().name(g) +
                                    "] = " + r.to_text());
    }
}

void validate_functional_nonzero(const Presentation& p) {
    Rewriter rw(p);
    for (size_t i = 0; i < p.functional_relations.size(); ++i)
        if (rw.normal_order(p.functional_relations[i]).is_zero())
            throw ValidationError("functional relation #" + std::to_string(i) + " of '" + p.name +
                                  "' is identically zero in the free algebra");
}

std::pair<AlgElement, Scalar> derive_base_rule(const Presentation& p, GenId target,
                                               const AlgElement& rel) {
    Rewriter rw(p, module_order(p));
    AlgElement no = rw.normal_order(rel);
    AlgElement combo;
    Scalar denom(0);
    for (auto& [w, c] : no.terms()) {
        Word raising_part;
        int target_count = 0;
        Scalar coeff = c;
        for (auto g : w.letters) {
            if (g == target) {
                ++target_count;
            } else if (p.module.is_raising(g)) {
                if (target_count > 0)
                    throw ValidationError("cannot solve base rule: raising generator right of " +
                                          GenTable::instance().name(target));
                raising_part.letters.push_back(g);
            } else if (auto it = p.module.eigen.find(g); it != p.module.eigen.end()) {
                coeff = coeff * it->second;
            } else {
                throw ValidationError("cannot solve base rule: generator " +
                                      GenTable::instance().name(g) + " has no rule");
            }
        }
        if (target_count == 0) {
            combo.add(raising_part, coeff);
        } else if (target_count == 1 && raising_part.is_one()) {
            denom += coeff;
        } else {
            throw ValidationError("functional relation is not linear in " +
                                  GenTable::instance().name(target));
        }
    }
    if (denom.is_zero())
        throw BaseRuleDenominatorZero("relation does not determine " +
                                      GenTable::instance().name(target));
    AlgElement rule = combo * (Scalar(-1) / denom);
    return {rule, -denom};
}

void validate_presentation(Presentation& p) {
    validate_complete_table(p);
    validate_weight_guard(p);
    validate_jacobi(p);
    validate_casimir_central(p);
    validate_functional_nonzero(p);
    for (auto& [g, idx] : p.module.eliminate_via) {
        if (idx >= p.functional_relations.size())
            throw ValidationError("eliminate directive references missing functional relation");
        auto [rule, den] = derive_base_rule(p, g, p.functional_relations[idx]);
        p.module.lowest_rules[g] = rule;
        p.module.rule_denominators[g] = den;
    }
}

} // namespace polyrep
