#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyrep/algelem.hpp"

namespace polyrep {

// How signs of the paper-displayed differential operators are resolved for the
// analytic realization (kept selectable; see realization module).
struct ModuleSpec {
    std::vector<GenId> raising;               // template slots, word order (state = slots^e * Psi)
    std::map<GenId, Scalar> eigen;            // g Psi = value * Psi
    std::map<GenId, AlgElement> lowest_rules; // g Psi = element-in-raising-gens * Psi
    std::map<GenId, Scalar> rule_denominators; // denominator used when solving each rule
    std::map<GenId, size_t> eliminate_via;    // gen -> functional relation index
    std::optional<ParamId> separation;
    std::string state_label = "psi";
    std::vector<size_t> subscript_order;      // slot permutation for display labels

    bool is_raising(GenId g) const {
        for (auto r : raising)
            if (r == g) return true;
        return false;
    }
};

struct Presentation {
    std::string name;
    std::vector<GenId> generators;            // normal-form order
    // [g_i, g_j] for i < j in generator order
    std::map<std::pair<GenId, GenId>, AlgElement> comm;
    std::string casimir_name;
    AlgElement casimir;
    std::optional<Scalar> casimir_eigenvalue;
    std::vector<AlgElement> functional_relations;

    std::vector<ParamId> params;
    std::map<ParamId, Scalar> derived;        // derived-param bindings, stored expanded

    ModuleSpec module;

    int position(GenId g) const;              // -1 if absent
    bool has_gen(GenId g) const { return position(g) >= 0; }
    // [a, b] from the table, with sign if (a, b) is reversed; throws on unknown pair
    AlgElement table_commutator(GenId a, GenId b) const;

    std::optional<GenId> find_gen(const std::string& name) const;
    std::optional<Scalar> resolve_param(const std::string& name) const;

    // Substitute parameter bindings throughout (comm table, casimir, relations,
    // module rules). Throws BaseRuleDenominatorZero if a rule denominator dies.
    Presentation specialized(const std::map<ParamId, Scalar>& bindings) const;
};

} // namespace polyrep
