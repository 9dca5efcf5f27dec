#include "polyrep/presentation.hpp"

#include "polyrep/errors.hpp"

namespace polyrep {

int Presentation::position(GenId g) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == g) return static_cast<int>(i);
    return -1;
}

AlgElement Presentation::table_commutator(GenId a, GenId b) const {
    if (a == b) return {};
    int pa = position(a), pb = position(b);
    if (pa < 0 || pb < 0)
        throw MixedPresentation("generator not in presentation '" + name + "'");
    if (pa < pb) {
        auto it = comm.find({a, b});
        if (it == comm.end())
            throw IncompleteCommTable("missing commutator [" + GenTable::instance().name(a) +
                                      "," + GenTable::instance().name(b) + "]");
        return it->second;
    }
    auto it = comm.find({b, a});
    if (it == comm.end())
        throw IncompleteCommTable("missing commutator [" + GenTable::instance().name(b) + "," +
                                  GenTable::instance().name(a) + "]");
    return -it->second;
}

std::optional<GenId> Presentation::find_gen(const std::string& n) const {
    auto g = GenTable::instance().find(n);
    if (g && has_gen(*g)) return g;
    return std::nullopt;
}

std::optional<Scalar> Presentation::resolve_param(const std::string& n) const {
    auto p = ParamTable::instance().find(n);
    if (!p) return std::nullopt;
    for (auto q : params) {
        if (q == *p) {
            auto it = derived.find(*p);
            if (it != derived.end()) return it->second;
            return Scalar::param(*p);
        }
    }
    return std::nullopt;
}

Presentation Presentation::specialized(const std::map<ParamId, Scalar>& bindings) const {
    Presentation q = *this;
    auto sub_elem = [&](const AlgElement& e) {
        AlgElement out;
        for (auto& [w, c] : e.terms()) out.add(w, substitute(c, bindings));
        return out;
    };
    for (auto& [k, v] : q.comm) v = sub_elem(v);
    q.casimir = sub_elem(q.casimir);
    if (q.casimir_eigenvalue) q.casimir_eigenvalue = substitute(*q.casimir_eigenvalue, bindings);
    for (auto& r : q.functional_relations) r = sub_elem(r);
    for (auto& [k, v] : q.derived) v = substitute(v, bindings);
    for (auto& [g, v] : q.module.eigen) v = substitute(v, bindings);
    for (auto& [g, d] : q.module.rule_denominators) {
        Scalar nd = substitute(d, bindings);
        if (nd.is_zero())
            throw BaseRuleDenominatorZero("base rule for " + GenTable::instance().name(g) +
                                          " has zero denominator under the given bindings");
        d = nd;
    }
    for (auto& [g, r] : q.module.lowest_rules) r = sub_elem(r);
    return q;
}

} // namespace polyrep
