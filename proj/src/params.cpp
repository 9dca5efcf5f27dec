#include "polyrep/params.hpp"

namespace polyrep {

ParamTable& ParamTable::instance() {
    static ParamTable table;
    return table;
}

ParamId ParamTable::intern(const std::string& name, ParamKind kind) {
    for (size_t i = 0; i < infos_.size(); ++i)
        if (infos_[i].name == name) return static_cast<ParamId>(i);
    infos_.push_back(ParamInfo{name, kind, std::nullopt});
    return static_cast<ParamId>(infos_.size() - 1);
}

ParamId ParamTable::intern_radical(const std::string& name, ParamId base) {
    if (infos_.at(base).radical_base)
        throw InconsistentRadical("radical base '" + infos_[base].name + "' is itself a radical");
    for (size_t i = 0; i < infos_.size(); ++i) {
        if (infos_[i].name == name) {
            if (infos_[i].radical_base != std::optional<ParamId>(base))
                throw InconsistentRadical("radical '" + name + "' re-registered with a different base");
            return static_cast<ParamId>(i);
        }
    }
    infos_.push_back(ParamInfo{name, ParamKind::Radical, base});
    return static_cast<ParamId>(infos_.size() - 1);
}

bool ParamTable::has(const std::string& name) const {
    return find(name).has_value();
}

std::optional<ParamId> ParamTable::find(const std::string& name) const {
    for (size_t i = 0; i < infos_.size(); ++i)
        if (infos_[i].name == name) return static_cast<ParamId>(i);
    return std::nullopt;
}

std::optional<ParamId> ParamTable::radical_of(ParamId base) const {
    for (size_t i = 0; i < infos_.size(); ++i)
        if (infos_[i].radical_base == std::optional<ParamId>(base))
            return static_cast<ParamId>(i);
    return std::nullopt;
}

} // namespace polyrep
