#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyrep/errors.hpp"

namespace polyrep {

using ParamId = uint16_t;

enum class ParamKind { Free, Energy, Separation, Radical, Derived, Coordinate };

struct ParamInfo {
    std::string name;
    ParamKind kind = ParamKind::Free;
    // Radical params satisfy this² = base, base a plain (non-radical) param.
    std::optional<ParamId> radical_base;
};

// Process-wide interning table for commutative parameters. Registration order is
// deterministic (catalog first, then user files), so ids are stable within a run.
class ParamTable {
public:
    static ParamTable& instance();

    ParamId intern(const std::string& name, ParamKind kind = ParamKind::Free);
    ParamId intern_radical(const std::string& name, ParamId base);

    bool has(const std::string& name) const;
    std::optional<ParamId> find(const std::string& name) const;
    const ParamInfo& info(ParamId id) const { return infos_.at(id); }
    const std::string& name(ParamId id) const { return infos_.at(id).name; }
    std::optional<ParamId> radical_base(ParamId id) const { return infos_.at(id).radical_base; }
    // Radical over the given base param, if one was registered.
    std::optional<ParamId> radical_of(ParamId base) const;
    size_t size() const { return infos_.size(); }

private:
    std::vector<ParamInfo> infos_;
};

} // namespace polyrep
