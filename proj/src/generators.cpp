#include "polyrep/generators.hpp"

#include <sstream>

namespace polyrep {

GenTable& GenTable::instance() {
    static GenTable table;
    return table;
}

GenId GenTable::intern(const std::string& name, int weight, bool central) {
    for (size_t i = 0; i < infos_.size(); ++i) {
        if (infos_[i].name == name) {
            if (infos_[i].weight != weight || infos_[i].central != central)
                throw Error("generator '" + name + "' re-registered with different attributes");
            return static_cast<GenId>(i);
        }
    }
    infos_.push_back(GenInfo{name, weight, central});
    return static_cast<GenId>(infos_.size() - 1);
}

std::optional<GenId> GenTable::find(const std::string& name) const {
    for (size_t i = 0; i < infos_.size(); ++i)
        if (infos_[i].name == name) return static_cast<GenId>(i);
    return std::nullopt;
}

int Word::weight() const {
    auto& t = GenTable::instance();
    int w = 0;
    for (auto g : letters) w += t.weight(g);
    return w;
}

bool Word::operator<(const Word& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return letters < o.letters;
}

std::string Word::to_text() const {
    if (letters.empty()) return "1";
    auto& t = GenTable::instance();
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < letters.size()) {
        size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        if (!first) os << "*";
        os << t.name(letters[i]);
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

} // namespace polyrep
