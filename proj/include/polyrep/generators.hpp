#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyrep/errors.hpp"

namespace polyrep {

using GenId = uint8_t;

struct GenInfo {
    std::string name;
    int weight = 1;
    bool central = false;
};

// Process-wide table of noncommuting generators. Presentations pick subsets;
// names are shared across presentations (X1 always has weight 1, etc).
class GenTable {
public:
    static GenTable& instance();

    GenId intern(const std::string& name, int weight, bool central = false);
    std::optional<GenId> find(const std::string& name) const;
    const GenInfo& info(GenId g) const { return infos_.at(g); }
    const std::string& name(GenId g) const { return infos_.at(g).name; }
    int weight(GenId g) const { return infos_.at(g).weight; }

private:
    std::vector<GenInfo> infos_;
};

// Word in the free monoid on generators; empty word is the identity.
struct Word {
    std::vector<GenId> letters;

    Word() = default;
    explicit Word(std::vector<GenId> ls) : letters(std::move(ls)) {}
    static Word one() { return {}; }
    static Word gen(GenId g, int e = 1) {
        Word w;
        for (int i = 0; i < e; ++i) w.letters.push_back(g);
        return w;
    }

    bool is_one() const { return letters.empty(); }
    size_t length() const { return letters.size(); }
    int weight() const;

    Word operator*(const Word& o) const {
        Word w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const; // (weight, length, letters) lexicographic

    std::string to_text() const; // e.g. "X1^2*F"
};

} // namespace polyrep
