#pragma once

#include <string>

#include "polyrep/presentation.hpp"

namespace polyrep {

// Parse a .alg presentation file (structural parse only; run
// validate_presentation afterwards to check and derive base rules).
Presentation parse_alg(const std::string& text);

// Canonical .alg serialization; parse_alg(save_alg(p)) reproduces p.
std::string save_alg(const Presentation& p);

// FNV-1a over the canonical serialization.
std::string presentation_hash(const Presentation& p);

bool operator==(const ModuleSpec& a, const ModuleSpec& b);
bool operator==(const Presentation& a, const Presentation& b);

} // namespace polyrep
