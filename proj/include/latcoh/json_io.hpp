#pragma once

#include "latcoh/lattice.hpp"

#include <string>

namespace latcoh {

// {"group": {"p": ..., "orders": [...]}, "rank": ..., "action": [[row-major]...]}
std::string lattice_to_json(const Lattice& L);

// Parses and validates; throws BadParameters on malformed input and
// RelationViolation when the matrices break a group relation.
Lattice lattice_from_json(const std::string& text);

Lattice lattice_from_file(const std::string& path);
void lattice_to_file(const Lattice& L, const std::string& path);

} // namespace latcoh
