#pragma once

#include <json.hpp>

#include "extword/lattice.hpp"
#include "extword/word.hpp"

namespace extword {

// Word wire format:
// {"blocks":[ {"type":"finite","letters":["a","~a",...]}
//           | {"type":"power","base":WORD,"exp":n}
//           | {"type":"atom","level":e,"rho":WORD,"lambda":WORD,"offset":[...]} ]}
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j, const std::shared_ptr<const Alphabet>& ab, int dims);

nlohmann::json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const nlohmann::json& j, int dims);

// Lattices serialize as their HNF rows, ascending degree.
nlohmann::json lattice_to_json(const PeriodLattice& l);

}  // namespace extword
