#pragma once

#include <string>

#include "dpd/pair.hpp"

namespace dpd {

// Canonical three-line document for a pair; parse_pair_document inverts this
// exactly (bit-for-bit equal pair).
std::string print_pair_document(const DpdPair& pair);

} // namespace dpd
