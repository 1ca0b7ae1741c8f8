#include "dpd/printer.hpp"

namespace dpd {

std::string print_pair_document(const DpdPair& pair) {
    return "curve: " + pair.curve().str() + "\nD: " + pair.D().str() +
           "\nh: " + pair.h().str() + "\n";
}

} // namespace dpd
