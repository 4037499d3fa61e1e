#include "tlrc/braid_word.hpp"

#include <cstdlib>

#include "tlrc/errors.hpp"

namespace tlrc {

void BraidWord::validate() const {
  if (strands < 1) throw IndexOutOfRange("braid needs at least one strand");
  for (int letter : letters) {
    if (letter == 0 || std::abs(letter) > strands - 1) {
      throw IndexOutOfRange("generator " + std::to_string(letter) + " out of range for " +
                            std::to_string(strands) + " strands");
    }
  }
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(letters[k]);
  }
  return out;
}

}  // namespace tlrc
