#pragma once

#include <string>
#include <vector>

namespace tlrc {

/// Braid on `strands` strands; letter +k is sigma_k, -k is its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  /// Throws IndexOutOfRange if a letter is 0 or exceeds strands - 1 in magnitude.
  void validate() const;
  [[nodiscard]] std::string to_string() const;
};

}  // namespace tlrc
