#pragma once

#include <optional>
#include <vector>

#include "tlrc/scalar.hpp"

namespace tlrc {

/// Labels of a trivalent vertex with the shared-line counts between legs:
/// a = m + p, b = m + n, c = n + p.
struct AdmissibleTriple {
  int a = 0, b = 0, c = 0;

  [[nodiscard]] int m() const { return (a + b - c) / 2; }
  [[nodiscard]] int n() const { return (b + c - a) / 2; }
  [[nodiscard]] int p() const { return (c + a - b) / 2; }
};

/// Parity and triangle conditions; with params also a + b + c <= 2r - 4 and every label <= r - 2.
bool is_admissible(int a, int b, int c, const std::optional<RootParams>& params = std::nullopt);

/// Throws NotAdmissible when the triple fails is_admissible.
AdmissibleTriple require_admissible(int a, int b, int c,
                                    const std::optional<RootParams>& params = std::nullopt);

/// Ascending labels c with (a, b, c) admissible.
std::vector<int> fusion_channels(int a, int b, const std::optional<RootParams>& params = std::nullopt);

}  // namespace tlrc
