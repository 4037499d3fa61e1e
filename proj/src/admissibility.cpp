#include "tlrc/admissibility.hpp"

#include <cstdlib>
#include <string>

#include "tlrc/errors.hpp"

namespace tlrc {

bool is_admissible(int a, int b, int c, const std::optional<RootParams>& params) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a + b < c || b + c < a || c + a < b) return false;
  if (params) {
    const int cap = params->max_label();
    if (a > cap || b > cap || c > cap) return false;
    if (a + b + c > 2 * params->r() - 4) return false;
  }
  return true;
}

AdmissibleTriple require_admissible(int a, int b, int c, const std::optional<RootParams>& params) {
  if (!is_admissible(a, b, c, params)) {
    std::string msg = "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") is not admissible";
    if (params) msg += " at r=" + std::to_string(params->r());
    throw NotAdmissible(msg);
  }
  return {a, b, c};
}

std::vector<int> fusion_channels(int a, int b, const std::optional<RootParams>& params) {
  std::vector<int> out;
  if (a < 0 || b < 0) return out;
  for (int c = std::abs(a - b); c <= a + b; c += 2) {
    if (is_admissible(a, b, c, params)) out.push_back(c);
  }
  return out;
}

}  // namespace tlrc
