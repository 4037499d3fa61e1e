#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "tlrc/braid_word.hpp"
#include "tlrc/exec.hpp"
#include "tlrc/rational.hpp"

namespace tlrc {

/// Non-crossing perfect matching of boundary points in a rectangle.
///
/// Points are indexed bottom 0..n-1 (left to right), then top n..n+m-1
/// (left to right). Read around the boundary the order is bottom left to
/// right, then top right to left; planarity means no two chords interleave
/// in that circular order.
class PlanarMatching {
 public:
  /// Throws std::invalid_argument if `pairing` is not a planar perfect matching.
  PlanarMatching(int bottom, int top, std::vector<int> pairing);

  static PlanarMatching identity(int n);
  /// Cup-cap generator e_i on n strands, 1 <= i <= n-1.
  static PlanarMatching cup_cap(int n, int i);

  [[nodiscard]] int bottom_count() const { return bottom_; }
  [[nodiscard]] int top_count() const { return top_; }
  [[nodiscard]] int point_count() const { return bottom_ + top_; }
  [[nodiscard]] int partner(int point) const { return pairing_[static_cast<std::size_t>(point)]; }
  [[nodiscard]] const std::vector<int>& pairing() const { return pairing_; }

  static bool is_planar(int bottom, int top, std::span<const int> pairing);

  friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;

 private:
  struct Unchecked {};
  PlanarMatching(Unchecked, int bottom, int top, std::vector<int> pairing)
      : bottom_(bottom), top_(top), pairing_(std::move(pairing)) {}

  friend std::pair<PlanarMatching, int> glue(const PlanarMatching&, const PlanarMatching&);
  friend PlanarMatching juxtapose(const PlanarMatching&, const PlanarMatching&);

  int bottom_;
  int top_;
  std::vector<int> pairing_;
};

/// Stacks `upper` on top of `lower`; returns the result and the number of closed loops.
std::pair<PlanarMatching, int> glue(const PlanarMatching& lower, const PlanarMatching& upper);
/// Side-by-side placement, `left` first.
PlanarMatching juxtapose(const PlanarMatching& left, const PlanarMatching& right);
/// Loops formed by joining bottom point k to top point k for every k.
int closure_loops(const PlanarMatching& m);
/// All planar matchings with the given boundary, in sorted order.
std::vector<PlanarMatching> enumerate_matchings(int bottom, int top);

/// Formal combination of planar matchings with rational-function coefficients.
class TLElement {
 public:
  using Terms = std::map<PlanarMatching, RationalFunction>;

  TLElement(int bottom, int top) : bottom_(bottom), top_(top) {}

  static TLElement identity(int n);
  static TLElement generator(int n, int i);
  static TLElement from_matching(const PlanarMatching& m, const RationalFunction& c = RationalFunction::from_int(1));

  [[nodiscard]] int bottom_count() const { return bottom_; }
  [[nodiscard]] int top_count() const { return top_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] RationalFunction coefficient(const PlanarMatching& m) const;

  /// Adds c*m; drops the entry if the coefficient cancels. Throws ShapeMismatch.
  void add_term(const PlanarMatching& m, const RationalFunction& c);

  TLElement& operator+=(const TLElement& rhs);
  TLElement& operator-=(const TLElement& rhs);
  TLElement& operator*=(const RationalFunction& c);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const RationalFunction& c, TLElement x) { return x *= c; }
  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  int bottom_;
  int top_;
  Terms terms_;
};

/// Stacks `upper` on top of `lower` (lower acts first); closed loops become factors of d.
/// Throws ShapeMismatch unless lower.top_count() == upper.bottom_count().
TLElement compose(const TLElement& lower, const TLElement& upper, Exec exec = Exec::parallel);
TLElement tensor(const TLElement& left, const TLElement& right);
/// Markov closure evaluated by the bracket: sum of coefficient * d^loops.
RationalFunction trace_closure(const TLElement& x);

/// Memo of Jones-Wenzl projectors, safe for concurrent use.
class ProjectorCache {
 public:
  const TLElement& get(int n);

 private:
  std::shared_mutex mutex_;
  std::map<int, std::unique_ptr<TLElement>> cache_;
};

/// P_n from the process-wide cache, built by
/// P_n = P_{n-1} (x) 1 - (Delta_{n-2} / Delta_{n-1}) (P_{n-1} (x) 1) e_{n-1} (P_{n-1} (x) 1).
const TLElement& jones_wenzl(int n);

/// Bracket expansion of sigma_i^sign on n strands:
/// +1 -> A^-1 * 1 + A * e_i, -1 -> A * 1 + A^-1 * e_i.
TLElement crossing_element(int n, int i, int sign);

struct BracketValue {
  RationalFunction raw;         // unknot contributes d
  RationalFunction normalized;  // raw / d
};

/// Bracket of the closure of the braid; the first letter is the lowest crossing.
BracketValue braid_closure_bracket(const BraidWord& word);

}  // namespace tlrc
