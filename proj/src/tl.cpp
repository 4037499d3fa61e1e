#include "tlrc/tl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

#include "tlrc/errors.hpp"
#include "tlrc/scalar.hpp"

namespace tlrc {

namespace {

int circular_position(int point, int bottom, int top) {
  return point < bottom ? point : bottom + (top - 1 - (point - bottom));
}

int point_from_circular(int pos, int bottom, int top) {
  return pos < bottom ? pos : bottom + (top - 1 - (pos - bottom));
}

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw ShapeMismatch(what);
}

// d^k for k loops, grown on demand.
class LoopPowers {
 public:
  const RationalFunction& operator()(int k) {
    while (static_cast<int>(powers_.size()) <= k) {
      powers_.push_back(powers_.empty() ? RationalFunction::from_int(1)
                                        : powers_.back() * RationalFunction(loop_value()));
    }
    return powers_[static_cast<std::size_t>(k)];
  }

 private:
  std::vector<RationalFunction> powers_;
};

}  // namespace

// ---------------------------------------------------------------------------
// PlanarMatching

PlanarMatching::PlanarMatching(int bottom, int top, std::vector<int> pairing)
    : bottom_(bottom), top_(top), pairing_(std::move(pairing)) {
  const int total = bottom + top;
  if (bottom < 0 || top < 0 || total % 2 != 0 || static_cast<int>(pairing_.size()) != total) {
    throw std::invalid_argument("matching: bad boundary sizes");
  }
  for (int p = 0; p < total; ++p) {
    const int q = pairing_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= total || q == p || pairing_[static_cast<std::size_t>(q)] != p) {
      throw std::invalid_argument("matching: not a perfect matching");
    }
  }
  if (!is_planar(bottom, top, pairing_)) throw std::invalid_argument("matching: chords cross");
}

bool PlanarMatching::is_planar(int bottom, int top, std::span<const int> pairing) {
  const int total = bottom + top;
  std::vector<int> circ(static_cast<std::size_t>(total));
  for (int p = 0; p < total; ++p) {
    circ[static_cast<std::size_t>(circular_position(p, bottom, top))] =
        circular_position(pairing[static_cast<std::size_t>(p)], bottom, top);
  }
  std::vector<int> open;
  for (int pos = 0; pos < total; ++pos) {
    const int other = circ[static_cast<std::size_t>(pos)];
    if (other > pos) {
      open.push_back(pos);
    } else {
      if (open.empty() || open.back() != other) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

PlanarMatching PlanarMatching::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k)] = n + k;
    p[static_cast<std::size_t>(n + k)] = k;
  }
  return {Unchecked{}, n, n, std::move(p)};
}

PlanarMatching PlanarMatching::cup_cap(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("cup-cap index " + std::to_string(i) + " out of range for " +
                          std::to_string(n) + " strands");
  }
  std::vector<int> p = identity(n).pairing_;
  const int lo = i - 1;
  p[static_cast<std::size_t>(lo)] = lo + 1;
  p[static_cast<std::size_t>(lo + 1)] = lo;
  p[static_cast<std::size_t>(n + lo)] = n + lo + 1;
  p[static_cast<std::size_t>(n + lo + 1)] = n + lo;
  return {Unchecked{}, n, n, std::move(p)};
}

std::pair<PlanarMatching, int> glue(const PlanarMatching& lower, const PlanarMatching& upper) {
  const int n = lower.bottom_;
  const int k = lower.top_;
  const int m = upper.top_;
  require_shape(k == upper.bottom_, "glue: middle strand counts differ");

  std::vector<int> out(static_cast<std::size_t>(n + m), -1);
  std::vector<char> middle_seen(static_cast<std::size_t>(k), 0);

  // Follows a strand from a result boundary point until it exits again.
  auto walk = [&](bool in_lower, int point) -> int {
    for (;;) {
      if (in_lower) {
        const int q = lower.partner(point);
        if (q < n) return q;
        const int mid = q - n;
        middle_seen[static_cast<std::size_t>(mid)] = 1;
        in_lower = false;
        point = mid;
      } else {
        const int q = upper.partner(point);
        if (q >= k) return n + (q - k);
        middle_seen[static_cast<std::size_t>(q)] = 1;
        in_lower = true;
        point = n + q;
      }
    }
  };

  for (int p = 0; p < n + m; ++p) {
    if (out[static_cast<std::size_t>(p)] >= 0) continue;
    const int q = (p < n) ? walk(true, p) : walk(false, k + (p - n));
    out[static_cast<std::size_t>(p)] = q;
    out[static_cast<std::size_t>(q)] = p;
  }

  int loops = 0;
  for (int start = 0; start < k; ++start) {
    if (middle_seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int mid = start;
    bool in_lower = true;
    do {
      middle_seen[static_cast<std::size_t>(mid)] = 1;
      mid = in_lower ? lower.partner(n + mid) - n : upper.partner(mid);
      in_lower = !in_lower;
    } while (mid != start || !in_lower);
  }
  return {PlanarMatching(PlanarMatching::Unchecked{}, n, m, std::move(out)), loops};
}

PlanarMatching juxtapose(const PlanarMatching& left, const PlanarMatching& right) {
  const int n1 = left.bottom_, m1 = left.top_;
  const int n2 = right.bottom_, m2 = right.top_;
  const int n = n1 + n2;
  auto map_left = [&](int p) { return p < n1 ? p : n + (p - n1); };
  auto map_right = [&](int p) { return p < n2 ? n1 + p : n + m1 + (p - n2); };
  std::vector<int> out(static_cast<std::size_t>(n + m1 + m2));
  for (int p = 0; p < n1 + m1; ++p)
    out[static_cast<std::size_t>(map_left(p))] = map_left(left.partner(p));
  for (int p = 0; p < n2 + m2; ++p)
    out[static_cast<std::size_t>(map_right(p))] = map_right(right.partner(p));
  return {PlanarMatching::Unchecked{}, n, m1 + m2, std::move(out)};
}

int closure_loops(const PlanarMatching& m) {
  const int n = m.bottom_count();
  require_shape(n == m.top_count(), "closure: bottom and top strand counts differ");
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      const int q = m.partner(p);
      seen[static_cast<std::size_t>(q)] = 1;
      p = q < n ? q + n : q - n;  // closure arc
    } while (p != start);
  }
  return loops;
}

std::vector<PlanarMatching> enumerate_matchings(int bottom, int top) {
  const int total = bottom + top;
  std::vector<PlanarMatching> out;
  if (total % 2 != 0) return out;
  std::vector<int> circ(static_cast<std::size_t>(total), -1);

  std::function<void(int)> rec = [&](int pos) {
    while (pos < total && circ[static_cast<std::size_t>(pos)] >= 0) ++pos;
    if (pos == total) {
      std::vector<int> pairing(static_cast<std::size_t>(total));
      for (int c = 0; c < total; ++c) {
        pairing[static_cast<std::size_t>(point_from_circular(c, bottom, top))] =
            point_from_circular(circ[static_cast<std::size_t>(c)], bottom, top);
      }
      out.emplace_back(bottom, top, std::move(pairing));
      return;
    }
    // Pair pos with a later free position q such that the enclosed span is fully free
    // and even-sized; scanning forward stops at the first already-used position.
    for (int q = pos + 1; q < total; q += 2) {
      bool blocked = false;
      for (int t = pos + 1; t <= q; ++t) {
        if (circ[static_cast<std::size_t>(t)] >= 0) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
      circ[static_cast<std::size_t>(pos)] = q;
      circ[static_cast<std::size_t>(q)] = pos;
      rec(pos + 1);
      circ[static_cast<std::size_t>(pos)] = -1;
      circ[static_cast<std::size_t>(q)] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// TLElement

TLElement TLElement::identity(int n) { return from_matching(PlanarMatching::identity(n)); }

TLElement TLElement::generator(int n, int i) { return from_matching(PlanarMatching::cup_cap(n, i)); }

TLElement TLElement::from_matching(const PlanarMatching& m, const RationalFunction& c) {
  TLElement x(m.bottom_count(), m.top_count());
  x.add_term(m, c);
  return x;
}

RationalFunction TLElement::coefficient(const PlanarMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction{} : it->second;
}

void TLElement::add_term(const PlanarMatching& m, const RationalFunction& c) {
  require_shape(m.bottom_count() == bottom_ && m.top_count() == top_,
                "TLElement: matching boundary does not match element");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& rhs) {
  require_shape(bottom_ == rhs.bottom_ && top_ == rhs.top_, "TLElement: adding different shapes");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& rhs) {
  require_shape(bottom_ == rhs.bottom_ && top_ == rhs.top_, "TLElement: subtracting different shapes");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

TLElement& TLElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

TLElement compose_serial(const TLElement& lower, const TLElement& upper) {
  LoopPowers dpow;
  TLElement out(lower.bottom_count(), upper.top_count());
  for (const auto& [mx, cx] : lower.terms()) {
    for (const auto& [my, cy] : upper.terms()) {
      auto [m, loops] = glue(mx, my);
      out.add_term(m, cx * cy * dpow(loops));
    }
  }
  return out;
}

TLElement compose_parallel(const TLElement& lower, const TLElement& upper) {
  using Bucket = std::map<PlanarMatching, std::vector<RationalFunction>>;
  const std::vector<std::pair<PlanarMatching, RationalFunction>> xs(lower.terms().begin(),
                                                                    lower.terms().end());
  const std::vector<std::pair<PlanarMatching, RationalFunction>> ys(upper.terms().begin(),
                                                                    upper.terms().end());
  const long nx = static_cast<long>(xs.size());
  Bucket merged;

#pragma omp parallel
  {
    LoopPowers dpow;
    Bucket local;
#pragma omp for schedule(dynamic)
    for (long ix = 0; ix < nx; ++ix) {
      const auto& [mx, cx] = xs[static_cast<std::size_t>(ix)];
      for (const auto& [my, cy] : ys) {
        auto [m, loops] = glue(mx, my);
        local[m].push_back(cx * cy * dpow(loops));
      }
    }
#pragma omp critical(tl_compose_merge)
    for (auto& [m, list] : local) {
      auto& dst = merged[m];
      dst.insert(dst.end(), std::make_move_iterator(list.begin()), std::make_move_iterator(list.end()));
    }
  }

  std::vector<const Bucket::value_type*> entries;
  entries.reserve(merged.size());
  for (const auto& e : merged) entries.push_back(&e);
  std::vector<RationalFunction> sums(entries.size());
  const long ne = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < ne; ++k) {
    sums[static_cast<std::size_t>(k)] = RationalFunction::sum(entries[static_cast<std::size_t>(k)]->second);
  }

  TLElement out(lower.bottom_count(), upper.top_count());
  for (std::size_t k = 0; k < entries.size(); ++k) out.add_term(entries[k]->first, sums[k]);
  return out;
}

}  // namespace

TLElement compose(const TLElement& lower, const TLElement& upper, Exec exec) {
  require_shape(lower.top_count() == upper.bottom_count(),
                "compose: " + std::to_string(lower.top_count()) + " top strands vs " +
                    std::to_string(upper.bottom_count()) + " bottom strands");
  return exec == Exec::serial ? compose_serial(lower, upper) : compose_parallel(lower, upper);
}

TLElement tensor(const TLElement& left, const TLElement& right) {
  TLElement out(left.bottom_count() + right.bottom_count(), left.top_count() + right.top_count());
  for (const auto& [mx, cx] : left.terms()) {
    for (const auto& [my, cy] : right.terms()) out.add_term(juxtapose(mx, my), cx * cy);
  }
  return out;
}

RationalFunction trace_closure(const TLElement& x) {
  require_shape(x.bottom_count() == x.top_count(), "trace closure needs a square element");
  LoopPowers dpow;
  std::vector<RationalFunction> parts;
  parts.reserve(x.terms().size());
  for (const auto& [m, c] : x.terms()) parts.push_back(c * dpow(closure_loops(m)));
  return RationalFunction::sum(parts);
}

// ---------------------------------------------------------------------------
// Projectors and crossings

const TLElement& ProjectorCache::get(int n) {
  if (n < 0) throw std::invalid_argument("projector size must be non-negative");
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(n); it != cache_.end()) return *it->second;
  }
  std::unique_ptr<TLElement> built;
  if (n <= 1) {
    built = std::make_unique<TLElement>(TLElement::identity(n));
  } else {
    const TLElement& prev = get(n - 1);
    const TLElement lifted = tensor(prev, TLElement::identity(1));
    const TLElement sandwich =
        compose(compose(lifted, TLElement::generator(n, n - 1)), lifted);
    const RationalFunction ratio(delta_n(n - 2), delta_n(n - 1));
    built = std::make_unique<TLElement>(lifted - ratio * sandwich);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(n, std::move(built));
  return *it->second;
}

const TLElement& jones_wenzl(int n) {
  static ProjectorCache cache;
  return cache.get(n);
}

TLElement crossing_element(int n, int i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("crossing index " + std::to_string(i) + " out of range for " +
                          std::to_string(n) + " strands");
  }
  const RationalFunction a(LaurentPoly::monomial(1));
  const RationalFunction a_inv(LaurentPoly::monomial(-1));
  TLElement x(n, n);
  x.add_term(PlanarMatching::identity(n), sign > 0 ? a_inv : a);
  x.add_term(PlanarMatching::cup_cap(n, i), sign > 0 ? a : a_inv);
  return x;
}

BracketValue braid_closure_bracket(const BraidWord& word) {
  word.validate();
  TLElement x = TLElement::identity(word.strands);
  for (int letter : word.letters) {
    x = compose(x, crossing_element(word.strands, std::abs(letter), letter > 0 ? 1 : -1),
                Exec::serial);
  }
  RationalFunction raw = trace_closure(x);
  RationalFunction normalized = raw / RationalFunction(loop_value());
  return {std::move(raw), std::move(normalized)};
}

}  // namespace tlrc
