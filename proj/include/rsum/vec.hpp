#ifndef RSUM_VEC_HPP
#define RSUM_VEC_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsum {

// Coordinates are 64-bit signed integers with checked addition. Species
// counts are kept nonnegative by construction; net gains use the full
// signed range.
using Coord = std::int64_t;
using Vec = std::vector<Coord>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector dimensions differ: " +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
}

inline Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("64-bit coordinate overflow in addition");
  return r;
}

inline Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("64-bit coordinate overflow in subtraction");
  return r;
}

inline Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("64-bit coordinate overflow in multiplication");
  return r;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, 0); }

inline bool is_zero(const Vec& a) {
  for (Coord c : a)
    if (c != 0) return false;
  return true;
}

inline bool is_nonneg(const Vec& a) {
  for (Coord c : a)
    if (c < 0) return false;
  return true;
}

// componentwise x <= y
inline bool leq(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// componentwise x < y: x <= y and x != y
inline bool lt(const Vec& a, const Vec& b) { return leq(a, b) && a != b; }

// x << y: strict in every component
inline bool ll(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] >= b[i]) return false;
  return true;
}

inline Vec cmax(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline Vec cmin(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

// signed componentwise difference
inline Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

// 0 v (a - b), the clamped difference used throughout the reaction sum
inline Vec pos_diff(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Coord d = checked_sub(a[i], b[i]);
    r[i] = d > 0 ? d : 0;
  }
  return r;
}

inline Coord max_coord(const Vec& a) {
  Coord m = 0;
  for (Coord c : a)
    if (c > m) m = c;
  return m;
}

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Coord c : v) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

}  // namespace rsum

#endif
