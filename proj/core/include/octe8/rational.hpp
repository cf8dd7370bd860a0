#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octe8 {

/// Exact rational scalar used throughout the library. No floating point
/// appears anywhere in the core.
using Rat = mpq_class;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical decimal-free rendering: "n" or "n/d" with d > 1.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(std::string_view s) {
  if (s.empty()) throw error("empty rational literal");
  Rat r;
  if (r.set_str(std::string(s), 10) != 0)
    throw error("bad rational literal: " + std::string(s));
  if (r.get_den() == 0) throw error("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// FNV-1a over a byte stream; used for content hashes of exports.
struct Fnv1a {
  std::uint64_t h = 1469598103934665603ull;
  void feed(std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  std::string hex() const {
    static const char* d = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) out[i] = d[(h >> (4 * (15 - i))) & 0xf];
    return out;
  }
};

}  // namespace octe8
