#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicorn {

inline constexpr const char* version_string = "0.1.0";

enum class errc {
  // curve pairs
  non_alternating_rotation,
  disconnected_curve,
  bigon_present,
  euler_mismatch,
  non_orientable_smoothing,
  no_intersections,
  not_returning,
  inessential_result,
  strategy_stuck,
  odd_intersection,
  too_large,
  no_non_rectangular_face,
  no_returning_arc_for_bicorn,
  // train tracks
  valence_two_switch,
  empty_side,
  monogon_face,
  bigon_face,
  missing_branch_weight,
  not_large_branch,
  invalid_result,
  pattern_mismatch,
  broken_route,
  empty_arc,
  collapse_failed,
  embedding_mismatch,
  // coarse
  empty_subset,
  disconnected,
  sample_budget_zero,
  family_too_small,
  empty_projection,
  path_too_short,
  orbit_escapes_domain,
  negative_entry,
  // models
  bound_too_small,
  all_trials_censored,
  // io
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_alternating_rotation: return "NonAlternatingRotation";
    case errc::disconnected_curve: return "DisconnectedCurve";
    case errc::bigon_present: return "BigonPresent";
    case errc::euler_mismatch: return "EulerMismatch";
    case errc::non_orientable_smoothing: return "NonOrientableSmoothing";
    case errc::no_intersections: return "NoIntersections";
    case errc::not_returning: return "NotReturning";
    case errc::inessential_result: return "InessentialResult";
    case errc::strategy_stuck: return "StrategyStuck";
    case errc::odd_intersection: return "OddIntersection";
    case errc::too_large: return "TooLarge";
    case errc::no_non_rectangular_face: return "NoNonRectangularFace";
    case errc::no_returning_arc_for_bicorn: return "NoReturningArcForBicorn";
    case errc::valence_two_switch: return "ValenceTwoSwitch";
    case errc::empty_side: return "EmptySide";
    case errc::monogon_face: return "MonogonFace";
    case errc::bigon_face: return "BigonFace";
    case errc::missing_branch_weight: return "MissingBranchWeight";
    case errc::not_large_branch: return "NotLargeBranch";
    case errc::invalid_result: return "InvalidResult";
    case errc::pattern_mismatch: return "PatternMismatch";
    case errc::broken_route: return "BrokenRoute";
    case errc::empty_arc: return "EmptyArc";
    case errc::collapse_failed: return "CollapseFailed";
    case errc::embedding_mismatch: return "EmbeddingMismatch";
    case errc::empty_subset: return "EmptySubset";
    case errc::disconnected: return "Disconnected";
    case errc::sample_budget_zero: return "SampleBudgetZero";
    case errc::family_too_small: return "FamilyTooSmall";
    case errc::empty_projection: return "EmptyProjection";
    case errc::path_too_short: return "PathTooShort";
    case errc::orbit_escapes_domain: return "OrbitEscapesDomain";
    case errc::negative_entry: return "NegativeEntry";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::all_trials_censored: return "AllTrialsCensored";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Exact rational on 64-bit words; intermediate products widened to 128 bits.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::runtime_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rat from_i128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::runtime_error("rational overflow");
    Rat r;
    r.num = (long long)n;
    r.den = (long long)d;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::runtime_error("rational division by zero");
    return from_i128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Lengths are half-integers stored doubled; derived quantities (Gromov products,
// four-point deltas) are quarter-integers stored quadrupled.
using Half = long long;
using Quarter = long long;

inline Quarter quarter_of_half(Half h) { return 2 * h; }

inline std::string fmt_half(Half doubled) {
  std::string s = std::to_string(doubled / 2);
  if (doubled % 2 != 0) {
    long long whole = doubled >= 0 ? doubled / 2 : -((-doubled) / 2);
    s = std::to_string(whole) + ".5";
    if (doubled < 0 && whole == 0) s = "-0.5";
  } else {
    s += ".0";
  }
  return s;
}

inline std::string fmt_quarter(Quarter quad) {
  bool neg = quad < 0;
  long long a = neg ? -quad : quad;
  static const char* frac[4] = {".0", ".25", ".5", ".75"};
  std::string s = (neg ? "-" : "") + std::to_string(a / 4) + frac[a % 4];
  return s;
}

// Deterministic splittable generator: 64-bit splitmix over a seed stream.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n) by rejection; bit-exact across platforms
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::runtime_error("Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  Rng split(uint64_t stream) const { return Rng(state ^ (0xa0761d6478bd642fULL * (stream + 1))); }
};

inline uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace bicorn
