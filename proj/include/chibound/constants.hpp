#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace chibound {

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Log2Bounds {
  double lo = 0;
  double hi = 0;
  double mid() const { return (lo + hi) / 2; }
  double log10_mid() const;
};

/// Accepts "p/q" or a decimal such as "0.25"; result in lowest terms.
mpq_class parse_rational(const std::string& text);

struct ConstantsInput {
  std::uint64_t t = 10;
  std::uint64_t ell = 2;
  mpq_class epsilon = 1;
  std::uint64_t c = 1;
};

struct BoundConstants {
  ConstantsInput input;
  Log2Bounds log2_R, log2_N, log2_Z, log2_W, log2_d;
  Log2Bounds log2_beta_bound;  // 100 t^5 / eps^(2t+1), display only
  /// Present when 1/eps is an integer and d has at most kExactBitCap bits.
  std::optional<mpz_class> R, N, Z, W, d;
  bool exact() const { return R.has_value(); }
  /// N^2 (l N^(t/2))^(1/eps) >= N^(1/eps)  and  >= R N^2
  bool step2_first = false;
  bool step2_second = false;
  /// "exact" or "interval"
  std::string step2_method;
};

inline constexpr double kExactBitCap = 134'217'728.0;  // 2^27 bits for d

/// t even >= 10, ell >= 2, 0 < eps <= 1, c >= 1; InputError otherwise.
BoundConstants bound_constants(const ConstantsInput& in);

nlohmann::json to_json(const BoundConstants& pc);

}  // namespace chibound
