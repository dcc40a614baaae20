#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cnz {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class GridSpec;

enum class RingKind { kPrimeField, kIntegers, kIntegersMod };

/// Coefficient ring: F_p, Z, or Z_m.
///
/// Values handed to the raw arithmetic members must already be canonical
/// (reduced to [0, modulus) for the modular kinds). Moduli are limited to
/// 63 bits.
class RingSpec {
 public:
  static RingSpec prime_field(std::uint64_t p);
  static RingSpec integers();
  static RingSpec integers_mod(std::uint64_t m);

  /// Accepts the CLI syntax `fp:<p>`, `int`, `zmod:<m>`.
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  /// 0 for the integers.
  std::uint64_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ == RingKind::kPrimeField; }
  bool is_modular() const { return kind_ != RingKind::kIntegers; }

  Int canonical(const Int& value) const;
  Int from_int(std::int64_t value) const { return canonical(Int(value)); }

  Int add(const Int& a, const Int& b) const;
  Int sub(const Int& a, const Int& b) const;
  Int mul(const Int& a, const Int& b) const;
  Int neg(const Int& a) const;
  Int pow(const Int& base, std::uint64_t exponent) const;
  /// Field inverse. Throws on zero or on a non-field ring.
  Int inverse(const Int& a) const;

  /// Zero counts as a zero divisor.
  bool is_zero_divisor(const Int& a) const;

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// A ring element tagged with its ring; arithmetic checks the tags.
class RingElem {
 public:
  RingElem(RingSpec ring, const Int& value) : ring_(ring), value_(ring.canonical(value)) {}
  RingElem(RingSpec ring, std::int64_t value) : RingElem(ring, Int(value)) {}

  const RingSpec& ring() const { return ring_; }
  const Int& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  RingSpec ring_;
  Int value_;
};

RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);
RingElem invert(const RingElem& a);

struct CheckResult {
  bool pass = true;
  /// First offending pair (variable, x, y) when the check fails.
  std::optional<std::size_t> variable;
  std::optional<std::pair<Int, Int>> witness;
  std::string message;
};

/// No difference x - y of distinct elements of any S_i may be a zero divisor.
CheckResult grid_condition_check(const RingSpec& ring, const GridSpec& grid);

}  // namespace cnz
