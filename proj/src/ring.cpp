#include "cnz/ring.hpp"

#include <charconv>
#include <limits>

#include <boost/integer/common_factor_rt.hpp>

#include "cnz/error.hpp"
#include "cnz/grid.hpp"

namespace cnz {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::uint64_t kMaxModulus = std::numeric_limits<std::int64_t>::max();

void check_modulus(std::uint64_t m) {
  if (m > kMaxModulus) {
    throw Error(ErrorCode::kInvalidArgument, "modulus exceeds 63 bits");
  }
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bad modulus '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover all 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
  check_modulus(p);
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
  return RingSpec(RingKind::kPrimeField, p);
}

RingSpec RingSpec::integers() { return RingSpec(RingKind::kIntegers, 0); }

RingSpec RingSpec::integers_mod(std::uint64_t m) {
  check_modulus(m);
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be at least 2");
  return RingSpec(RingKind::kIntegersMod, m);
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "int") return integers();
  if (text.starts_with("fp:")) return prime_field(parse_u64(text.substr(3)));
  if (text.starts_with("zmod:")) return integers_mod(parse_u64(text.substr(5)));
  throw Error(ErrorCode::kInvalidArgument,
              "unknown ring '" + std::string(text) + "' (expected fp:<p>, int, zmod:<m>)");
}

Int RingSpec::canonical(const Int& value) const {
  if (kind_ == RingKind::kIntegers) return value;
  Int r = value % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

Int RingSpec::add(const Int& a, const Int& b) const {
  if (kind_ == RingKind::kIntegers) return a + b;
  Int r = a + b;
  if (r >= modulus_) r -= modulus_;
  return r;
}

Int RingSpec::sub(const Int& a, const Int& b) const {
  if (kind_ == RingKind::kIntegers) return a - b;
  Int r = a - b;
  if (r < 0) r += modulus_;
  return r;
}

Int RingSpec::mul(const Int& a, const Int& b) const {
  if (kind_ == RingKind::kIntegers) return a * b;
  return Int(mulmod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b), modulus_));
}

Int RingSpec::neg(const Int& a) const {
  if (kind_ == RingKind::kIntegers) return -a;
  return a == 0 ? Int(0) : Int(modulus_) - a;
}

Int RingSpec::pow(const Int& base, std::uint64_t exponent) const {
  if (kind_ == RingKind::kIntegers) {
    if (exponent > std::numeric_limits<unsigned>::max()) {
      if (base == 0 || base == 1) return base;
      if (base == -1) return (exponent & 1) ? Int(-1) : Int(1);
      throw Error(ErrorCode::kExponentOverflow, "integer power too large");
    }
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
  }
  return Int(powmod(static_cast<std::uint64_t>(base), exponent, modulus_));
}

Int RingSpec::inverse(const Int& a) const {
  if (kind_ != RingKind::kPrimeField) {
    throw Error(ErrorCode::kUnsupportedRing, "inversion requires a prime field, got " + to_string());
  }
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return Int(powmod(static_cast<std::uint64_t>(a), modulus_ - 2, modulus_));
}

bool RingSpec::is_zero_divisor(const Int& a) const {
  if (a == 0) return true;
  if (kind_ != RingKind::kIntegersMod) return false;
  return boost::integer::gcd(static_cast<std::uint64_t>(a), modulus_) != 1;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::kPrimeField: return "fp:" + std::to_string(modulus_);
    case RingKind::kIntegers: return "int";
    case RingKind::kIntegersMod: return "zmod:" + std::to_string(modulus_);
  }
  return "?";
}

namespace {

const RingSpec& common_ring(const RingElem& a, const RingElem& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::kRingMismatch,
                "operands from " + a.ring().to_string() + " and " + b.ring().to_string());
  }
  return a.ring();
}

}  // namespace

RingElem add(const RingElem& a, const RingElem& b) {
  const auto& ring = common_ring(a, b);
  return RingElem(ring, ring.add(a.value(), b.value()));
}

RingElem sub(const RingElem& a, const RingElem& b) {
  const auto& ring = common_ring(a, b);
  return RingElem(ring, ring.sub(a.value(), b.value()));
}

RingElem mul(const RingElem& a, const RingElem& b) {
  const auto& ring = common_ring(a, b);
  return RingElem(ring, ring.mul(a.value(), b.value()));
}

RingElem neg(const RingElem& a) { return RingElem(a.ring(), a.ring().neg(a.value())); }

RingElem invert(const RingElem& a) { return RingElem(a.ring(), a.ring().inverse(a.value())); }

CheckResult grid_condition_check(const RingSpec& ring, const GridSpec& grid) {
  CheckResult result;
  if (!(grid.ring() == ring)) {
    throw Error(ErrorCode::kRingMismatch, "grid is over " + grid.ring().to_string());
  }
  if (ring.kind() != RingKind::kIntegersMod) return result;
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    const auto& set = grid.set(i);
    for (std::size_t a = 0; a < set.size(); ++a) {
      for (std::size_t b = a + 1; b < set.size(); ++b) {
        if (ring.is_zero_divisor(ring.sub(set[a], set[b]))) {
          result.pass = false;
          result.variable = i;
          result.witness = std::make_pair(set[a], set[b]);
          result.message = "difference of " + set[a].str() + " and " + set[b].str() +
                           " in S_" + std::to_string(i + 1) + " is a zero divisor in " +
                           ring.to_string();
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace cnz
