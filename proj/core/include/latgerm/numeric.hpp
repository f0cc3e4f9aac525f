#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgerm {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals. No floating point appears outside the SVG renderer's final
// digit expansion.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Error raised when an operation's input precondition fails. `code()` is a
// stable machine-readable name (e.g. "ZeroVector", "DimensionMismatch") used
// verbatim by the CLI error reporting.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw DomainError(code, message);
}

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical rational from a possibly non-canonical numerator/denominator
// pair. Sign lives in the numerator, gcd is divided out.
Rat make_rat(Int numerator, Int denominator);

// Strict parser for the wire format: "p" or "p/q" with q > 0, optional
// leading '-'. Anything else is rejected.
Rat parse_rat(const std::string& text);

// Lowest-terms serialization: "p" when the denominator is one, else "p/q".
std::string rat_to_string(const Rat& r);

// Exact fixed-point decimal expansion with `digits` fractional digits,
// truncated toward zero. Only the SVG renderer uses this.
std::string rat_to_decimal(const Rat& r, int digits);

Int vec_gcd(const IntVec& v);
Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
RatVec to_rat_vec(const IntVec& v);

// Deterministic 64-bit generator (xorshift-style splitmix). We do not use
// <random> distributions because their output is implementation-defined;
// every seeded sampling contract in this library must be bit-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi] (inclusive); the modulo bias is
  // irrelevant for test sampling and keeps the stream portable.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace latgerm
