#include "latgerm/numeric.hpp"

#include <cctype>

namespace latgerm {

Rat make_rat(Int numerator, Int denominator) {
  if (denominator == 0) fail("ZeroDenominator", "denominator must be nonzero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Int g = boost::multiprecision::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  return Rat(numerator, denominator);
}

Rat parse_rat(const std::string& text) {
  auto bad = [&]() -> Rat {
    fail("BadRational", "expected \"p\" or \"p/q\" with q > 0, got \"" + text + "\"");
  };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) return bad();
  Int numerator(text.substr(num_start, i - num_start));
  Int denominator = 1;
  if (i < text.size()) {
    if (text[i] != '/') return bad();
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) return bad();
    denominator = Int(text.substr(den_start));
    if (denominator <= 0) return bad();
  }
  if (neg) numerator = -numerator;
  return make_rat(numerator, denominator);
}

std::string rat_to_string(const Rat& r) { return r.str(); }

std::string rat_to_decimal(const Rat& r, int digits) {
  Int p = num(r), q = den(r);
  bool neg = p < 0;
  if (neg) p = -p;
  Int pow = 1;
  for (int i = 0; i < digits; ++i) pow *= 10;
  Int scaled = p * pow / q;  // truncation toward zero
  Int whole = scaled / pow;
  Int frac = scaled % pow;
  std::string fs = frac.str();
  fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
  std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + fs;
  return out;
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail("DimensionMismatch", "dot product of unequal dimensions");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail("DimensionMismatch", "dot product of unequal dimensions");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

}  // namespace latgerm
