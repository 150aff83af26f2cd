#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcglab {

using Rational = mpq_class;

/// Raised for malformed textual input (graph6, Newick, JSON payloads, interval strings).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p", or a plain decimal such as "2.5" or "-0.125".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw FormatError("empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw FormatError("bad rational literal: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw FormatError("bad rational literal: " + s);
    std::string denom = "1" + std::string(s.size() - dot - 1, '0');
    s = digits + "/" + denom;
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());

  Rational r;
  if (r.set_str(s, 10) != 0) throw FormatError("bad rational literal: " + std::string(text));
  if (r.get_den() == 0) throw FormatError("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

/// n/d in lowest terms. mpq_class(n, d) alone does not reduce.
inline Rational ratio(long n, long d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace pcglab
