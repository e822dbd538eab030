#include "sigtl/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "sigtl/error.hpp"

namespace sigtl {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) fail(Errc::syntax, "bad rational literal '" + whole + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(Errc::syntax, "bad rational literal '" + whole + "'");
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno == ERANGE || end != s.c_str() + s.size())
    fail(Errc::syntax, "rational literal out of range '" + whole + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) fail(Errc::syntax, "zero denominator in '" + text + "'");
    r = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fail(Errc::syntax, "bad rational literal '" + text + "'");
    if (fp.size() > 18) fail(Errc::syntax, "rational literal too precise '" + text + "'");
    std::int64_t den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    r = Rational(parse_int(ip, text)) + Rational(parse_int(fp, text), den);
  } else {
    r = Rational(parse_int(s, text));
  }
  return neg ? -r : r;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  // Terminating decimal exactly when the denominator is 2^a * 5^b.
  std::int64_t den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1)
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());

  // Scale numerator so the denominator becomes 10^digits.
  int digits = twos > fives ? twos : fives;
  std::int64_t num = r.numerator();
  bool neg = num < 0;
  unsigned long long mag = neg ? -static_cast<unsigned long long>(num) : num;
  for (int i = 0; i < digits - twos; ++i) mag *= 2;
  for (int i = 0; i < digits - fives; ++i) mag *= 5;
  std::string ds = std::to_string(mag);
  if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  ds.insert(ds.size() - digits, ".");
  return (neg ? "-" : "") + ds;
}

}  // namespace sigtl
