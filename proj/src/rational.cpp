#include "nct/rational.hpp"

#include <cctype>

namespace nct {

BigInt floor_of(const Rational& r) {
  BigInt q = r.num() / r.den();  // truncates toward zero
  if (r.num() < 0 && q * r.den() != r.num()) q -= 1;
  return q;
}

Rational mod_one(const Rational& r) { return r - Rational(floor_of(r)); }

BigInt round_nearest(const Rational& r) { return floor_of(r + Rational(1, 2)); }

double to_double(const Rational& r) {
  return r.num().convert_to<double>() / r.den().convert_to<double>();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_signed_integer(const std::string& text, const std::string& whole) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (!all_digits(s)) throw Error("InvalidArgument", "bad rational literal: '" + whole + "'");
  BigInt v(s);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_signed_integer(text, text));
  BigInt num = parse_signed_integer(text.substr(0, slash), text);
  BigInt den = parse_signed_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error("InvalidArgument", "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.num().str() + "/" + r.den().str(); }

bool is_integer_matrix(const RMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

}  // namespace nct
