#include "zeta/rational.hpp"

#include <cctype>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

BigInt int_from_string(const std::string& s) {
  if (!is_integer_token(s)) throw parse_error("not an integer: \"" + s + "\"");
  return BigInt(s);
}

BigRational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return BigRational(int_from_string(s));
  }
  BigInt num = int_from_string(s.substr(0, slash));
  BigInt den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in \"" + s + "\"");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_to_string(const BigInt& n) { return n.get_str(); }

double to_double(const BigRational& q) { return q.get_d(); }

bool fits_int64(const BigInt& n) {
  static const BigInt lo("-9223372036854775808");
  static const BigInt hi("9223372036854775807");
  return n >= lo && n <= hi;
}

}  // namespace zeta
