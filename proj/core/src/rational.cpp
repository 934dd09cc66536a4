#include "nambu/rational.hpp"

#include "nambu/error.hpp"

#include <cctype>

namespace nambu {

namespace {

bool is_signed_digits(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_signed_digits(num, true) || !is_signed_digits(den, false)) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace nambu
