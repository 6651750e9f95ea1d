#include "qmap/rational.hpp"

#include <cctype>

#include "qmap/errors.hpp"

namespace qmap {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw ConfigError("not a rational number: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  mpq_class v(n, d);
  v.canonicalize();
  return Rational(v);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace qmap
