#include "schurlc/schur_expansion.hpp"

#include <cctype>

#include "schurlc/errors.hpp"

namespace schurlc {

SchurExpansion::SchurExpansion(const Partition& lambda, Integer coeff) {
  add_term(lambda, coeff);
}

Integer SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> SchurExpansion::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != d) return std::nullopt;
  return d;
}

void SchurExpansion::add_term(const Partition& lambda, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SchurExpansion scale(const Integer& c, const SchurExpansion& f) {
  SchurExpansion out;
  if (c == 0) return out;
  for (const auto& [lambda, coeff] : f.terms_)
    out.terms_.emplace_hint(out.terms_.end(), lambda, coeff * c);
  return out;
}

std::string to_string(const SchurExpansion& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : f.terms()) {
    if (first) {
      out += c.str();
    } else {
      out += c < 0 ? " - " : " + ";
      out += c < 0 ? Integer(-c).str() : c.str();
    }
    out += '*';
    out += to_string(lambda);
    first = false;
  }
  return out;
}

SchurExpansion parse_expansion(std::string_view text) {
  SchurExpansion f;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "0") return f;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in expansion '" +
                       std::string(text) + "'");
    }
    const std::size_t star = s.find('*', pos);
    const std::size_t close = s.find(']', pos);
    if (star == std::string::npos || close == std::string::npos ||
        close < star)
      throw ParseError("malformed term in expansion '" + std::string(text) +
                       "'");
    const std::string digits = s.substr(pos, star - pos);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad coefficient '" + digits + "'");
    Integer c(digits);
    f.add_term(parse_partition(s.substr(star + 1, close - star)), sign * c);
    pos = close + 1;
    first = false;
  }
  return f;
}

}  // namespace schurlc
