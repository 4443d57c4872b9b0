#include "nilcoh/rational.hpp"

#include <cctype>
#include <ostream>

namespace nilcoh {

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
}

std::string Rational::str_slash() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text[0] == '+') text.remove_prefix(1);  // GMP rejects a leading '+'
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (text[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
  if (digits == 0) return std::nullopt;
  mpz_class num(std::string(text.substr(0, pos)));
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') return std::nullopt;
  ++pos;
  std::size_t den_start = pos;
  digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
  if (digits == 0 || pos != text.size()) return std::nullopt;
  mpz_class den(std::string(text.substr(den_start)));
  if (den == 0) return std::nullopt;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

}  // namespace nilcoh
