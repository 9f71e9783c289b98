#include "chessspace/counting.hpp"

#include <stdexcept>

#include "chessspace/errors.hpp"

namespace chessspace {

BigCount falling_factorial(unsigned squares, unsigned pieces) {
  if (pieces > squares) return 0;
  BigCount product = 1;
  for (unsigned k = 0; k < pieces; ++k) product *= squares - k;
  return product;
}

BigCount factorial(unsigned n) { return falling_factorial(n, n); }

BigCount multiplicity_divisor(const PieceSet& set) {
  BigCount divisor = 1;
  for (unsigned m : set.counts()) divisor *= factorial(m);
  return divisor;
}

BigCount multiset_placements(const BoardSpec& board, const PieceSet& set) {
  BigCount ordered = falling_factorial(static_cast<unsigned>(board.squares()), set.total_pieces());
  BigCount divisor = multiplicity_divisor(set);
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(ordered, divisor, quotient, remainder);
  if (remainder != 0) throw std::logic_error("multiset divisor does not divide falling factorial");
  return quotient;
}

namespace {

BigCount pow10(unsigned exponent) {
  BigCount p = 1;
  for (unsigned i = 0; i < exponent; ++i) p *= 10;
  return p;
}

// floor(log10(num / den)) for num, den > 0.
long decimal_exponent(const BigCount& num, const BigCount& den) {
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  // 10^e <= num/den  <=>  num * 10^-e >= den (e < 0) or num >= den * 10^e
  auto at_least = [&](long exp) {
    return exp >= 0 ? num >= den * pow10(static_cast<unsigned>(exp))
                    : num * pow10(static_cast<unsigned>(-exp)) >= den;
  };
  if (!at_least(e)) --e;
  return e;
}

}  // namespace

std::string render_decimal(const BigCount& numerator, const BigCount& denominator,
                           int significant) {
  if (denominator <= 0) throw DomainError("ratio denominator must be positive");
  if (significant < 1) throw std::invalid_argument("precision must be at least 1");
  if (numerator < 0) throw std::invalid_argument("ratio numerator must be non-negative");
  if (numerator == 0) return "0";

  long exponent = decimal_exponent(numerator, denominator);
  // value ~= digits * 10^(exponent - significant + 1)
  long shift = significant - 1 - exponent;
  BigCount num = numerator;
  BigCount den = denominator;
  if (shift >= 0) num *= pow10(static_cast<unsigned>(shift));
  else den *= pow10(static_cast<unsigned>(-shift));
  // round half away from zero (values are non-negative)
  BigCount digits = (2 * num + den) / (2 * den);
  if (digits == pow10(static_cast<unsigned>(significant))) {
    digits /= 10;
    --shift;
  }

  std::string text = digits.str();
  if (shift <= 0) {
    text.append(static_cast<std::size_t>(-shift), '0');
    return text;
  }
  auto frac = static_cast<std::size_t>(shift);
  if (text.size() <= frac) text.insert(0, frac - text.size() + 1, '0');
  text.insert(text.size() - frac, 1, '.');
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return text;
}

Ratio effort_ratio(const BigCount& examined, const BigCount& total, int precision) {
  if (total == 0) throw DomainError("effort ratio is undefined for a zero total");
  return Ratio{examined, total, precision, render_decimal(examined, total, precision),
               render_decimal(examined * 100, total, precision)};
}

}  // namespace chessspace
