#include "s1fix/polynomial.hpp"

#include <algorithm>

#include "s1fix/error.hpp"

namespace s1fix {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::constant(BigInt c) { return IntegerPolynomial({std::move(c)}); }

IntegerPolynomial IntegerPolynomial::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::one_plus_t_pow(std::size_t w) {
  std::vector<BigInt> v(w + 1);
  v[0] += 1;
  v[w] += 1;
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::one_minus_t_pow(std::size_t w) {
  std::vector<BigInt> v(w + 1);
  v[0] += 1;
  v[w] -= 1;
  return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntegerPolynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntegerPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

const BigInt& IntegerPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] != 0) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  IntegerPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntegerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const BigInt mag = abs(c);
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<IntegerPolynomial, IntegerPolynomial> divmod(const IntegerPolynomial& numerator,
                                                       const IntegerPolynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const BigInt& lead = divisor.leading_coefficient();
  if (lead != 1 && lead != -1) {
    throw Error(ErrorCode::InvalidArgument, "divisor must have leading coefficient +1 or -1");
  }
  const std::size_t dd = *divisor.degree();
  std::vector<BigInt> rem = numerator.coefficients();
  if (rem.size() <= dd) return {IntegerPolynomial{}, numerator};

  std::vector<BigInt> quot(rem.size() - dd);
  const auto& dc = divisor.coefficients();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    const BigInt q = rem[k] * lead;  // lead is a unit, its own inverse
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * dc[j];
  }
  return {IntegerPolynomial(std::move(quot)), IntegerPolynomial(std::move(rem))};
}

}  // namespace s1fix
