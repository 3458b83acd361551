#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace s1fix {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in one indeterminate with arbitrary-precision integer
// coefficients; coefficient i multiplies t^i. Trailing zeros are trimmed, so
// the zero polynomial has no coefficients and no degree.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coefficients);
  static IntegerPolynomial constant(BigInt c);
  static IntegerPolynomial monomial(BigInt c, std::size_t degree);
  static IntegerPolynomial one_plus_t_pow(std::size_t w);   // 1 + t^w
  static IntegerPolynomial one_minus_t_pow(std::size_t w);  // 1 - t^w

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  BigInt coefficient(std::size_t i) const;
  const BigInt& leading_coefficient() const;  // precondition: non-zero

  IntegerPolynomial& operator+=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator-=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const BigInt& scalar);

  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator*(IntegerPolynomial a, const IntegerPolynomial& b) { return a *= b; }
  friend IntegerPolynomial operator*(IntegerPolynomial a, const BigInt& s) { return a *= s; }
  IntegerPolynomial operator-() const;

  bool operator==(const IntegerPolynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Long division over the integers. The divisor's leading coefficient must be
// +1 or -1 so the quotient stays integral; throws InvalidArgument otherwise.
std::pair<IntegerPolynomial, IntegerPolynomial> divmod(const IntegerPolynomial& numerator,
                                                       const IntegerPolynomial& divisor);

}  // namespace s1fix
