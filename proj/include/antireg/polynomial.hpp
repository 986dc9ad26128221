#ifndef ANTIREG_POLYNOMIAL_HPP
#define ANTIREG_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace antireg {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, ascending degree, never any trailing zeros. The zero
/// polynomial has an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const mpz_class& c);
  /// c x^d
  static Polynomial monomial(const mpz_class& c, std::size_t d);
  /// (1+x)^m
  static Polynomial one_plus_x_pow(std::size_t m);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  mpz_class coefficient(std::size_t i) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const mpz_class& s);

  /// Multiply by x^d.
  Polynomial shifted(std::size_t d) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpz_class& s) { return a *= s; }
  friend Polynomial operator*(const mpz_class& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "1 + 5x + 10x^2 + 3x^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace antireg

#endif  // ANTIREG_POLYNOMIAL_HPP
