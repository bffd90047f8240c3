#pragma once

#include <string>
#include <vector>

namespace kac {

/// Polynomial in q with exact integer coefficients, dense ascending.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static QPoly zero() { return QPoly{}; }
  static QPoly one() { return constant(1); }
  static QPoly constant(long long c);
  static QPoly monomial(long long c, int power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int power) const {
    return power >= 0 && power <= degree() ? c_[power] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }

  long long coeff_sum() const;

  /// Substitutes q -> -q.
  QPoly negate_variable() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Ascending powers: "1 - q + 2q^2", "q^4", "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<long long> c_;
};

}  // namespace kac
