#include "kac/qpoly.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace kac {

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(long long c) {
  return c == 0 ? QPoly{} : QPoly{{c}};
}

QPoly QPoly::monomial(long long c, int power) {
  if (c == 0) return QPoly{};
  std::vector<long long> v(power + 1, 0);
  v[power] = c;
  return QPoly{std::move(v)};
}

long long QPoly::coeff_sum() const {
  return std::accumulate(c_.begin(), c_.end(), 0LL);
}

QPoly QPoly::negate_variable() const {
  QPoly out = *this;
  for (size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<long long> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  return QPoly{std::move(v)};
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly{};
  std::vector<long long> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t a = 0; a < c_.size(); ++a) {
    for (size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
  }
  return QPoly{std::move(v)};
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    long long c = c_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long mag = std::llabs(c);
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace kac
