#include <doctest.h>

#include "kac/qpoly.hpp"

using namespace kac;

TEST_CASE("construction and printing") {
  CHECK(QPoly::zero().to_string() == "0");
  CHECK(QPoly::one().to_string() == "1");
  CHECK(QPoly::monomial(1, 4).to_string() == "q^4");
  CHECK(QPoly::monomial(-1, 1).to_string() == "-q");
  CHECK(QPoly({1, -1, 2}).to_string() == "1 - q + 2q^2");
  CHECK(QPoly({0, 0, 0}).is_zero());
}

TEST_CASE("arithmetic") {
  QPoly a({1, 1});   // 1 + q
  QPoly b({1, -1});  // 1 - q
  CHECK((a * b) == QPoly({1, 0, -1}));
  CHECK((a + b) == QPoly::constant(2));
  CHECK((a - a).is_zero());
  CHECK((-a) == QPoly({-1, -1}));
  CHECK(a * QPoly::zero() == QPoly::zero());
}

TEST_CASE("coefficient access") {
  QPoly p({3, 0, -2});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 3);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -2);
  CHECK(p.coeff(5) == 0);
  CHECK(p.coeff_sum() == 1);
}

TEST_CASE("variable negation") {
  QPoly p({1, 2, 3, 4});
  CHECK(p.negate_variable() == QPoly({1, -2, 3, -4}));
  CHECK(p.negate_variable().negate_variable() == p);
}

TEST_CASE("powers of -q") {
  QPoly mq = QPoly::monomial(-1, 1);
  QPoly acc = QPoly::one();
  for (int i = 1; i <= 6; ++i) {
    acc = acc * mq;
    CHECK(acc == QPoly::monomial(i % 2 ? -1 : 1, i));
  }
}
