#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qtheta/format.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/theta.hpp"

using namespace qtheta;

TEST_CASE("psi sum form puts ones at scaled triangular exponents") {
  const QSeries s = psi_sum(1, 12);
  for (long long e = 0; e < 12; ++e) {
    const bool triangular = e == 0 || e == 1 || e == 3 || e == 6 || e == 10;
    CHECK(s.coefficient_at(e) == (triangular ? 1 : 0));
  }
  const QSeries s3 = psi_sum(3, 12);
  for (long long e = 0; e < 12; ++e) {
    const bool hit = e == 0 || e == 3 || e == 9;
    CHECK(s3.coefficient_at(e) == (hit ? 1 : 0));
  }
  CHECK(equality_report(psi_sum(1, 30), psi_sum(1, 30).substitute_power(1)).equal);
}

TEST_CASE("phi sum form has coefficient 2 at positive squares") {
  const QSeries s = phi_sum(1, 12);
  CHECK(s.coefficient_at(0) == 1);
  CHECK(s.coefficient_at(1) == 2);
  CHECK(s.coefficient_at(4) == 2);
  CHECK(s.coefficient_at(9) == 2);
  CHECK(s.coefficient_at(2) == 0);
}

TEST_CASE("sum and product forms agree") {
  for (long long m : {1, 2, 3, 4, 12}) {
    CHECK(equality_report(psi_sum(m, 200), psi_prod(m, 200)).equal);
    CHECK(equality_report(phi_sum(m, 200), phi_prod(m, 200)).equal);
    CHECK(psi_prod(m, 50).coefficient_at(0) == 1);
    CHECK(phi_prod(m, 50).coefficient_at(0) == 1);
  }
}

TEST_CASE("jtp at z = 1 reduces to phi") {
  const QSeries lhs = jtp_side(JtpSide::Lhs, {+1, 0}, 60);
  CHECK(equality_report(lhs, phi_sum(1, 60)).equal);
}

TEST_CASE("jtp at z = -1 alternates in n") {
  // sum (-1)^n q^{n^2}: the pair n = +-k contributes 2(-1)^k at q^{k^2}
  const QSeries lhs = jtp_side(JtpSide::Lhs, {-1, 0}, 30);
  CHECK(lhs.coefficient_at(0) == 1);
  CHECK(lhs.coefficient_at(1) == -2);
  CHECK(lhs.coefficient_at(4) == 2);
  CHECK(lhs.coefficient_at(9) == -2);
  CHECK(lhs.coefficient_at(16) == 2);
  CHECK(lhs.coefficient_at(2) == 0);
  CHECK(lhs.coefficient_at(3) == 0);
  CHECK(equality_report(lhs, jtp_side(JtpSide::Rhs, {-1, 0}, 30)).equal);
}

TEST_CASE("jtp holds for all z = +-q^j with j <= 3") {
  for (int sign : {+1, -1}) {
    for (long long j = 0; j <= 3; ++j) {
      const ZSpec z{sign, j};
      const QSeries lhs = jtp_side(JtpSide::Lhs, z, 200);
      const QSeries rhs = jtp_side(JtpSide::Rhs, z, 200);
      INFO("sign=" << sign << " j=" << j);
      CHECK(equality_report(lhs, rhs).equal);
      CHECK(lhs.valuation() >= -j * j);
    }
  }
}

TEST_CASE("jtp at z = -q is identically zero on both sides") {
  const QSeries lhs = jtp_side(JtpSide::Lhs, {-1, 1}, 40);
  const QSeries rhs = jtp_side(JtpSide::Rhs, {-1, 1}, 40);
  for (long long e = lhs.valuation(); e < lhs.order(); ++e)
    CHECK(lhs.coefficient_at(e) == 0);
  CHECK(equality_report(lhs, rhs).equal);
}

TEST_CASE("big_psi at y = 1 is the distinct-part product") {
  const QSeries collapsed = specialize_y_at_one(big_psi(1, 40));
  const QSeries euler = pochhammer_infinite(-1, 1, 1, 40);
  CHECK(equality_report(collapsed, euler).equal);
}

TEST_CASE("big_psi coefficient of q^3") {
  const YPolynomial c = big_psi(1, 6).coefficient_at(3);
  // {3} contributes y, {2,1} contributes y^2
  CHECK(format_y_polynomial(c) == "y+y^2");
}

TEST_CASE("big_psi y-profile matches partition enumeration") {
  const QYSeries s = big_psi(1, 26);
  for (int n = 0; n <= 25; ++n) {
    const auto tally = tally_by_statistic(n, PartitionClass::Distinct,
                                          Statistic::NumParts);
    const YPolynomial expected(std::vector<BigInt>(tally.begin(), tally.end()));
    CHECK(s.coefficient_at(n) == expected);
  }
}

TEST_CASE("big_phi at y = 1 telescopes to 1") {
  const QSeries collapsed = specialize_y_at_one(big_phi(1, 40));
  CHECK(equality_report(collapsed, QSeries::one(40)).equal);
}

TEST_CASE("big_phi matches its defining product at y fixed") {
  // Phi(q, y) with y^2 treated formally: coefficient of q^2 is 1 - y^2.
  const YPolynomial c2 = big_phi(1, 8).coefficient_at(2);
  CHECK(format_y_polynomial(c2) == "1-y^2");
}

TEST_CASE("repr_count on the psi(q)psi(q^3) form") {
  const QuadraticForm form{{{1, QuadraticForm::Kind::Triangular},
                            {3, QuadraticForm::Kind::Triangular}},
                           0};
  CHECK(repr_count(4, form) == 1);
  CHECK(repr_count(0, form) == 1);
  const QSeries prod = psi_sum(1, 130) * psi_sum(3, 130);
  for (long long n = 0; n < 120; ++n)
    CHECK(repr_count(n, form) == prod.coefficient_at(n));
}

TEST_CASE("square terms count both signs") {
  const QuadraticForm form{{{1, QuadraticForm::Kind::Square}}, 0};
  const QSeries phi = phi_sum(1, 80);
  for (long long n = 0; n < 80; ++n)
    CHECK(repr_count(n, form) == phi.coefficient_at(n));
}

TEST_CASE("shifted forms") {
  const QuadraticForm form{{{2, QuadraticForm::Kind::Square},
                            {12, QuadraticForm::Kind::Triangular}},
                           1};
  CHECK(repr_count(0, form) == 0);
  CHECK(repr_count(1, form) == 1);
  const QSeries prod = (phi_sum(2, 90) * psi_sum(12, 90)).shifted(1);
  for (long long n = 0; n < 90; ++n)
    CHECK(repr_count(n, form) == prod.coefficient_at(n));
}

TEST_CASE("registry resolves known products and rejects unknown ones") {
  CHECK(find_product("psi").series);
  CHECK(find_product("big-psi").yseries);
  CHECK_THROWS_AS(find_product("nosuch"), UnknownProduct);
  // every registered id constructs at a small order
  for (const auto& entry : product_registry()) {
    if (entry.series) CHECK(entry.series(20).order() == 20);
    if (entry.yseries) CHECK(entry.yseries(20).order() == 20);
  }
}

TEST_CASE("ramanujan 2-dissection to order 300") {
  const QSeries lhs = psi_sum(1, 300) * psi_sum(3, 300);
  const QSeries rhs = psi_sum(4, 300) * phi_sum(6, 300) +
                      (phi_sum(2, 300) * psi_sum(12, 300)).shifted(1);
  CHECK(equality_report(lhs, rhs).equal);
}
