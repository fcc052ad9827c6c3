#include "doctest.h"
#include "oracles.hpp"
#include "wildforms/matrix.hpp"

using namespace wildforms;

namespace {

Matrix<Rational> rat_matrix(const std::vector<std::vector<int>>& rows) {
  Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b) {
  if (a.empty() && b.empty()) return true;
  int cols = static_cast<int>((a.empty() ? b : a)[0].size());
  Matrix<Rational> ma(0, cols), mb(0, cols), mab(0, cols);
  for (const auto& r : a) {
    ma.append_row(r);
    mab.append_row(r);
  }
  for (const auto& r : b) {
    mb.append_row(r);
    mab.append_row(r);
  }
  int ra = rank(ma), rb = rank(mb);
  return ra == rb && rank(mab) == ra;
}

}  // namespace

TEST_CASE("rref identity") {
  auto m = Matrix<Rational>::identity(3);
  auto r = rref(m);
  CHECK(r.rank == 3);
  CHECK(r.pivots == std::vector<int>{0, 1, 2});
  CHECK(r.reduced == m);
}

TEST_CASE("rref proportional rows") {
  auto r = rref(rat_matrix({{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == rat_matrix({{1, 2}, {0, 0}}));
}

TEST_CASE("rref rank agrees with fraction-free oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = oracle::random_matrix(rng, 4, 4);
    CHECK(rank(m) == oracle::bareiss_rank(m));
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_matrix(rng, 3, 6);
    CHECK(rank(m) == oracle::bareiss_rank(m));
  }
}

TEST_CASE("rref is idempotent") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_matrix(rng, 4, 5);
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
  }
}

TEST_CASE("rank of transpose") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_matrix(rng, 3, 5);
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("kernel of full-rank matrix is empty") {
  CHECK(kernel_basis(Matrix<Rational>::identity(2)).empty());
}

TEST_CASE("kernel of a single relation") {
  auto ker = kernel_basis(rat_matrix({{1, 1}}));
  REQUIRE(ker.size() == 1);
  CHECK(same_span(ker, {{Rational(1), Rational(-1)}}));
}

TEST_CASE("kernel vectors annihilate and count matches") {
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    auto m = oracle::random_matrix(rng, 3, 5);
    auto ker = kernel_basis(m);
    CHECK(static_cast<int>(ker.size()) == 5 - rank(m));
    for (const auto& v : ker)
      for (int i = 0; i < m.rows(); ++i) {
        Rational dot(0);
        for (int j = 0; j < m.cols(); ++j) dot += m.at(i, j) * v[j];
        CHECK(is_zero(dot));
      }
  }
}

TEST_CASE("solve recovers a consistent system") {
  auto a = rat_matrix({{1, 2}, {3, 4}});
  std::vector<Rational> b{Rational(5), Rational(6)};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  for (int i = 0; i < 2; ++i) {
    Rational dot(0);
    for (int j = 0; j < 2; ++j) dot += a.at(i, j) * (*x)[j];
    CHECK(dot == b[i]);
  }
  CHECK(!solve(rat_matrix({{1, 1}, {1, 1}}), b).has_value());
}

namespace {

Matrix<RatFunc> tmat(const std::vector<std::vector<RatFunc>>& rows) {
  Matrix<RatFunc> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("limit_subspace evaluates at zero") {
  RatFunc one{Rational(1)}, t = RatFunc::t();
  auto lim = limit_subspace(tmat({{one, t}}));
  CHECK(lim == rat_matrix({{1, 0}}));
}

TEST_CASE("limit_subspace strips common t powers") {
  RatFunc t = RatFunc::t();
  auto lim = limit_subspace(tmat({{t, t}}));
  CHECK(lim.rows() == 1);
  CHECK(same_span({lim.row(0)}, {{Rational(1), Rational(1)}}));
}

TEST_CASE("limit_subspace separates nearby rows") {
  RatFunc one{Rational(1)}, t = RatFunc::t();
  auto lim = limit_subspace(tmat({{one, one}, {one, one + t}}));
  REQUIRE(lim.rows() == 2);
  CHECK(same_span({lim.row(0), lim.row(1)},
                  {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}));
}

TEST_CASE("limit_subspace handles pole cancellation across rows") {
  // span{(1,0,1/t), (0,1,1/t)}: naive row scaling evaluates both rows to
  // (0,0,1); the true limit plane is spanned by (1,-1,0) and (0,0,1).
  RatFunc one{Rational(1)}, zero{Rational(0)};
  RatFunc inv_t(IntPoly(Integer(1)), IntPoly::t());
  auto lim = limit_subspace(tmat({{one, zero, inv_t}, {zero, one, inv_t}}));
  REQUIRE(lim.rows() == 2);
  CHECK(same_span({lim.row(0), lim.row(1)},
                  {{Rational(1), Rational(-1), Rational(0)},
                   {Rational(0), Rational(0), Rational(1)}}));
}

TEST_CASE("limit_subspace preserves dimension on random inputs") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + static_cast<int>(rng.next_below(3));
    int cols = rows + static_cast<int>(rng.next_below(3));
    Matrix<RatFunc> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        IntPoly num(std::vector<Integer>{rng.next_integer(4), rng.next_integer(3),
                                         rng.next_integer(2)});
        IntPoly den = IntPoly::t(rng.next_below(2)) ;
        if (rng.next_below(3) == 0)
          m.at(i, j) = RatFunc(num, den + IntPoly(Integer(1)));
        else
          m.at(i, j) = RatFunc(num, IntPoly(Integer(1)));
      }
    int rk = rank(m);
    auto lim = limit_subspace(m);
    CHECK(lim.rows() == rk);
    CHECK(rank(lim) == rk);
  }
}

TEST_CASE("limit_subspace of a constant matrix is its row space") {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    auto ratm = oracle::random_matrix(rng, 3, 4);
    Matrix<RatFunc> m(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = RatFunc(ratm.at(i, j));
    auto lim = limit_subspace(m);
    std::vector<std::vector<Rational>> orig;
    for (int i = 0; i < 3; ++i) orig.push_back(ratm.row(i));
    std::vector<std::vector<Rational>> got;
    for (int i = 0; i < lim.rows(); ++i) got.push_back(lim.row(i));
    CHECK(same_span(orig, got));
  }
}

TEST_CASE("ratfunc arithmetic and canonical form") {
  RatFunc t = RatFunc::t();
  RatFunc a = (t * t - RatFunc(1)) / (t - RatFunc(1));
  CHECK(a == t + RatFunc(1));
  CHECK(a.valuation() == 0);
  CHECK(a.eval_zero() == Rational(1));
  RatFunc b = t / (t * t);
  CHECK(b.valuation() == -1);
  CHECK_THROWS(b.eval_zero());
  CHECK((t * RatFunc(Rational(-2))).str() == "-2*t");
}

TEST_CASE("intpoly gcd and division") {
  IntPoly t = IntPoly::t();
  IntPoly a = (t + IntPoly(Integer(1))) * (t + IntPoly(Integer(2)));
  IntPoly b = (t + IntPoly(Integer(1))) * (t + IntPoly(Integer(3)));
  CHECK(gcd(a, b) == t + IntPoly(Integer(1)));
  CHECK(a.divexact(t + IntPoly(Integer(2))) == t + IntPoly(Integer(1)));
  CHECK_THROWS(a.divexact(t + IntPoly(Integer(5))));
}
