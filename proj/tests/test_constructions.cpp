#include <algorithm>

#include "doctest.h"
#include "qdom/constructions.hpp"
#include "qdom/solver.hpp"
#include "qdom/table1.hpp"

using namespace qdom;

namespace {

// the 13x19 zero cover from the worked line plan, unit centered coords
std::vector<CenteredSquare> example1_set() {
  std::vector<std::pair<int, int>> v;
  push_pm(v, 9, 0);
  push_pm(v, 7, -6);
  push_pm(v, 5, 2);
  push_pm(v, 3, 2);
  push_pm(v, 1, -4);
  return doubled(v);
}

std::vector<CenteredSquare> sorted(std::vector<CenteredSquare> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// squared sum of the auxiliary orthogonal numbers of a strong set: the
// column/row multisets minus one copy of each required value
long long aux_square_sum(const StrongSet& s) {
  std::multiset<int> cols, rows;
  for (CenteredSquare c : s.squares) {
    cols.insert(c.x2);
    rows.insert(c.y2);
  }
  const CentralParams& p = s.params;
  for (int x = -(p.n1 - 1); x <= p.n1 - 1; x += 2) {
    auto it = cols.find(x);
    REQUIRE(it != cols.end());
    cols.erase(it);
  }
  for (int y = -(p.m1 - 1); y <= p.m1 - 1; y += 2) {
    auto it = rows.find(y);
    REQUIRE(it != rows.end());
    rows.erase(it);
  }
  long long total = 0;
  for (int v : cols) total += static_cast<long long>(v) * v;
  for (int v : rows) total += static_cast<long long>(v) * v;
  return total;
}

}  // namespace

TEST_CASE("line plan arithmetic checks") {
  auto [dims, plan] = example1_plan();
  CHECK_NOTHROW(check_line_plan(plan, 10));

  long long sx2 = 0, sy2 = 0, sd2 = 0, ss2 = 0;
  for (int v : plan.columns) sx2 += 1LL * v * v;
  for (int v : plan.rows) sy2 += 1LL * v * v;
  for (int v : plan.diff_diags) sd2 += 1LL * v * v;
  for (int v : plan.sum_diags) ss2 += 1LL * v * v;
  CHECK(sx2 == 330);
  CHECK(2 * sx2 + 2 * sy2 == sd2 + ss2);

  LinePlan broken = plan;
  broken.rows[0] += 2;
  CHECK_THROWS_AS(check_line_plan(broken, 10), InfeasiblePlan);

  LinePlan short_plan = plan;
  short_plan.columns.pop_back();
  CHECK_THROWS_AS(check_line_plan(short_plan, 10), InfeasiblePlan);
}

TEST_CASE("zero_cover_search recovers the 13x19 construction") {
  auto [dims, plan] = example1_plan();
  std::vector<QueenSet> found = zero_cover_search(dims, 10, plan);
  REQUIRE(!found.empty());

  QueenSet want = centered_to_corner(example1_set(), dims);
  bool has_example = false;
  for (const QueenSet& qs : found) {
    CHECK(qs.dominates());
    CHECK(is_zero_cover(qs).has_value());
    has_example = has_example || qs == want;
  }
  CHECK(has_example);
}

TEST_CASE("zero cover detection") {
  QueenSet qs = centered_to_corner(example1_set(), BoardDims(13, 19));
  auto origin = is_zero_cover(qs);
  REQUIRE(origin.has_value());
  CHECK(is_orthodox(qs, *origin));

  // gamma(7,12) = 5 < floor(12/2), so no minimum set there can even be
  // orthodox, let alone a zero cover
  EnumerateOutcome out = enumerate_min(BoardDims(7, 12));
  REQUIRE(out.status == SolveStatus::Exact);
  CHECK(out.gamma == 5);
  for (const auto& c : out.classes)
    CHECK_FALSE(is_zero_cover(c.representative).has_value());
}

TEST_CASE("central parameter bookkeeping") {
  CentralParams p = central_params(7, 4, 1);
  CHECK(p.m() == 13);
  CHECK(p.n() == 16);
  CHECK(p.g() == 8);
  CHECK(p.aux_cols() == 4);
  CHECK(p.aux_rows() == 1);

  CentralParams q = central_params(9, 6, 2);
  CHECK(q.m() == 17);
  CHECK(q.n() == 20);
  CHECK(q.g() == 10);

  CHECK_THROWS_AS(central_params(4, 4, 0), InvalidParity);
  CHECK_THROWS_AS(central_params(7, 4, 4), NegativeAuxCount);
}

TEST_CASE("orthogonal square-sum budget") {
  CHECK(sum_orth(central_params(7, 4, 1)) == 36);
  // a bare central column has no auxiliary squares and no budget
  CHECK(sum_orth(central_params(5, 1, 0)) == 0);
}

TEST_CASE("centrally strong search finds the known sets") {
  std::vector<StrongSet> found74 =
      centrally_strong_search(central_params(7, 4, 1), false);
  REQUIRE(!found74.empty());

  const std::vector<CenteredSquare> ex2 = sorted(
      {{1, -6}, {-1, 6}, {3, 4}, {-3, -4}, {3, 0}, {-3, 0}, {3, -2}, {-3, 2}});
  bool has_ex2 = false;
  for (const auto& s : found74) {
    CHECK(is_centrally_strong(s.squares, s.params));
    CHECK(s.to_board().dominates());
    CHECK(aux_square_sum(s) == sum_orth(s.params));
    has_ex2 = has_ex2 || sorted(s.squares) == ex2;
  }
  CHECK(has_ex2);

  std::vector<StrongSet> found96 =
      centrally_strong_search(central_params(9, 6, 2), true);
  REQUIRE(!found96.empty());
  for (const auto& s : found96) {
    CHECK(s.strict);
    CHECK(is_centrally_strong(s.squares, s.params));
    CHECK(s.to_board().dominates());
    CHECK(aux_square_sum(s) == sum_orth(s.params));
  }
}

TEST_CASE("strict strong sets transfer to smaller concentric boards") {
  std::vector<StrongSet> found =
      centrally_strong_search(central_params(9, 6, 2), true);
  REQUIRE(!found.empty());
  const StrongSet& s = found.front();
  auto boards = applicable_boards(s);
  for (int mp = 9; mp <= 17; ++mp)
    for (int np = 6; np <= 20; ++np)
      CHECK(boards.count({mp, np}) == 1);
}

TEST_CASE("column family: m-2 queens dominate m x (2m-3)") {
  for (int m : {3, 5, 7, 10, 12}) {
    QueenSet qs = family_prop5(m);
    CHECK(qs.dims() == BoardDims(m, 2 * m - 3));
    CHECK(static_cast<int>(qs.size()) == std::max(1, m - 2));
    CHECK(qs.dominates());
  }
  CHECK_THROWS_AS(family_prop5(2), Error);
}

TEST_CASE("five-column family") {
  StrongSet a = family_n1_5(5);  // the classical 13x13 set with 7 queens
  CHECK(a.params.board() == BoardDims(13, 13));
  CHECK(a.squares.size() == 7);
  CHECK(is_centrally_strong(a.squares, a.params));
  QueenSet qa = a.to_board();
  CHECK(qa.dominates());
  CHECK(static_cast<int>(qa.size()) == table1().lookup(13, 13));

  StrongSet b = family_n1_5(7);
  CHECK(b.params.board() == BoardDims(15, 17));
  CHECK(b.squares.size() == 9);

  for (int m1 = 5; m1 <= 15; m1 += 2) {
    StrongSet s = family_n1_5(m1);
    CHECK(static_cast<int>(s.squares.size()) == m1 + 2);
    CHECK(is_centrally_strong(s.squares, s.params));
    CHECK(s.strict);
    CHECK(s.to_board().dominates());
    CHECK(aux_square_sum(s) == sum_orth(s.params));
  }
  CHECK_THROWS_AS(family_n1_5(4), InvalidM1);
  CHECK_THROWS_AS(family_n1_5(3), InvalidM1);
}

TEST_CASE("seven-column family") {
  StrongSet a = family_n1_7(7);  // classical 17x17 set with 9 queens
  CHECK(a.params.board() == BoardDims(17, 17));
  CHECK(a.squares.size() == 9);
  QueenSet qa = a.to_board();
  CHECK(qa.dominates());
  CHECK(static_cast<int>(qa.size()) == table1().lookup(17, 17));

  StrongSet b = family_n1_7(9);
  CHECK(b.params.board() == BoardDims(19, 21));
  CHECK(b.squares.size() == 11);

  for (int m1 = 7; m1 <= 17; m1 += 2) {
    StrongSet s = family_n1_7(m1);
    CHECK(static_cast<int>(s.squares.size()) == m1 + 2);
    CHECK(is_centrally_strong(s.squares, s.params));
    CHECK(s.strict);
    CHECK(s.to_board().dominates());
    CHECK(aux_square_sum(s) == sum_orth(s.params));
  }
  CHECK_THROWS_AS(family_n1_7(5), InvalidM1);
  CHECK_THROWS_AS(family_n1_7(8), InvalidM1);
}

TEST_CASE("largest feasible aux budget") {
  auto k74 = largest_feasible_k(7, 4);
  REQUIRE(k74.has_value());
  CHECK(*k74 == 1);
  auto k55 = largest_feasible_k(5, 5);
  REQUIRE(k55.has_value());
  CHECK(*k55 == 1);
  for (int m1 = 3; m1 <= 7; m1 += 2) {
    auto k = largest_feasible_k(m1, 1);
    REQUIRE(k.has_value());
    CHECK(*k == 0);
  }
}

TEST_CASE("families sit on the half-the-side frontier") {
  for (int m1 = 5; m1 <= 13; m1 += 2) {
    StrongSet s = family_n1_5(m1);
    CHECK(2 * static_cast<int>(s.squares.size()) >= s.params.n());
  }
  for (int m1 = 7; m1 <= 13; m1 += 2) {
    StrongSet s = family_n1_7(m1);
    CHECK(2 * static_cast<int>(s.squares.size()) >= s.params.n());
  }
}
