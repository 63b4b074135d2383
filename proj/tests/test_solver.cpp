#include "doctest.h"
#include "qdom/bounds.hpp"
#include "qdom/solver.hpp"
#include "qdom/table1.hpp"

using namespace qdom;

namespace {

const std::vector<Square> kEleven = {{6, 6}, {8, 10}, {4, 2}, {2, 8}, {10, 4}};

// Naive exhaustive oracle: try all k-subsets in increasing k.
int gamma_brute(BoardDims dims) {
  const int nsq = dims.square_count();
  for (int k = 1; k <= nsq; ++k) {
    std::vector<int> idx(k);
    std::vector<Square> sq(k);
    auto rec = [&](auto&& self, int depth, int from) -> bool {
      if (depth == k) return is_dominating(sq, dims);
      for (int i = from; i < nsq; ++i) {
        sq[depth] = square_at(i, dims);
        if (self(self, depth + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return k;
  }
  return nsq;
}

// All minimum dominating sets by brute force.
std::vector<QueenSet> min_sets_brute(BoardDims dims, int g) {
  const int nsq = dims.square_count();
  std::vector<QueenSet> out;
  std::vector<Square> sq(g);
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == g) {
      if (is_dominating(sq, dims)) out.push_back(QueenSet(dims, sq));
      return;
    }
    for (int i = from; i < nsq; ++i) {
      sq[depth] = square_at(i, dims);
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

TEST_CASE("gamma matches the exhaustive oracle on tiny boards") {
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 10; ++n) {
      if (m * n > 30) continue;
      BoardDims dims(m, n);
      SolveOutcome out = gamma(dims);
      REQUIRE(out.status == SolveStatus::Exact);
      CHECK(out.gamma == gamma_brute(dims));
      REQUIRE(!out.witnesses.empty());
      CHECK(out.witnesses.front().dominates());
      CHECK(out.witnesses.front().size() == out.gamma);
    }
}

TEST_CASE("gamma reference values") {
  CHECK(gamma(BoardDims(1, 1)).gamma == 1);
  CHECK(gamma(BoardDims(4, 4)).gamma == 2);
  CHECK(gamma(BoardDims(5, 5)).gamma == 3);
  CHECK(gamma(BoardDims(8, 8)).gamma == 5);
  CHECK(gamma(BoardDims(5, 12)).gamma == 4);
  CHECK(gamma(BoardDims(6, 10)).gamma == 4);
  CHECK(gamma(BoardDims(12, 5)).gamma == 4);  // transposed input
}

TEST_CASE("prop1 consistency: wide boards need exactly m queens") {
  for (int m = 1; m <= 4; ++m) {
    const int n = 3 * m - 2;
    CHECK(gamma(BoardDims(m, n)).gamma == m);
    CHECK(gamma(BoardDims(m, n + 2)).gamma == m);
  }
}

TEST_CASE("solver never beats the proved lower bound") {
  for (int m = 2; m <= 6; ++m)
    for (int n = m; n <= 8; ++n) {
      SolveOutcome out = gamma(BoardDims(m, n));
      CHECK(out.gamma >= best_lower(m, n).best_proved);
    }
}

TEST_CASE("enumerate_min 4x4 equals brute-force orbit count") {
  EnumerateOutcome out = enumerate_min(BoardDims(4, 4));
  REQUIRE(out.status == SolveStatus::Exact);
  CHECK(out.gamma == 2);
  auto brute = min_sets_brute(BoardDims(4, 4), 2);
  auto brute_classes = classes(brute);
  CHECK(out.classes.size() == brute_classes.size());
  int concrete = 0;
  for (const auto& c : out.classes) {
    CHECK(c.representative == canonical(c.representative));
    CHECK(c.representative.dominates());
    concrete += c.size;
  }
  CHECK(concrete == static_cast<int>(brute.size()));
}

TEST_CASE("enumerate_min 4x5 equals brute-force orbit count") {
  EnumerateOutcome out = enumerate_min(BoardDims(4, 5));
  REQUIRE(out.status == SolveStatus::Exact);
  auto brute = min_sets_brute(BoardDims(4, 5), out.gamma);
  CHECK(out.classes.size() == classes(brute).size());
}

TEST_CASE("near_dominating small cases") {
  NearDominateOutcome a = near_dominating(BoardDims(3, 3), 1);
  CHECK(a.max_covered == 9);

  NearDominateOutcome b = near_dominating(BoardDims(2, 2), 1);
  CHECK(b.max_covered == 4);

  // one queen cannot cover 4x4; best is 4x4 minus the misses
  NearDominateOutcome c = near_dominating(BoardDims(4, 4), 1);
  CHECK(c.max_covered < 16);
  CHECK(c.max_covered == 12);  // corner-adjacent center square covers 12
}

TEST_CASE("augment") {
  QueenSet d(BoardDims(11, 11), kEleven);
  QueenSet once = augment(d);
  CHECK(once.dims() == BoardDims(12, 12));
  CHECK(once.size() == 6);
  CHECK(once.dominates());
  CHECK(once.size() == table1().lookup(12, 12));  // implied bound is exact

  QueenSet twice = augment(once);
  CHECK(twice.dims() == BoardDims(13, 13));
  CHECK(twice.size() == 7);
  CHECK(twice.dominates());
  CHECK(twice.size() == table1().lookup(13, 13));

  QueenSet tiny = augment(QueenSet(BoardDims(1, 1), {{1, 1}}));
  CHECK(tiny.dims() == BoardDims(2, 2));
  CHECK(tiny.size() == 2);
  CHECK(tiny.dominates());

  CHECK_THROWS_AS(augment(QueenSet(BoardDims(4, 4), {{1, 1}})),
                  InputNotDominating);
}

TEST_CASE("budget produces Incomplete, never a wrong answer") {
  SearchBudget tight;
  tight.node_limit = 10;
  SolveOutcome out = gamma(BoardDims(8, 8), tight);
  if (out.status == SolveStatus::Incomplete) {
    CHECK(out.gamma <= 5);  // a lower bound, not an answer
    CHECK(out.witnesses.empty());
  } else {
    CHECK(out.gamma == 5);
  }

  SearchBudget cap;
  cap.max_queens = 2;
  SolveOutcome capped = gamma(BoardDims(8, 8), cap);
  CHECK(capped.status == SolveStatus::Incomplete);
}

TEST_CASE("determinism across repeated runs") {
  auto run = [] {
    EnumerateOutcome out = enumerate_min(BoardDims(5, 5));
    std::vector<std::vector<Square>> reps;
    for (const auto& c : out.classes) reps.push_back(c.representative.squares());
    return std::pair{out.gamma, reps};
  };
  auto a = run(), b = run();
  CHECK(a == b);
}
