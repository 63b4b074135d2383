// bounds.hpp -- lower-bound formulas, box/region certificates, and the
// structural checks behind them.  Exact integer arithmetic only.

#ifndef QDOM_BOUNDS_HPP
#define QDOM_BOUNDS_HPP

#include <optional>

#include "qdom/board.hpp"

namespace qdom {

struct NoEmptyLine : Error {
  using Error::Error;
};

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// gamma = m exactly when the board is wide enough that every row must
// hold a queen: n >= 3m-2 (each queen covers at most three squares of
// any row other than its own).
inline std::optional<int> prop1_exact(int m, int n) {
  if (m > n) throw Error("prop1_exact: requires m <= n");
  if (n >= 3 * m - 2) return m;
  return std::nullopt;
}

// gamma >= min{m, ceil((m+n-2)/4)} for m <= n.
inline int thm2_lower(int m, int n) {
  if (m > n) throw Error("thm2_lower: requires m <= n");
  return std::min(m, ceil_div(m + n - 2, 4));
}

// Square boards: gamma >= ceil((n-1)/2).
inline int rvs_lower(int n) { return ceil_div(n - 1, 2); }

// The rectangle spanned by the extreme empty rows and columns of a
// small dominating set.  Defined when the set leaves at least two
// columns and two rows empty.
struct Box {
  int a = 0;  // leftmost empty column
  int b = 0;  // rightmost empty column
  int c = 0;  // lowest empty row
  int d = 0;  // highest empty row

  int rows() const { return d - c + 1; }     // m'
  int cols() const { return b - a + 1; }     // n'
  int border_size() const { return 2 * (d - c) + 2 * (b - a); }

  bool on_border(Square s) const {
    if (s.x < a || s.x > b || s.y < c || s.y > d) return false;
    return s.x == a || s.x == b || s.y == c || s.y == d;
  }
};

inline Box box_of(const QueenSet& s) {
  const BoardDims dims = s.dims();
  std::vector<bool> col_used(dims.n + 1, false), row_used(dims.m + 1, false);
  for (Square q : s.squares()) col_used[q.x] = true, row_used[q.y] = true;

  Box box;
  for (int x = 1; x <= dims.n; ++x)
    if (!col_used[x]) {
      if (box.a == 0) box.a = x;
      box.b = x;
    }
  for (int y = 1; y <= dims.m; ++y)
    if (!row_used[y]) {
      if (box.c == 0) box.c = y;
      box.d = y;
    }
  if (box.a == 0 || box.a == box.b || box.c == 0 || box.c == box.d)
    throw NoEmptyLine("box_of: need at least two empty rows and columns");
  return box;
}

// Queens split by the nine regions the box induces: R has both
// orthogonals missing the box, S exactly one meeting it, C lies inside.
struct RegionSplit {
  int corner = 0;  // |R|
  int side = 0;    // |S|
  int inside = 0;  // |C|

  int total() const { return corner + side + inside; }
};

// Classify each queen and check the concluding counting inequality
// 8|D| >= 2(m+n-2+|R|) from the proof of the thm2 bound.
inline RegionSplit region_split(const QueenSet& s) {
  const Box box = box_of(s);
  RegionSplit split;
  for (Square q : s.squares()) {
    // Queens never sit on the box's own rows/columns (those are empty).
    const bool col_meets = q.x > box.a && q.x < box.b;
    const bool row_meets = q.y > box.c && q.y < box.d;
    if (col_meets && row_meets)
      ++split.inside;
    else if (col_meets || row_meets)
      ++split.side;
    else
      ++split.corner;
  }
  const int m = s.dims().m, n = s.dims().n;
  if (8 * split.total() < 2 * (m + n - 2 + split.corner))
    throw Error("region_split: counting inequality violated (not a "
                "dominating set of the assumed size?)");
  return split;
}

// Box-dimension bound: with m' box rows and n' box columns,
// |D| >= ceil(n/2) when m' > n', else |D| >= ceil((n-1-(n'-m'))/2).
inline int box_bound(int m, int n, int m_prime, int n_prime) {
  if (m > n) throw Error("box_bound: requires m <= n");
  if (m_prime > n_prime) return ceil_div(n, 2);
  return std::max(0, ceil_div(n - 1 - (n_prime - m_prime), 2));
}

// Conditions a dominating set of size exactly (m+n-2)/4 must satisfy:
// size at most m-2, every box-border square covered exactly once, and
// independence.
struct Corollary3Report {
  bool preconditions_met = false;  // dominates, m <= n < 3m+2, 4|D| = m+n-2
  bool size_small = false;         // |D| <= m-2
  bool border_unique = false;      // each box-border square covered once
  bool independent = false;

  bool all_pass() const { return size_small && border_unique && independent; }
};

inline Corollary3Report corollary3_check(const QueenSet& s) {
  const int m = s.dims().m, n = s.dims().n;
  Corollary3Report rep;
  rep.preconditions_met =
      s.dominates() && m <= n && n < 3 * m + 2 && 4 * s.size() == m + n - 2;
  rep.size_small = s.size() <= m - 2;
  rep.independent = s.independent();

  const Box box = box_of(s);
  rep.border_unique = true;
  for (int y = 1; y <= m && rep.border_unique; ++y)
    for (int x = 1; x <= n && rep.border_unique; ++x) {
      Square sq{x, y};
      if (!box.on_border(sq)) continue;
      int covers = 0;
      for (Square q : s.squares())
        if (q == sq || attacks(q, sq)) ++covers;
      if (covers != 1) rep.border_unique = false;
    }
  return rep;
}

// Aggregate of the proved lower bounds plus the (never-proved,
// never-used-for-pruning) conjectural value min{m-1, floor(n/2)-1}.
struct BoundReport {
  std::optional<int> prop1;  // exact gamma when present
  int thm2 = 0;
  std::optional<int> square;       // square boards only
  bool square_is_external = false; // ceil(n/2) form rests on the n=3,11
                                   // classification from the literature
  int conjecture = 0;
  int best_proved = 0;
};

inline BoundReport best_lower(int m, int n) {
  if (m > n) throw Error("best_lower: requires m <= n");
  BoundReport rep;
  rep.prop1 = prop1_exact(m, n);
  rep.thm2 = thm2_lower(m, n);
  if (m == n) {
    if (n == 3 || n == 11) {
      rep.square = rvs_lower(n);
    } else {
      rep.square = ceil_div(n, 2);
      rep.square_is_external = true;
    }
  }
  rep.conjecture = std::min(m - 1, n / 2 - 1);
  rep.best_proved = rep.thm2;
  if (rep.prop1) rep.best_proved = std::max(rep.best_proved, *rep.prop1);
  if (rep.square) rep.best_proved = std::max(rep.best_proved, *rep.square);
  return rep;
}

}  // namespace qdom

#endif  // QDOM_BOUNDS_HPP
