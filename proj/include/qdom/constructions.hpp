// constructions.hpp -- dominating-set constructions: 0-covers and
// centrally strong sets, the line-number constraint system behind them,
// and the two infinite families.
//
// Two coordinate frames appear here.  Board-facing code uses the corner
// frame (1-based, lower-left origin).  Construction work uses a centered
// frame stored in doubled coordinates: the square with doubled center
// (x2, y2) on an m x n board is the corner-frame square
// ((x2 + n + 1)/2, (y2 + m + 1)/2).  This covers both the unit centered
// frame (doubled values even) and the edge-length-two frame in which the
// centrally strong machinery is phrased.

#ifndef QDOM_CONSTRUCTIONS_HPP
#define QDOM_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <set>

#include "qdom/board.hpp"
#include "qdom/symmetry.hpp"

namespace qdom {

struct InfeasiblePlan : Error {
  using Error::Error;
};
struct InvalidParity : Error {
  using Error::Error;
};
struct NegativeAuxCount : Error {
  using Error::Error;
};
struct InvalidM1 : Error {
  using Error::Error;
};

struct CenteredSquare {
  int x2 = 0, y2 = 0;  // doubled centered coordinates

  int diff_diag() const { return y2 - x2; }
  int sum_diag() const { return y2 + x2; }
  friend bool operator==(CenteredSquare, CenteredSquare) = default;
  friend auto operator<=>(CenteredSquare, CenteredSquare) = default;
};

inline bool centered_fits(CenteredSquare s, BoardDims dims) {
  return (s.x2 + dims.n + 1) % 2 == 0 && (s.y2 + dims.m + 1) % 2 == 0 &&
         std::abs(s.x2) <= dims.n - 1 && std::abs(s.y2) <= dims.m - 1;
}

inline Square centered_to_corner(CenteredSquare s, BoardDims dims) {
  if (!centered_fits(s, dims))
    throw OutOfBounds("centered square off board or parity mismatch");
  return Square{(s.x2 + dims.n + 1) / 2, (s.y2 + dims.m + 1) / 2};
}

inline QueenSet centered_to_corner(const std::vector<CenteredSquare>& sq,
                                   BoardDims dims) {
  std::vector<Square> out;
  out.reserve(sq.size());
  for (CenteredSquare s : sq) out.push_back(centered_to_corner(s, dims));
  return QueenSet(dims, std::move(out));
}

// Mirror of centered_to_corner for a whole set; unit-frame helper.
inline std::vector<CenteredSquare> doubled(
    const std::vector<std::pair<int, int>>& unit) {
  std::vector<CenteredSquare> out;
  out.reserve(unit.size());
  for (auto [x, y] : unit) out.push_back({2 * x, 2 * y});
  return out;
}

// Adds both s and -s.
inline void push_pm(std::vector<std::pair<int, int>>& v, int x, int y) {
  v.emplace_back(x, y);
  v.emplace_back(-x, -y);
}

// ---------------------------------------------------------------------
// 0-covers
// ---------------------------------------------------------------------

// With the origin at `origin`, does every even-numbered column and every
// even-numbered row of the board contain a member?
inline bool is_orthodox(const QueenSet& s, Square origin) {
  const BoardDims dims = s.dims();
  std::vector<bool> col(dims.n + 1, false), row(dims.m + 1, false);
  for (Square q : s.squares()) col[q.x] = true, row[q.y] = true;
  for (int x = 1; x <= dims.n; ++x)
    if ((x - origin.x) % 2 == 0 && !col[x]) return false;
  for (int y = 1; y <= dims.m; ++y)
    if ((y - origin.y) % 2 == 0 && !row[y]) return false;
  return true;
}

// An origin making s orthodox and every odd-odd square diagonally covered,
// if one exists.  Only the origin's coordinate parities matter; the
// returned square is the lowest board square realizing them.
inline std::optional<Square> is_zero_cover(const QueenSet& s) {
  const BoardDims dims = s.dims();
  for (int px = 1; px <= 2; ++px)
    for (int py = 1; py <= 2; ++py) {
      Square origin{px, py};
      if (!is_orthodox(s, origin)) continue;
      bool ok = true;
      for (int y = 1; y <= dims.m && ok; ++y)
        for (int x = 1; x <= dims.n && ok; ++x) {
          if ((x - origin.x) % 2 == 0 || (y - origin.y) % 2 == 0) continue;
          bool diag = false;
          for (Square q : s.squares())
            if (q.y - q.x == y - x || q.y + q.x == y + x) {
              diag = true;
              break;
            }
          if (!diag) ok = false;
        }
      if (ok) return origin;
    }
  return std::nullopt;
}

// Full multisets of line numbers (required plus auxiliary) a realizing
// set must occupy, in the centered unit frame.  Each vector has one entry
// per queen.
struct LinePlan {
  std::vector<int> columns;
  std::vector<int> rows;
  std::vector<int> diff_diags;
  std::vector<int> sum_diags;
};

namespace detail {

inline long long sum_of(const std::vector<int>& v) {
  long long s = 0;
  for (int x : v) s += x;
  return s;
}
inline long long sum_sq(const std::vector<int>& v) {
  long long s = 0;
  for (int x : v) s += static_cast<long long>(x) * x;
  return s;
}

}  // namespace detail

// The line-number identities every realizable plan satisfies:
// sum(d) = sum(y) - sum(x), sum(s) = sum(y) + sum(x), and the
// Parallelogram Law 2*sum(x^2) + 2*sum(y^2) = sum(d^2) + sum(s^2).
inline void check_line_plan(const LinePlan& plan, size_t size) {
  using detail::sum_of;
  using detail::sum_sq;
  if (plan.columns.size() != size || plan.rows.size() != size ||
      plan.diff_diags.size() != size || plan.sum_diags.size() != size)
    throw InfeasiblePlan("line plan: multiset sizes must equal set size");
  if (sum_of(plan.diff_diags) != sum_of(plan.rows) - sum_of(plan.columns))
    throw InfeasiblePlan("line plan: sum(d) != sum(y) - sum(x)");
  if (sum_of(plan.sum_diags) != sum_of(plan.rows) + sum_of(plan.columns))
    throw InfeasiblePlan("line plan: sum(s) != sum(y) + sum(x)");
  if (2 * sum_sq(plan.columns) + 2 * sum_sq(plan.rows) !=
      sum_sq(plan.diff_diags) + sum_sq(plan.sum_diags))
    throw InfeasiblePlan("line plan: Parallelogram Law violated");
}

// All placements realizing the plan (centered unit frame) that are
// 0-covers of the board.  Backtracks over matchings of difference
// diagonals to sum diagonals, with orthogonal quota tracking.
inline std::vector<QueenSet> zero_cover_search(BoardDims dims, int size,
                                               const LinePlan& plan) {
  check_line_plan(plan, static_cast<size_t>(size));

  std::vector<int> dd = plan.diff_diags;
  std::sort(dd.begin(), dd.end());
  std::map<int, int> ss_left, cols_left, rows_left;  // value -> remaining
  for (int s : plan.sum_diags) ++ss_left[s];
  for (int c : plan.columns) ++cols_left[c];
  for (int r : plan.rows) ++rows_left[r];

  std::set<std::vector<CenteredSquare>> seen;
  std::vector<QueenSet> out;
  std::vector<CenteredSquare> acc;

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == dd.size()) {
      std::vector<CenteredSquare> key = acc;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return;
      QueenSet qs = centered_to_corner(key, dims);
      if (is_zero_cover(qs)) out.push_back(std::move(qs));
      return;
    }
    const int d = dd[i];
    for (auto& [s, left] : ss_left) {
      if (left == 0 || (s - d) % 2 != 0) continue;
      const int x = (s - d) / 2, y = (s + d) / 2;  // unit centered coords
      if (!centered_fits(CenteredSquare{2 * x, 2 * y}, dims)) continue;
      auto cit = cols_left.find(x);
      if (cit == cols_left.end() || cit->second == 0) continue;
      auto rit = rows_left.find(y);
      if (rit == rows_left.end() || rit->second == 0) continue;
      --left;
      --cit->second;
      --rit->second;
      acc.push_back({2 * x, 2 * y});
      self(self, i + 1);
      acc.pop_back();
      ++left;
      ++cit->second;
      ++rit->second;
    }
  };
  rec(rec, 0);
  return out;
}

// The worked 13 x 19 example: required diagonals {+-1,+-3,+-5,+-9} in both
// families, auxiliary d = +-13, s = +-7, required rows {0,+-2,+-4,+-6} with
// auxiliary rows {0, +-2}, and all ten odd column numbers required.
inline std::pair<BoardDims, LinePlan> example1_plan() {
  LinePlan plan;
  plan.columns = {-9, -7, -5, -3, -1, 1, 3, 5, 7, 9};
  plan.rows = {-6, -4, -2, -2, 0, 0, 2, 2, 4, 6};
  plan.diff_diags = {-13, -9, -5, -3, -1, 1, 3, 5, 9, 13};
  plan.sum_diags = {-9, -7, -5, -3, -1, 1, 3, 5, 7, 9};
  return {BoardDims(13, 19), plan};
}

// ---------------------------------------------------------------------
// Centrally strong sets
// ---------------------------------------------------------------------

// Parameters (m1, n1, k) of a central m1 x n1 sub-board with the k
// outermost diagonals of each family omitted, and the board/size values
// they determine.
struct CentralParams {
  int m1 = 0, n1 = 0, k = 0;

  int m() const { return m1 + 2 * n1 - 2 * k; }
  int n() const { return 2 * m1 + n1 - 2 * k; }
  int g() const { return m1 + n1 - 2 * k - 1; }
  int aux_cols() const { return m1 - 2 * k - 1; }
  int aux_rows() const { return n1 - 2 * k - 1; }
  BoardDims board() const { return BoardDims(m(), n()); }
};

inline CentralParams central_params(int m1, int n1, int k) {
  if (m1 < n1 || n1 < 1) throw Error("central_params: need m1 >= n1 >= 1");
  if (m1 % 2 == 0 && n1 % 2 == 0)
    throw InvalidParity("central_params: m1 and n1 must not both be even");
  if (k < 0 || n1 - 2 * k - 1 < 0 || m1 - 2 * k - 1 < 0)
    throw NegativeAuxCount("central_params: auxiliary line count negative");
  return CentralParams{m1, n1, k};
}

inline long long choose3(long long v) {
  return v < 3 ? 0 : v * (v - 1) * (v - 2) / 6;
}

// Required squared-sum of the auxiliary orthogonal numbers:
// 2[C(g+1,3) - C(m1+1,3) - C(n1+1,3)].
inline long long sum_orth(const CentralParams& p) {
  return 2 * (choose3(p.g() + 1) - choose3(p.m1 + 1) - choose3(p.n1 + 1));
}

// A centrally strong set in the doubled centered frame.
struct StrongSet {
  std::vector<CenteredSquare> squares;
  CentralParams params;
  bool strict = false;

  QueenSet to_board() const {
    return centered_to_corner(squares, params.board());
  }
};

namespace detail {

// Occupied-diagonal target: every diagonal number of the central
// sub-board except the outermost k on each side, stepping by two.
inline std::vector<int> required_diagonals(const CentralParams& p) {
  const int top = p.m1 + p.n1 - 2 - 2 * p.k;
  std::vector<int> out;
  for (int d = -top; d <= top; d += 2) out.push_back(d);
  return out;
}

inline bool strong_strict(const std::vector<CenteredSquare>& sq,
                          const CentralParams& p) {
  for (CenteredSquare s : sq)
    if (std::abs(s.x2) > p.n1 - 1 || std::abs(s.y2) > p.m1 - 1) return false;
  return true;
}

}  // namespace detail

// Check the centrally strong invariants for a candidate square list.
inline bool is_centrally_strong(const std::vector<CenteredSquare>& sq,
                                const CentralParams& p) {
  if (static_cast<int>(sq.size()) != p.g()) return false;
  std::vector<int> dd, ss;
  std::set<int> cols, rows;
  for (CenteredSquare s : sq) {
    if (!centered_fits(s, p.board())) return false;
    dd.push_back(s.diff_diag());
    ss.push_back(s.sum_diag());
    cols.insert(s.x2);
    rows.insert(s.y2);
  }
  std::sort(dd.begin(), dd.end());
  std::sort(ss.begin(), ss.end());
  const std::vector<int> want = detail::required_diagonals(p);
  if (dd != want || ss != want) return false;
  for (int x = -(p.n1 - 1); x <= p.n1 - 1; x += 2)
    if (!cols.count(x)) return false;
  for (int y = -(p.m1 - 1); y <= p.m1 - 1; y += 2)
    if (!rows.count(y)) return false;
  return true;
}

// All centrally strong sets for the given parameters, by matching each
// occupied difference diagonal to a sum diagonal under the orthogonal
// coverage constraints.  Every result dominates the (m, n) board.
inline std::vector<StrongSet> centrally_strong_search(const CentralParams& p,
                                                      bool strict_only) {
  const std::vector<int> diags = detail::required_diagonals(p);
  const int g = p.g();
  std::vector<bool> s_used(diags.size(), false);
  std::vector<CenteredSquare> acc;

  // Required-orthogonal coverage tracking.
  auto col_needed = [&](int x) {
    return std::abs(x) <= p.n1 - 1;  // parity matches automatically
  };
  auto row_needed = [&](int y) { return std::abs(y) <= p.m1 - 1; };
  std::map<int, int> col_hits, row_hits;
  int cols_missing = p.n1, rows_missing = p.m1;

  std::vector<StrongSet> out;
  auto rec = [&](auto&& self, int i) -> void {
    if (cols_missing > g - i || rows_missing > g - i) return;
    if (i == g) {
      std::vector<CenteredSquare> sq = acc;
      std::sort(sq.begin(), sq.end());
      bool strict = detail::strong_strict(sq, p);
      if (strict_only && !strict) return;
      out.push_back(StrongSet{std::move(sq), p, strict});
      return;
    }
    const int d = diags[i];
    for (size_t j = 0; j < diags.size(); ++j) {
      if (s_used[j]) continue;
      const int s = diags[j];
      CenteredSquare c{(s - d) / 2, (s + d) / 2};
      if (!centered_fits(c, p.board())) continue;
      if (strict_only &&
          (std::abs(c.x2) > p.n1 - 1 || std::abs(c.y2) > p.m1 - 1))
        continue;
      s_used[j] = true;
      if (col_needed(c.x2) && col_hits[c.x2]++ == 0) --cols_missing;
      if (row_needed(c.y2) && row_hits[c.y2]++ == 0) --rows_missing;
      acc.push_back(c);
      self(self, i + 1);
      acc.pop_back();
      if (col_needed(c.x2) && --col_hits[c.x2] == 0) ++cols_missing;
      if (row_needed(c.y2) && --row_hits[c.y2] == 0) ++rows_missing;
      s_used[j] = false;
    }
  };
  rec(rec, 0);
  return out;
}

// All (m', n') boards the set dominates when translated to fit, for
// m' and n' up to the parameter board.  Checked by direct domination
// per pair over every legal translation.
inline std::set<std::pair<int, int>> applicable_boards(const StrongSet& ss) {
  std::set<std::pair<int, int>> out;
  int max_x2 = 0, max_y2 = 0;
  for (CenteredSquare s : ss.squares) {
    max_x2 = std::max(max_x2, std::abs(s.x2));
    max_y2 = std::max(max_y2, std::abs(s.y2));
  }
  for (int mp = max_y2 + 1; mp <= ss.params.m(); ++mp)
    for (int np = max_x2 + 1; np <= ss.params.n(); ++np) {
      BoardDims dims(mp, np);
      bool dominated = false;
      // translations in doubled coordinates, parity fixed by the board
      for (int ty = -(mp - 1) + max_y2; ty <= (mp - 1) - max_y2 && !dominated;
           ++ty)
        for (int tx = -(np - 1) + max_x2; tx <= (np - 1) - max_x2 && !dominated;
             ++tx) {
          std::vector<CenteredSquare> moved;
          bool fits = true;
          for (CenteredSquare s : ss.squares) {
            CenteredSquare t{s.x2 + tx, s.y2 + ty};
            if (!centered_fits(t, dims)) {
              fits = false;
              break;
            }
            moved.push_back(t);
          }
          if (fits && centered_to_corner(moved, dims).dominates())
            dominated = true;
        }
      if (dominated) out.insert({mp, np});
    }
  return out;
}

// The m-2 queens filling the central column of Q_{m x (2m-3)}.
inline QueenSet family_prop5(int m) {
  if (m < 3) throw Error("family_prop5: m >= 3");
  const BoardDims dims(m, 2 * m - 3);
  std::vector<Square> sq;
  for (int y = 2; y <= m - 1; ++y) sq.push_back(Square{m - 1, y});
  return QueenSet(dims, std::move(sq));
}

// Strict centrally strong family for n1 = 5, k = 1, odd m1 >= 5.
inline StrongSet family_n1_5(int m1) {
  if (m1 < 5 || m1 % 2 == 0)
    throw InvalidM1("family_n1_5: need odd m1 >= 5");
  std::vector<std::pair<int, int>> d;
  if (m1 % 4 == 1) {
    push_pm(d, -1, (m1 - 1) / 2);
    d.emplace_back(0, 0);
    for (int i = 1; i <= (m1 - 1) / 4; ++i) {
      push_pm(d, 0, 2 * i);
      push_pm(d, 2, (m1 + 5) / 2 - 4 * i);
    }
  } else {
    push_pm(d, 1, (m1 - 1) / 2);
    push_pm(d, -1, (m1 - 1) / 2);
    push_pm(d, -1, (m1 - 3) / 2);
    d.emplace_back(0, 0);
    for (int i = 1; i <= (m1 - 7) / 4; ++i) push_pm(d, 0, 2 * i);
    for (int i = 1; i <= (m1 - 3) / 4; ++i)
      push_pm(d, 2, (m1 + 3) / 2 - 4 * i);
  }
  StrongSet ss{doubled(d), central_params(m1, 5, 1), false};
  std::sort(ss.squares.begin(), ss.squares.end());
  ss.strict = detail::strong_strict(ss.squares, ss.params);
  return ss;
}

// Strict centrally strong family for n1 = 7, k = 2, odd m1 >= 7.
inline StrongSet family_n1_7(int m1) {
  if (m1 < 7 || m1 % 2 == 0)
    throw InvalidM1("family_n1_7: need odd m1 >= 7");
  std::vector<std::pair<int, int>> d;
  if (m1 == 7) {
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j)
        d.emplace_back(i * 1 + j * 2, i * 2 + j * -1);
  } else if (m1 == 9) {
    d.emplace_back(0, 0);
    push_pm(d, 1, 4);
    push_pm(d, 2, -3);
    for (int j = -1; j <= 1; ++j) push_pm(d, 1 + 2 * j, 2 - j);
  } else {
    const int l1 = (m1 - 11) / 4;
    const int l2 = (m1 - 11 + 3) / 4;  // ceil
    auto sgn = [](int e) { return e % 2 == 0 ? 1 : -1; };
    d.emplace_back(0, 0);
    push_pm(d, 1, 2);
    push_pm(d, 2, -3);
    push_pm(d, 3, -1);
    push_pm(d, sgn(l1), -2 * l1 - 5);
    push_pm(d, -sgn(l2), -2 * l2 - 4);
    for (int j = 1; j <= (l2 + 1) / 2; ++j) {
      push_pm(d, 2, 4 * j);
      push_pm(d, 2, 4 * j + 1);
    }
    for (int j = 1; j <= l2 / 2; ++j) {
      push_pm(d, 2, -4 * j - 2);
      push_pm(d, 2, -4 * j - 3);
    }
    if (l2 == l1) push_pm(d, 2, sgn(l1) * (2 * l1 + 4));
  }
  StrongSet ss{doubled(d), central_params(m1, 7, 2), false};
  std::sort(ss.squares.begin(), ss.squares.end());
  ss.strict = detail::strong_strict(ss.squares, ss.params);
  return ss;
}

// The largest k <= (n1-1)/2 for which a centrally strong set exists;
// larger feasible k dominates the usefulness of smaller ones.
inline std::optional<int> largest_feasible_k(int m1, int n1,
                                             int k_max_search = -1) {
  int hi = (std::min(m1, n1) - 1) / 2;
  if (k_max_search >= 0) hi = std::min(hi, k_max_search);
  for (int k = hi; k >= 0; --k) {
    CentralParams p;
    try {
      p = central_params(m1, n1, k);
    } catch (const Error&) {
      continue;
    }
    if (!centrally_strong_search(p, /*strict_only=*/false).empty()) return k;
  }
  return std::nullopt;
}

}  // namespace qdom

#endif  // QDOM_CONSTRUCTIONS_HPP
