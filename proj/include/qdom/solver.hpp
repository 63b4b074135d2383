// solver.hpp -- exact computation of gamma(Q_{m x n}), enumeration of all
// minimum dominating sets, and max-coverage search with k queens, via
// branch-and-bound backtracking.
//
// Branching: the first uncovered square in row-major order; candidates are
// the squares covering it, tried in ascending Chebyshev distance from the
// board center.  Depth is capped by the current target k; a row/column
// counting cutoff (a queen covers at most three squares of a row or column
// it does not sit on) prunes hopeless nodes.

#ifndef QDOM_SOLVER_HPP
#define QDOM_SOLVER_HPP

#include <atomic>
#include <chrono>
#include <optional>
#include <set>
#include <thread>

#include "qdom/board.hpp"
#include "qdom/bounds.hpp"
#include "qdom/symmetry.hpp"

namespace qdom {

struct InputNotDominating : Error {
  using Error::Error;
};

struct SearchBudget {
  std::optional<int> max_queens;
  std::optional<long long> node_limit;
  std::optional<double> time_limit_seconds;
  int threads = 1;
};

enum class SolveStatus { Exact, Incomplete };

struct SolveOutcome {
  int gamma = 0;  // exact value, or the best proved lower bound if Incomplete
  std::vector<QueenSet> witnesses;
  SolveStatus status = SolveStatus::Incomplete;
  long long nodes = 0;
  double elapsed_seconds = 0.0;
};

namespace detail {

struct BudgetExceededSignal {};

// Flat-array search engine for one board.  Word-packed coverage masks;
// all per-depth scratch is preallocated.
class Engine {
 public:
  Engine(BoardDims dims, const SearchBudget& budget)
      : dims_(dims),
        nsq_(dims.square_count()),
        words_((nsq_ + 63) / 64),
        budget_(budget),
        start_(std::chrono::steady_clock::now()) {
    build_masks();
  }

  long long nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  // All dominating sets of exactly k queens (duplicates removed), or just
  // the first if first_only.  Throws BudgetExceededSignal on budget expiry.
  std::vector<std::vector<int>> search(int k, bool first_only) {
    k_ = k;
    first_only_ = first_only;
    solutions_.clear();
    chosen_.assign(k, -1);
    cover_stack_.assign(static_cast<size_t>(k + 1) * words_, 0);
    banned_.assign(nsq_, 0);
    banned_at_depth_.assign(k + 1, {});
    for (auto& v : banned_at_depth_) v.reserve(nsq_);
    dfs(0);
    return {solutions_.begin(), solutions_.end()};
  }

  QueenSet to_queen_set(const std::vector<int>& idx) const {
    std::vector<Square> sq;
    sq.reserve(idx.size());
    for (int i : idx) sq.push_back(square_at(i, dims_));
    return QueenSet(dims_, std::move(sq));
  }

  // Maximum closed-neighborhood size over all squares.
  int max_cover() const { return max_cover_; }

 private:
  void build_masks() {
    cover_.assign(static_cast<size_t>(nsq_) * words_, 0);
    for (int i = 0; i < nsq_; ++i) {
      Bitboard bb = single_coverage(square_at(i, dims_), dims_);
      uint64_t* w = &cover_[static_cast<size_t>(i) * words_];
      for (int b = 0; b < nsq_; ++b)
        if (bb.test(b)) w[b >> 6] |= uint64_t{1} << (b & 63);
      max_cover_ = std::max(max_cover_, bb.count());
    }
    // Candidates covering each square, center-first.
    cand_.assign(nsq_, {});
    for (int t = 0; t < nsq_; ++t) {
      Square ts = square_at(t, dims_);
      for (int c = 0; c < nsq_; ++c) {
        Square cs = square_at(c, dims_);
        if (cs == ts || attacks(cs, ts)) cand_[t].push_back(c);
      }
      auto center_dist = [&](int c) {
        Square s = square_at(c, dims_);
        return std::max(std::abs(2 * s.x - (dims_.n + 1)),
                        std::abs(2 * s.y - (dims_.m + 1)));
      };
      std::stable_sort(cand_[t].begin(), cand_[t].end(),
                       [&](int a, int b) {
                         int da = center_dist(a), db = center_dist(b);
                         return da != db ? da < db : a < b;
                       });
    }
  }

  void tick() {
    if (++nodes_ % 4096 == 0) {
      if (budget_.node_limit && nodes_ > *budget_.node_limit)
        throw BudgetExceededSignal{};
      if (budget_.time_limit_seconds && elapsed() > *budget_.time_limit_seconds)
        throw BudgetExceededSignal{};
      if (stop_flag_ && stop_flag_->load(std::memory_order_relaxed))
        throw BudgetExceededSignal{};
    }
    if (budget_.node_limit && nodes_ > *budget_.node_limit)
      throw BudgetExceededSignal{};
  }

  const uint64_t* cover_words(int sq) const {
    return &cover_[static_cast<size_t>(sq) * words_];
  }

  int first_uncovered(const uint64_t* cov) const {
    for (int w = 0; w < words_; ++w) {
      uint64_t u = ~cov[w];
      if (w == words_ - 1 && nsq_ % 64 != 0)
        u &= (uint64_t{1} << (nsq_ % 64)) - 1;
      if (u != 0) return w * 64 + std::countr_zero(u);
    }
    return -1;
  }

  // Rows (or columns) holding more uncovered squares than r queens could
  // cover from outside must each receive a queen; more than r of them is
  // a dead end.
  bool counting_prune(const uint64_t* cov, int remaining) const {
    const int cap = 3 * remaining;
    int heavy_rows = 0;
    for (int y = 0; y < dims_.m; ++y) {
      int unc = 0;
      const int base = y * dims_.n;
      for (int x = 0; x < dims_.n; ++x) {
        int b = base + x;
        unc += !((cov[b >> 6] >> (b & 63)) & 1);
      }
      if (unc > cap && ++heavy_rows > remaining) return true;
    }
    int heavy_cols = 0;
    for (int x = 0; x < dims_.n; ++x) {
      int unc = 0;
      for (int y = 0; y < dims_.m; ++y) {
        int b = y * dims_.n + x;
        unc += !((cov[b >> 6] >> (b & 63)) & 1);
      }
      if (unc > cap && ++heavy_cols > remaining) return true;
    }
    return false;
  }

  int uncovered_count(const uint64_t* cov) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(cov[w]);
    return nsq_ - c;
  }

  void dfs(int depth) {
    tick();
    const uint64_t* cov = &cover_stack_[static_cast<size_t>(depth) * words_];
    const int target = first_uncovered(cov);
    if (target < 0) {
      std::vector<int> sol(chosen_.begin(), chosen_.begin() + depth);
      std::sort(sol.begin(), sol.end());
      solutions_.insert(std::move(sol));
      if (first_only_) throw FoundSignal{};
      return;
    }
    const int remaining = k_ - depth;
    if (remaining <= 0) return;
    if (uncovered_count(cov) > remaining * max_cover_) return;
    if (3 * remaining < std::max(dims_.m, dims_.n) &&
        counting_prune(cov, remaining))
      return;

    // Every dominating set covers `target`, so it contains at least one of
    // its candidates; the branch for the earliest such candidate produces
    // the set, because all earlier candidates are banned inside that branch.
    // Banning tried candidates in later branches makes each set appear in
    // exactly one leaf, instead of once per ordering of its queens.
    uint64_t* next = &cover_stack_[static_cast<size_t>(depth + 1) * words_];
    auto& banned_here = banned_at_depth_[depth];
    banned_here.clear();
    for (int c : cand_[target]) {
      if (banned_[c]) continue;
      const uint64_t* cw = cover_words(c);
      for (int w = 0; w < words_; ++w) next[w] = cov[w] | cw[w];
      chosen_[depth] = c;
      dfs(depth + 1);
      banned_[c] = 1;
      banned_here.push_back(c);
    }
    for (int c : banned_here) banned_[c] = 0;
  }

 public:
  struct FoundSignal {};
  void set_stop_flag(std::atomic<bool>* f) { stop_flag_ = f; }

  // Run search(k, first_only) translating the early-exit signal.
  std::vector<std::vector<int>> run(int k, bool first_only) {
    try {
      return search(k, first_only);
    } catch (const FoundSignal&) {
      return {solutions_.begin(), solutions_.end()};
    }
  }

 private:
  BoardDims dims_;
  int nsq_;
  int words_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<bool>* stop_flag_ = nullptr;

  std::vector<uint64_t> cover_;
  std::vector<std::vector<int>> cand_;
  int max_cover_ = 0;

  int k_ = 0;
  bool first_only_ = false;
  long long nodes_ = 0;
  std::vector<int> chosen_;
  std::vector<uint64_t> cover_stack_;
  std::vector<uint8_t> banned_;
  std::vector<std::vector<int>> banned_at_depth_;
  std::set<std::vector<int>> solutions_;
};

}  // namespace detail

// Exact gamma via iterative deepening from the best proved lower bound.
// The board is transposed internally so that m <= n.
inline SolveOutcome gamma(BoardDims dims, const SearchBudget& budget = {}) {
  const bool transposed = dims.m > dims.n;
  if (transposed) dims = BoardDims(dims.n, dims.m);

  detail::Engine eng(dims, budget);
  SolveOutcome out;
  const int lo = std::max(1, best_lower(dims.m, dims.n).best_proved);
  const int hi = budget.max_queens ? std::min(dims.m, *budget.max_queens)
                                   : dims.m;  // a queen per row dominates
  for (int k = lo; k <= hi; ++k) {
    out.gamma = k;  // proved: no dominating set of size < k
    std::vector<std::vector<int>> found;
    try {
      found = eng.run(k, /*first_only=*/true);
    } catch (const detail::BudgetExceededSignal&) {
      out.status = SolveStatus::Incomplete;
      out.nodes = eng.nodes();
      out.elapsed_seconds = eng.elapsed();
      return out;
    }
    if (!found.empty()) {
      QueenSet w = eng.to_queen_set(found.front());
      out.witnesses.push_back(transposed ? transpose(w) : w);
      out.status = SolveStatus::Exact;
      out.nodes = eng.nodes();
      out.elapsed_seconds = eng.elapsed();
      return out;
    }
  }
  out.status = SolveStatus::Incomplete;  // max_queens cap hit
  out.nodes = eng.nodes();
  out.elapsed_seconds = eng.elapsed();
  return out;
}

struct EnumerateOutcome {
  int gamma = 0;
  std::vector<EquivClass> classes;
  SolveStatus status = SolveStatus::Incomplete;
  long long nodes = 0;
  double elapsed_seconds = 0.0;
};

// All minimum dominating sets, deduplicated to equivalence classes.
// Search runs unrestricted; symmetry reduction happens afterwards.
inline EnumerateOutcome enumerate_min(BoardDims dims,
                                      const SearchBudget& budget = {}) {
  const bool transposed = dims.m > dims.n;
  if (transposed) dims = BoardDims(dims.n, dims.m);

  EnumerateOutcome out;
  SolveOutcome g = gamma(dims, budget);
  out.gamma = g.gamma;
  out.nodes = g.nodes;
  if (g.status != SolveStatus::Exact) return out;

  detail::Engine eng(dims, budget);
  std::vector<std::vector<int>> all;
  try {
    all = eng.run(g.gamma, /*first_only=*/false);
    out.status = SolveStatus::Exact;
  } catch (const detail::BudgetExceededSignal&) {
    out.status = SolveStatus::Incomplete;
  }
  std::vector<QueenSet> sets;
  sets.reserve(all.size());
  for (const auto& idx : all) {
    QueenSet s = eng.to_queen_set(idx);
    sets.push_back(transposed ? transpose(s) : s);
  }
  out.classes = classes(sets);
  out.nodes += eng.nodes();
  out.elapsed_seconds = g.elapsed_seconds + eng.elapsed();
  return out;
}

struct NearDominateOutcome {
  int max_covered = 0;
  int square_count = 0;
  std::vector<EquivClass> classes;  // optimal arrangements up to isometry
  long long concrete_count = 0;     // optimal arrangements, concrete
};

// Maximum number of squares coverable by k queens, with every optimal
// arrangement.  Plain combination enumeration with a suffix bound.
inline NearDominateOutcome near_dominating(BoardDims dims, int k) {
  if (k < 1) throw Error("near_dominating: k >= 1");
  const bool transposed = dims.m > dims.n;
  if (transposed) dims = BoardDims(dims.n, dims.m);

  const int nsq = dims.square_count();
  const int words = (nsq + 63) / 64;
  std::vector<uint64_t> cover(static_cast<size_t>(nsq) * words, 0);
  std::vector<int> pop(nsq, 0);
  for (int i = 0; i < nsq; ++i) {
    Bitboard bb = single_coverage(square_at(i, dims), dims);
    uint64_t* w = &cover[static_cast<size_t>(i) * words];
    for (int b = 0; b < nsq; ++b)
      if (bb.test(b)) w[b >> 6] |= uint64_t{1} << (b & 63);
    pop[i] = bb.count();
  }
  // suffix_max[i] = max closed-neighborhood size over squares >= i
  std::vector<int> suffix_max(nsq + 1, 0);
  for (int i = nsq - 1; i >= 0; --i)
    suffix_max[i] = std::max(suffix_max[i + 1], pop[i]);

  // Greedy warm start so that the tie list stays small.
  std::vector<uint64_t> gcov(words, 0);
  int best = 0;
  for (int q = 0; q < std::min(k, nsq); ++q) {
    int pick = -1, gain = -1;
    for (int i = 0; i < nsq; ++i) {
      int g = 0;
      const uint64_t* cw = &cover[static_cast<size_t>(i) * words];
      for (int w = 0; w < words; ++w)
        g += std::popcount(cw[w] & ~gcov[w]);
      if (g > gain) gain = g, pick = i;
    }
    const uint64_t* cw = &cover[static_cast<size_t>(pick) * words];
    for (int w = 0; w < words; ++w) gcov[w] |= cw[w];
  }
  for (int w = 0; w < words; ++w) best += std::popcount(gcov[w]);

  std::vector<std::vector<int>> optima;
  std::vector<int> chosen(k);
  std::vector<uint64_t> stack(static_cast<size_t>(k + 1) * words, 0);

  auto covered_count = [&](const uint64_t* cov) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(cov[w]);
    return c;
  };

  auto rec = [&](auto&& self, int depth, int from) -> void {
    const uint64_t* cov = &stack[static_cast<size_t>(depth) * words];
    const int have = covered_count(cov);
    if (depth == k) {
      if (have > best) {
        best = have;
        optima.clear();
      }
      if (have == best)
        optima.emplace_back(chosen.begin(), chosen.end());
      return;
    }
    const int left = k - depth;
    if (nsq - from < left) return;
    if (have + left * suffix_max[from] < best) return;
    uint64_t* next = &stack[static_cast<size_t>(depth + 1) * words];
    for (int i = from; i <= nsq - left; ++i) {
      const uint64_t* cw = &cover[static_cast<size_t>(i) * words];
      for (int w = 0; w < words; ++w) next[w] = cov[w] | cw[w];
      chosen[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);

  NearDominateOutcome out;
  out.max_covered = best;
  out.square_count = nsq;
  out.concrete_count = static_cast<long long>(optima.size());
  std::vector<QueenSet> sets;
  sets.reserve(optima.size());
  for (const auto& idx : optima) {
    std::vector<Square> sq;
    for (int i : idx) sq.push_back(square_at(i, dims));
    QueenSet s(dims, std::move(sq));
    sets.push_back(transposed ? transpose(s) : s);
  }
  out.classes = classes(sets);
  return out;
}

// Add one edge row, one edge column, and a queen on their shared corner.
// The input must dominate; the result dominates the (m+1) x (n+1) board.
inline QueenSet augment(const QueenSet& s) {
  if (!s.dominates()) throw InputNotDominating("augment: input must dominate");
  const BoardDims big(s.dims().m + 1, s.dims().n + 1);
  // (shift_x, shift_y, corner): shifting moves the new empty row/column
  // to the bottom/left; the corner queen sits where they meet.
  struct Option {
    int sx, sy;
    Square corner;
  };
  const Option options[] = {
      {0, 0, {big.n, big.m}},
      {1, 0, {1, big.m}},
      {0, 1, {big.n, 1}},
      {1, 1, {1, 1}},
  };
  for (const Option& opt : options) {
    std::vector<Square> sq;
    for (Square q : s.squares())
      sq.push_back(Square{q.x + opt.sx, q.y + opt.sy});
    sq.push_back(opt.corner);
    QueenSet cand(big, std::move(sq));
    if (cand.dominates()) return cand;
  }
  throw Error("augment: no corner placement dominates");  // unreachable
}

}  // namespace qdom

#endif  // QDOM_SOLVER_HPP
