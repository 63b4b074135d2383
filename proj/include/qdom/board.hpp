// board.hpp -- board geometry for the queens graph Q_{m x n}:
// squares, the four line families, attack relations, coverage masks,
// and domination testing.
//
// Coordinates are 1-based with the origin at the lower left corner:
// square (x, y) is in column x (1..n) and row y (1..m).

#ifndef QDOM_BOARD_HPP
#define QDOM_BOARD_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfBounds : Error {
  using Error::Error;
};
struct DuplicateSquare : Error {
  using Error::Error;
};

struct Square {
  int x = 0;  // column
  int y = 0;  // row

  friend bool operator==(Square, Square) = default;
};

// Row-major order: by row, then by column.
inline bool row_major_less(Square a, Square b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

struct BoardDims {
  int m = 0;  // rows
  int n = 0;  // columns

  BoardDims() = default;
  BoardDims(int rows, int cols) : m(rows), n(cols) {
    if (m < 1 || n < 1) throw Error("BoardDims: need m >= 1 and n >= 1");
  }

  int square_count() const { return m * n; }
  bool contains(Square s) const {
    return s.x >= 1 && s.x <= n && s.y >= 1 && s.y <= m;
  }
  friend bool operator==(BoardDims, BoardDims) = default;
};

enum class LineKind : uint8_t { Column, Row, DiffDiag, SumDiag };

// A line of the board.  Columns are numbered by x, rows by y,
// difference diagonals by y - x, sum diagonals by y + x.
struct LineId {
  LineKind kind;
  int number;

  friend bool operator==(LineId, LineId) = default;
  friend bool operator<(LineId a, LineId b) {
    return a.kind != b.kind ? a.kind < b.kind : a.number < b.number;
  }
};

inline std::array<LineId, 4> lines_of(Square s) {
  return {LineId{LineKind::Column, s.x}, LineId{LineKind::Row, s.y},
          LineId{LineKind::DiffDiag, s.y - s.x},
          LineId{LineKind::SumDiag, s.y + s.x}};
}

// True iff a != b and they share a row, column, or diagonal.
inline bool attacks(Square a, Square b) {
  if (a == b) return false;
  return a.x == b.x || a.y == b.y || a.y - a.x == b.y - b.x ||
         a.y + a.x == b.y + b.x;
}

// One bit per board square, chunked in 64-bit words.
// Bit index of square (x, y) on an m x n board is (y-1)*n + (x-1).
class Bitboard {
 public:
  Bitboard() = default;
  explicit Bitboard(int nbits)
      : nbits_(nbits), words_((static_cast<size_t>(nbits) + 63) / 64, 0) {}

  int bit_count() const { return nbits_; }

  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= word_bit(i); }
  void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~word_bit(i); }
  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] & word_bit(i)) != 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool all() const { return count() == nbits_; }
  bool none() const {
    for (uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  // Index of the lowest set bit, or -1 if none.
  int first_set() const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0)
        return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  // Lowest clear bit below bit_count(), or -1 if all set.
  int first_clear() const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = ~words_[k];
      if (k + 1 == words_.size() && nbits_ % 64 != 0)
        w &= (uint64_t{1} << (nbits_ % 64)) - 1;
      if (w != 0) return static_cast<int>(k * 64 + std::countr_zero(w));
    }
    return -1;
  }

  Bitboard& operator|=(const Bitboard& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitboard& operator&=(const Bitboard& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  friend Bitboard operator|(Bitboard a, const Bitboard& b) { return a |= b; }
  friend Bitboard operator&(Bitboard a, const Bitboard& b) { return a &= b; }
  friend bool operator==(const Bitboard&, const Bitboard&) = default;

  // Number of set bits among indices [lo, lo+len).
  int count_range(int lo, int len) const {
    int c = 0;
    for (int i = lo; i < lo + len; ++i) c += test(i);
    return c;
  }

 private:
  static uint64_t word_bit(int i) { return uint64_t{1} << (i & 63); }

  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

inline int square_index(Square s, BoardDims dims) {
  return (s.y - 1) * dims.n + (s.x - 1);
}
inline Square square_at(int index, BoardDims dims) {
  return Square{index % dims.n + 1, index / dims.n + 1};
}

// Closed attack neighborhood of one queen: self plus every square it attacks.
inline Bitboard single_coverage(Square q, BoardDims dims) {
  if (!dims.contains(q))
    throw OutOfBounds("square (" + std::to_string(q.x) + "," +
                      std::to_string(q.y) + ") not on board");
  Bitboard bb(dims.square_count());
  for (int y = 1; y <= dims.m; ++y)
    for (int x = 1; x <= dims.n; ++x) {
      Square s{x, y};
      if (s == q || attacks(q, s)) bb.set(square_index(s, dims));
    }
  return bb;
}

inline Bitboard coverage_mask(std::span<const Square> queens, BoardDims dims) {
  Bitboard bb(dims.square_count());
  for (Square q : queens) bb |= single_coverage(q, dims);
  return bb;
}

inline bool is_dominating(std::span<const Square> queens, BoardDims dims) {
  return coverage_mask(queens, dims).all();
}

// An ordered set of distinct on-board squares with precomputed coverage
// and occupied-line data.  Immutable after construction.
class QueenSet {
 public:
  QueenSet(BoardDims dims, std::vector<Square> squares)
      : dims_(dims), squares_(std::move(squares)) {
    std::sort(squares_.begin(), squares_.end(), row_major_less);
    for (size_t i = 0; i < squares_.size(); ++i) {
      if (!dims_.contains(squares_[i]))
        throw OutOfBounds("QueenSet: square (" +
                          std::to_string(squares_[i].x) + "," +
                          std::to_string(squares_[i].y) + ") off board");
      if (i > 0 && squares_[i] == squares_[i - 1])
        throw DuplicateSquare("QueenSet: duplicate square");
    }
    coverage_ = coverage_mask(squares_, dims_);
    for (Square s : squares_) {
      auto ls = lines_of(s);
      occupied_lines_.insert(occupied_lines_.end(), ls.begin(), ls.end());
    }
    std::sort(occupied_lines_.begin(), occupied_lines_.end());
  }

  BoardDims dims() const { return dims_; }
  const std::vector<Square>& squares() const { return squares_; }
  int size() const { return static_cast<int>(squares_.size()); }
  const Bitboard& coverage() const { return coverage_; }

  // All occupied lines, with multiplicity, sorted; 4 per queen.
  const std::vector<LineId>& occupied_lines() const { return occupied_lines_; }

  // Occupied lines as a set (multiplicity dropped).
  std::vector<LineId> line_set() const {
    std::vector<LineId> out = occupied_lines_;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool dominates() const { return coverage_.all(); }
  bool contains(Square s) const {
    return std::find(squares_.begin(), squares_.end(), s) != squares_.end();
  }

  // No two members attack each other.
  bool independent() const {
    for (size_t i = 0; i < squares_.size(); ++i)
      for (size_t j = i + 1; j < squares_.size(); ++j)
        if (attacks(squares_[i], squares_[j])) return false;
    return true;
  }

  friend bool operator==(const QueenSet& a, const QueenSet& b) {
    return a.dims_ == b.dims_ && a.squares_ == b.squares_;
  }
  friend bool operator<(const QueenSet& a, const QueenSet& b) {
    return std::lexicographical_compare(
        a.squares_.begin(), a.squares_.end(), b.squares_.begin(),
        b.squares_.end(), row_major_less);
  }

 private:
  BoardDims dims_;
  std::vector<Square> squares_;
  Bitboard coverage_;
  std::vector<LineId> occupied_lines_;
};

// Swap m <-> n and (x, y) <-> (y, x); domination status is preserved.
inline QueenSet transpose(const QueenSet& s) {
  std::vector<Square> out;
  out.reserve(s.squares().size());
  for (Square q : s.squares()) out.push_back(Square{q.y, q.x});
  return QueenSet(BoardDims(s.dims().n, s.dims().m), std::move(out));
}

}  // namespace qdom

#endif  // QDOM_BOARD_HPP
