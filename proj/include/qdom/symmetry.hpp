// symmetry.hpp -- board isometries, canonical forms, equivalence classes,
// foursome detection and flipping, and the flip-closure partition.

#ifndef QDOM_SYMMETRY_HPP
#define QDOM_SYMMETRY_HPP

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "qdom/board.hpp"

namespace qdom {

struct InvalidIsometry : Error {
  using Error::Error;
};
struct MixedDims : Error {
  using Error::Error;
};
struct NotASubset : Error {
  using Error::Error;
};
struct OffBoard : Error {
  using Error::Error;
};

// The dihedral board isometries.  A rectangle with m != n admits the
// first four; a square board admits all eight.
enum class Isometry : uint8_t {
  Identity,
  FlipH,    // x -> n+1-x
  FlipV,    // y -> m+1-y
  Rot180,
  Transpose,      // (x, y) -> (y, x), square only
  AntiTranspose,  // (x, y) -> (n+1-y, n+1-x), square only
  Rot90,          // (x, y) -> (n+1-y, x), square only
  Rot270,         // (x, y) -> (y, n+1-x), square only
};

inline bool isometry_valid(Isometry iso, BoardDims dims) {
  return static_cast<int>(iso) < 4 || dims.m == dims.n;
}

inline const char* isometry_name(Isometry iso) {
  switch (iso) {
    case Isometry::Identity:      return "identity";
    case Isometry::FlipH:         return "flip-h";
    case Isometry::FlipV:         return "flip-v";
    case Isometry::Rot180:        return "rot180";
    case Isometry::Transpose:     return "transpose";
    case Isometry::AntiTranspose: return "anti-transpose";
    case Isometry::Rot90:         return "rot90";
    case Isometry::Rot270:        return "rot270";
  }
  return "?";
}

inline std::vector<Isometry> isometries_of(BoardDims dims) {
  std::vector<Isometry> out = {Isometry::Identity, Isometry::FlipH,
                               Isometry::FlipV, Isometry::Rot180};
  if (dims.m == dims.n)
    out.insert(out.end(), {Isometry::Transpose, Isometry::AntiTranspose,
                           Isometry::Rot90, Isometry::Rot270});
  return out;
}

inline Square apply(Isometry iso, Square s, BoardDims dims) {
  const int m = dims.m, n = dims.n;
  switch (iso) {
    case Isometry::Identity:      return s;
    case Isometry::FlipH:         return {n + 1 - s.x, s.y};
    case Isometry::FlipV:         return {s.x, m + 1 - s.y};
    case Isometry::Rot180:        return {n + 1 - s.x, m + 1 - s.y};
    case Isometry::Transpose:     return {s.y, s.x};
    case Isometry::AntiTranspose: return {n + 1 - s.y, n + 1 - s.x};
    case Isometry::Rot90:         return {n + 1 - s.y, s.x};
    case Isometry::Rot270:        return {s.y, n + 1 - s.x};
  }
  throw Error("apply: bad isometry");
}

inline QueenSet apply(Isometry iso, const QueenSet& s) {
  if (!isometry_valid(iso, s.dims()))
    throw InvalidIsometry("diagonal/90-degree isometry on a non-square board");
  std::vector<Square> out;
  out.reserve(s.squares().size());
  for (Square q : s.squares()) out.push_back(apply(iso, q, s.dims()));
  return QueenSet(s.dims(), std::move(out));
}

// Lexicographically smallest row-major square list over all valid
// isometries.  Constant on orbits, idempotent.
inline QueenSet canonical(const QueenSet& s) {
  QueenSet best = s;
  for (Isometry iso : isometries_of(s.dims())) {
    QueenSet img = apply(iso, s);
    if (img < best) best = img;
  }
  return best;
}

struct EquivClass {
  QueenSet representative;  // canonical form
  int size = 0;             // distinct concrete sets in the class
};

// Partition by canonical form.  Input sets must share one board.
inline std::vector<EquivClass> classes(const std::vector<QueenSet>& sets) {
  std::map<QueenSet, std::vector<QueenSet>> by_canon;
  for (const QueenSet& s : sets) {
    if (!sets.empty() && !(s.dims() == sets.front().dims()))
      throw MixedDims("classes: sets on different boards");
    by_canon[canonical(s)].push_back(s);
  }
  std::vector<EquivClass> out;
  for (auto& [rep, members] : by_canon) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back(EquivClass{rep, static_cast<int>(members.size())});
  }
  return out;
}

// Four squares (x+a, y+b), (x-a, y-b), (x-b, y+a), (x+b, y-a) about a
// common center (x, y).  The center and the offsets may be half-integers,
// so everything is stored doubled: the center is (cx2/2, cy2/2) and the
// offsets are (a2/2, b2/2).
struct Foursome {
  int cx2 = 0, cy2 = 0;
  int a2 = 0, b2 = 0;

  std::array<Square, 4> members() const {
    auto sq = [&](int dx2, int dy2) {
      return Square{(cx2 + dx2) / 2, (cy2 + dy2) / 2};
    };
    return {sq(a2, b2), sq(-a2, -b2), sq(-b2, a2), sq(b2, -a2)};
  }

  friend bool operator==(Foursome, Foursome) = default;
};

namespace detail {

// Normalized (a2, b2) among the four rotation-equivalent parameter
// choices: prefer a > 0 and a > |b|; the degenerate b = -a case falls
// back to the largest pair with a > 0.
inline std::pair<int, int> normalize_foursome_params(int a2, int b2) {
  std::array<std::pair<int, int>, 4> rots = {
      std::pair{a2, b2}, {-a2, -b2}, {-b2, a2}, {b2, -a2}};
  for (auto [a, b] : rots)
    if (a > 0 && a > std::abs(b)) return {a, b};
  std::pair<int, int> best{0, 0};
  for (auto [a, b] : rots)
    if (a > 0 && std::pair{a, b} > best) best = {a, b};
  return best;
}

}  // namespace detail

// Whether four squares form a foursome; returns the normalized parameters.
inline std::optional<Foursome> as_foursome(std::array<Square, 4> sq) {
  int sx = 0, sy = 0;
  for (Square s : sq) sx += s.x, sy += s.y;
  if (sx % 2 != 0 || sy % 2 != 0) return std::nullopt;
  const int cx2 = sx / 2, cy2 = sy / 2;
  std::array<std::pair<int, int>, 4> off;
  for (int i = 0; i < 4; ++i)
    off[i] = {2 * sq[i].x - cx2, 2 * sq[i].y - cy2};
  auto [a2, b2] = off[0];
  if (a2 == 0 || b2 == 0 || a2 == b2) return std::nullopt;
  std::array<std::pair<int, int>, 4> want = {
      std::pair{a2, b2}, {-a2, -b2}, {-b2, a2}, {b2, -a2}};
  std::sort(off.begin(), off.end());
  std::sort(want.begin(), want.end());
  if (off != want) return std::nullopt;
  auto [na, nb] = detail::normalize_foursome_params(a2, b2);
  return Foursome{cx2, cy2, na, nb};
}

// Every 4-subset of s matching the foursome pattern, each reported once.
// Brute force over 4-subsets; fine at desk scale.
inline std::vector<Foursome> foursomes_of(const QueenSet& s) {
  const auto& sq = s.squares();
  const int k = static_cast<int>(sq.size());
  std::vector<Foursome> out;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int p = j + 1; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
          if (auto f = as_foursome({sq[i], sq[j], sq[p], sq[q]}))
            out.push_back(*f);
  return out;
}

// Replace the foursome's members with their reflections across the
// horizontal line through the foursome center.  The result occupies
// exactly the same lines; flip . flip = identity.
inline QueenSet flip(const QueenSet& s, const Foursome& f) {
  auto members = f.members();
  for (Square q : members)
    if (!s.contains(q)) throw NotASubset("flip: foursome not in set");
  std::vector<Square> out;
  for (Square q : s.squares()) {
    bool in_foursome =
        std::find(members.begin(), members.end(), q) != members.end();
    if (!in_foursome) {
      out.push_back(q);
      continue;
    }
    Square img{q.x, f.cy2 - q.y};
    if (!s.dims().contains(img))
      throw OffBoard("flip: image square leaves the board");
    out.push_back(img);
  }
  return QueenSet(s.dims(), std::move(out));
}

// Transitive closure of "equivalent, or one foursome-flip apart", on a
// list of equivalence classes of one board.  Cells are sorted lists of
// class representatives.
inline std::vector<std::vector<QueenSet>> partition(
    const std::vector<EquivClass>& cls) {
  const int k = static_cast<int>(cls.size());
  std::map<QueenSet, int> index;
  for (int i = 0; i < k; ++i) index.emplace(cls[i].representative, i);

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int i = 0; i < k; ++i) {
    const QueenSet& rep = cls[i].representative;
    for (const Foursome& f : foursomes_of(rep)) {
      QueenSet flipped = rep;
      try {
        flipped = flip(rep, f);
      } catch (const OffBoard&) {
        continue;  // only legal flips enter the relation
      }
      auto it = index.find(canonical(flipped));
      if (it != index.end()) unite(i, it->second);
    }
  }

  std::map<int, std::vector<QueenSet>> cells;
  for (int i = 0; i < k; ++i) cells[find(i)].push_back(cls[i].representative);
  std::vector<std::vector<QueenSet>> out;
  for (auto& [root, members] : cells) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace qdom

#endif  // QDOM_SYMMETRY_HPP
