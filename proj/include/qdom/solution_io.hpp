// solution_io.hpp -- solution files on disk: a JSON format for sets of
// minimum dominating sets with their symmetry and construction tags, plus
// an HTML appendix renderer.  All on-disk coordinates are 1-based corner
// frame; conversions stay internal.

#ifndef QDOM_SOLUTION_IO_HPP
#define QDOM_SOLUTION_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qdom/constructions.hpp"
#include "qdom/solver.hpp"
#include "qdom/symmetry.hpp"

namespace qdom {

inline constexpr const char* kToolVersion = "1.0.0";

struct ParseError : Error {
  using Error::Error;
};
struct VerificationFailed : Error {
  using Error::Error;
};

struct SolutionTags {
  std::optional<Square> zero_cover;  // origin parities, lowest such square
  std::optional<CentralParams> centrally_strong;
  bool strict = false;

  friend bool operator==(const SolutionTags& a, const SolutionTags& b) {
    auto cp = [](const std::optional<CentralParams>& p)
        -> std::optional<std::tuple<int, int, int>> {
      if (!p) return std::nullopt;
      return std::tuple(p->m1, p->n1, p->k);
    };
    return a.zero_cover == b.zero_cover && cp(a.centrally_strong) == cp(b.centrally_strong) &&
           a.strict == b.strict;
  }
};

struct SolutionRecord {
  QueenSet squares;
  std::string symmetry;  // stabilizer subgroup, e.g. "identity+rot180"
  std::vector<Foursome> foursomes;
  SolutionTags tags;
};

struct SolutionFile {
  BoardDims dims{1, 1};
  int gamma = 0;
  SolveStatus status = SolveStatus::Exact;
  std::string generator;
  std::string version = kToolVersion;
  std::vector<SolutionRecord> records;
};

// Names of the isometries fixing the set, joined with '+'.
inline std::string stabilizer(const QueenSet& s) {
  std::string out;
  for (Isometry iso : isometries_of(s.dims()))
    if (apply(iso, s) == s) {
      if (!out.empty()) out += '+';
      out += isometry_name(iso);
    }
  return out;
}

// Corner frame back to the doubled centered frame.
inline std::vector<CenteredSquare> corner_to_centered(const QueenSet& s) {
  std::vector<CenteredSquare> out;
  const BoardDims d = s.dims();
  for (Square q : s.squares())
    out.push_back({2 * q.x - d.n - 1, 2 * q.y - d.m - 1});
  return out;
}

// Derives symmetry, foursomes, and construction tags for a set.  The set
// is stored as given; callers wanting canonical records canonicalize first.
inline SolutionRecord make_record(const QueenSet& s) {
  SolutionRecord rec{s, stabilizer(s), foursomes_of(s), {}};
  rec.tags.zero_cover = is_zero_cover(s);
  // a centrally strong tag only makes sense when some (m1, n1, k) yields
  // exactly this board; scan the small parameter space
  const BoardDims d = s.dims();
  for (int m1 = 1; m1 <= d.n && !rec.tags.centrally_strong; ++m1)
    for (int n1 = 1; n1 <= m1; ++n1)
      for (int k = 0; 2 * k < n1; ++k) {
        CentralParams p{m1, n1, k};
        if (p.m() != d.m || p.n() != d.n) continue;
        if (m1 % 2 == 0 && n1 % 2 == 0) continue;
        std::vector<CenteredSquare> cs = corner_to_centered(s);
        if (is_centrally_strong(cs, p)) {
          rec.tags.centrally_strong = p;
          rec.tags.strict = detail::strong_strict(cs, p);
          break;
        }
      }
  return rec;
}

inline SolutionFile make_file(const EnumerateOutcome& out, BoardDims dims,
                              std::string generator) {
  SolutionFile file;
  file.dims = dims;
  file.gamma = out.gamma;
  file.status = out.status;
  file.generator = std::move(generator);
  for (const EquivClass& c : out.classes)
    file.records.push_back(make_record(c.representative));
  return file;
}

namespace detail {

inline nlohmann::json squares_json(const std::vector<Square>& sq) {
  nlohmann::json a = nlohmann::json::array();
  for (Square s : sq) a.push_back({s.x, s.y});
  return a;
}

inline std::vector<Square> squares_from_json(const nlohmann::json& a) {
  std::vector<Square> out;
  if (!a.is_array()) throw ParseError("expected array of squares");
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("square must be [x, y]");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const SolutionFile& file) {
  nlohmann::json root;
  root["m"] = file.dims.m;
  root["n"] = file.dims.n;
  root["gamma"] = file.gamma;
  root["status"] = file.status == SolveStatus::Exact ? "exact" : "incomplete";
  root["generator"] = file.generator;
  root["version"] = file.version;
  nlohmann::json sols = nlohmann::json::array();
  for (const SolutionRecord& rec : file.records) {
    nlohmann::json r;
    r["queens"] = detail::squares_json(rec.squares.squares());
    r["symmetry"] = rec.symmetry;
    nlohmann::json fs = nlohmann::json::array();
    for (const Foursome& f : rec.foursomes) {
      auto m = f.members();
      fs.push_back(detail::squares_json(std::vector<Square>(m.begin(), m.end())));
    }
    r["foursomes"] = fs;
    nlohmann::json tags;
    if (rec.tags.zero_cover)
      tags["zero_cover"] = {rec.tags.zero_cover->x, rec.tags.zero_cover->y};
    else
      tags["zero_cover"] = nullptr;
    if (rec.tags.centrally_strong) {
      const CentralParams& p = *rec.tags.centrally_strong;
      tags["centrally_strong"] = {p.m1, p.n1, p.k};
    } else {
      tags["centrally_strong"] = nullptr;
    }
    tags["strict"] = rec.tags.strict;
    r["tags"] = tags;
    sols.push_back(r);
  }
  root["solutions"] = sols;
  return root;
}

// nlohmann::json keeps object keys sorted, so identical inputs produce
// byte-identical text
inline std::string write_json(const SolutionFile& file) {
  return to_json(file).dump(2) + "\n";
}

// Parses and re-verifies: every record must dominate, and every tag must
// be recomputable from the squares alone.
inline SolutionFile read_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  SolutionFile file;
  try {
    file.dims = BoardDims(root.at("m").get<int>(), root.at("n").get<int>());
    file.gamma = root.at("gamma").get<int>();
    const std::string st = root.at("status").get<std::string>();
    if (st == "exact")
      file.status = SolveStatus::Exact;
    else if (st == "incomplete")
      file.status = SolveStatus::Incomplete;
    else
      throw ParseError("status must be exact or incomplete");
    file.generator = root.value("generator", std::string());
    file.version = root.value("version", std::string());
    for (const auto& r : root.at("solutions")) {
      QueenSet qs(file.dims, detail::squares_from_json(r.at("queens")));
      SolutionRecord rec = make_record(qs);
      if (rec.symmetry != r.at("symmetry").get<std::string>())
        throw VerificationFailed("symmetry descriptor does not match set");
      const auto& tags = r.at("tags");
      SolutionTags claimed;
      if (!tags.at("zero_cover").is_null()) {
        auto zc = tags.at("zero_cover");
        claimed.zero_cover = Square{zc.at(0).get<int>(), zc.at(1).get<int>()};
      }
      if (!tags.at("centrally_strong").is_null()) {
        auto cs = tags.at("centrally_strong");
        claimed.centrally_strong = CentralParams{
            cs.at(0).get<int>(), cs.at(1).get<int>(), cs.at(2).get<int>()};
      }
      claimed.strict = tags.at("strict").get<bool>();
      if (!(claimed == rec.tags))
        throw VerificationFailed("tags do not re-verify from squares");
      if (r.at("foursomes").size() != rec.foursomes.size())
        throw VerificationFailed("foursome list does not match set");
      file.records.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad solution file: ") + e.what());
  }
  for (const SolutionRecord& rec : file.records) {
    if (!rec.squares.dominates())
      throw VerificationFailed("record does not dominate the board");
    if (rec.squares.size() != file.gamma)
      throw VerificationFailed("record size differs from the stated gamma");
  }
  return file;
}

inline void save_file(const std::string& path, const SolutionFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << write_json(file);
}

inline SolutionFile load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_json(ss.str());
}

// ---------------------------------------------------------------------
// HTML appendix
// ---------------------------------------------------------------------

inline std::string export_html(const SolutionFile& file) {
  const BoardDims d = file.dims;
  std::ostringstream h;
  h << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
    << "<title>Minimum dominating sets of the " << d.m << "x" << d.n
    << " queens graph</title>\n<style>\n"
    << "table.board { border-collapse: collapse; margin: 1em 0; }\n"
    << "table.board td { width: 1.6em; height: 1.6em; text-align: center;\n"
    << "  border: 1px solid #888; font-size: 1.1em; }\n"
    << "td.dark { background: #e8e8e8; }\n"
    << "</style>\n</head>\n<body>\n"
    << "<h1>" << d.m << "&times;" << d.n << " board, " << file.gamma
    << " queens (" << (file.status == SolveStatus::Exact ? "exact" : "incomplete")
    << ")</h1>\n<p>" << file.records.size() << " equivalence classes.</p>\n";
  int idx = 0;
  for (const SolutionRecord& rec : file.records) {
    ++idx;
    h << "<h2 id=\"sol-" << idx << "\">#" << idx << "</h2>\n<p>symmetry: "
      << rec.symmetry << "; foursomes: " << rec.foursomes.size() << "</p>\n"
      << "<table class=\"board\">\n";
    for (int y = d.m; y >= 1; --y) {
      h << "<tr>";
      for (int x = 1; x <= d.n; ++x) {
        const bool dark = (x + y) % 2 == 0;
        h << "<td" << (dark ? " class=\"dark\"" : "") << ">"
          << (rec.squares.contains(Square{x, y}) ? "&#9819;" : "") << "</td>";
      }
      h << "</tr>\n";
    }
    h << "</table>\n";
  }
  h << "</body>\n</html>\n";
  return h.str();
}

}  // namespace qdom

#endif  // QDOM_SOLUTION_IO_HPP
