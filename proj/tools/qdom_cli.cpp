// qdom -- queens-graph domination workbench.
//
// Exit codes: 0 success, 1 verification/census failure or internal error,
// 2 search budget exceeded, 3 --expect mismatch, 4 infeasible construction
// parameters.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qdom/bounds.hpp"
#include "qdom/constructions.hpp"
#include "qdom/solution_io.hpp"
#include "qdom/solver.hpp"
#include "qdom/table1.hpp"

using namespace qdom;

namespace {

constexpr int kExitBudget = 2;
constexpr int kExitExpect = 3;
constexpr int kExitInfeasible = 4;

struct BudgetFlags {
  long long nodes = 1'000'000'000;
  double seconds = 0.0;  // 0 = no limit
  int threads = 0;       // 0 = QDOM_THREADS or 1

  SearchBudget budget() const {
    SearchBudget b;
    b.node_limit = nodes;
    if (seconds > 0) b.time_limit_seconds = seconds;
    int t = threads;
    if (t <= 0) {
      if (const char* env = std::getenv("QDOM_THREADS")) t = std::atoi(env);
      if (t <= 0) t = 1;
    }
    b.threads = t;
    return b;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--nodes", nodes, "search node limit");
    cmd->add_option("--seconds", seconds, "wall clock limit");
    cmd->add_option("--threads", threads, "worker threads (default $QDOM_THREADS)");
  }
};

std::string squares_str(const QueenSet& s) {
  std::string out;
  for (Square q : s.squares()) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(q.x) + ',' + std::to_string(q.y) + ')';
  }
  return out;
}

void print_bounds_line(int m, int n) {
  BoundReport rep = best_lower(std::min(m, n), std::max(m, n));
  std::cout << "bounds " << m << "x" << n << ": thm2=" << rep.thm2;
  if (rep.prop1) std::cout << " prop1=" << *rep.prop1 << " (exact)";
  if (rep.square)
    std::cout << " square=" << *rep.square
              << (rep.square_is_external ? " (external)" : "");
  std::cout << " conjecture=" << rep.conjecture
            << " best_proved=" << rep.best_proved;
  if (auto g = table1().lookup(m, n))
    std::cout << " gamma=" << *g << " gap=" << *g - rep.thm2;
  std::cout << "\n";
}

int run_solve(int m, int n, bool expect, const BudgetFlags& bf) {
  BoardDims dims(std::min(m, n), std::max(m, n));
  if (dims.m != m)
    std::cout << "normalized to " << dims.m << "x" << dims.n << "\n";
  SolveOutcome out = gamma(dims, bf.budget());
  std::cout << "gamma(" << dims.m << "x" << dims.n << ")";
  if (out.status == SolveStatus::Exact) {
    std::cout << " = " << out.gamma << "\n";
    if (!out.witnesses.empty())
      std::cout << "witness: " << squares_str(out.witnesses.front()) << "\n";
  } else {
    std::cout << " >= " << out.gamma << " (incomplete)\n";
  }
  print_bounds_line(dims.m, dims.n);
  std::cout << "nodes=" << out.nodes << " seconds=" << out.elapsed_seconds
            << "\n";
  if (out.status != SolveStatus::Exact) return kExitBudget;
  if (expect) {
    auto want = table1().lookup(dims.m, dims.n);
    if (!want) {
      std::cerr << "no reference value for " << dims.m << "x" << dims.n << "\n";
      return kExitExpect;
    }
    if (*want != out.gamma) {
      std::cerr << "MISMATCH: expected " << *want << ", got " << out.gamma
                << "\n";
      return kExitExpect;
    }
    std::cout << "matches reference value " << *want << "\n";
  }
  return 0;
}

void print_census(const std::vector<EquivClass>& cls) {
  std::cout << "classes: " << cls.size() << "\n";
  std::map<size_t, int> fsome;  // foursome count -> classes
  for (const auto& c : cls) ++fsome[foursomes_of(c.representative).size()];
  std::cout << "foursome census:";
  for (auto [k, v] : fsome) std::cout << " " << k << "->" << v;
  std::cout << "\n";
  std::map<size_t, int> hist;  // partition cell size -> cells
  for (const auto& cell : partition(cls)) ++hist[cell.size()];
  std::cout << "partition histogram:";
  for (auto [k, v] : hist) std::cout << " {" << k << ": " << v << "}";
  std::cout << "\n";
}

int run_enumerate(int m, int n, const std::string& out_path,
                  const std::string& html_path, const BudgetFlags& bf) {
  BoardDims dims(std::min(m, n), std::max(m, n));
  EnumerateOutcome out = enumerate_min(dims, bf.budget());
  if (out.status != SolveStatus::Exact) {
    std::cout << "incomplete (gamma >= " << out.gamma << ", nodes=" << out.nodes
              << ")\n";
    return kExitBudget;
  }
  std::cout << "gamma(" << dims.m << "x" << dims.n << ") = " << out.gamma
            << "\n";
  print_census(out.classes);
  SolutionFile file = make_file(out, dims, "qdom enumerate");
  if (!out_path.empty()) {
    save_file(out_path, file);
    std::cout << "wrote " << out_path << "\n";
  }
  if (!html_path.empty()) {
    std::ofstream h(html_path, std::ios::binary);
    if (!h) throw Error("cannot open for writing: " + html_path);
    h << export_html(file);
    std::cout << "wrote " << html_path << "\n";
  }
  return 0;
}

int run_near(int m, int n, int k) {
  BoardDims dims(std::min(m, n), std::max(m, n));
  NearDominateOutcome out = near_dominating(dims, k);
  std::cout << k << " queens on " << dims.m << "x" << dims.n << " cover at most "
            << out.max_covered << "/" << out.square_count << " squares\n"
            << "optimal arrangements: " << out.classes.size()
            << " classes, " << out.concrete_count << " concrete\n";
  return 0;
}

int run_bounds(std::vector<int> pair, bool census) {
  if (!pair.empty()) {
    print_bounds_line(pair[0], pair[1]);
    return 0;
  }
  int achieved = 0, achieved_small = 0, gap1 = 0;
  std::vector<std::pair<int, int>> gap2;
  bool conj_ok = true;
  for (int m = 4; m <= 18; ++m)
    for (int n = m; n <= 18; ++n) {
      if (!census) print_bounds_line(m, n);
      BoundReport rep = best_lower(m, n);
      const int g = *table1().lookup(m, n);
      const int gap = g - rep.thm2;
      if (gap == 0) {
        ++achieved;
        if (m <= 6) ++achieved_small;
      }
      if (gap == 1) ++gap1;
      if (gap == 2) gap2.emplace_back(m, n);
      if (rep.conjecture > g) conj_ok = false;
    }
  if (census) {
    std::cout << "thm2 achieved: " << achieved << " (" << achieved_small
              << " with m <= 6)\n";
    std::cout << "gap 1: " << gap1 << "\n";
    std::cout << "gap 2:";
    for (auto [m, n] : gap2) std::cout << " (" << m << "," << n << ")";
    std::cout << "\n";
    std::cout << "conjecture holds on all pairs: " << (conj_ok ? "yes" : "no")
              << "\n";
    std::cout << "note: the published totals are 40 achieved / 76 gap-1, but\n"
              << "recomputing from the published gamma table gives 41 / 75;\n"
              << "the published 28-with-m<=6 sub-count does match\n";
    const std::vector<std::pair<int, int>> want = {
        {12, 14}, {13, 17}, {14, 16}, {15, 15}};
    if (achieved != 41 || achieved_small != 28 || gap1 != 75 || gap2 != want ||
        !conj_ok) {
      std::cerr << "census differs from the table-derived 41/75/4 breakdown\n";
      return 1;
    }
  }
  return 0;
}

int write_construct_file(const std::string& path, BoardDims dims,
                         const std::vector<QueenSet>& sets,
                         const std::string& generator) {
  if (path.empty()) return 0;
  SolutionFile file;
  file.dims = dims;
  file.gamma = sets.front().size();
  file.status = SolveStatus::Exact;
  file.generator = generator;
  for (const QueenSet& s : sets) file.records.push_back(make_record(s));
  save_file(path, file);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int run_construct_strong(int m1, int n1, int k, bool strict_only,
                         const std::string& out_path) {
  CentralParams p = central_params(m1, n1, k);
  std::vector<StrongSet> found = centrally_strong_search(p, strict_only);
  if (found.empty()) {
    std::cerr << "no centrally strong set for (" << m1 << "," << n1 << ","
              << k << ")\n";
    return kExitInfeasible;
  }
  std::cout << found.size() << " sets of " << p.g() << " queens for "
            << p.m() << "x" << p.n() << " (gamma <= " << p.g() << ")\n";
  std::vector<QueenSet> sets;
  for (const StrongSet& s : found) {
    QueenSet qs = s.to_board();
    if (!qs.dominates()) throw Error("construction failed to dominate");
    sets.push_back(std::move(qs));
  }
  std::cout << "first: " << squares_str(sets.front()) << "\n";
  for (const StrongSet& s : found)
    if (s.strict) {
      auto boards = applicable_boards(s);
      int min_m = p.m(), min_n = p.n();
      for (auto [bm, bn] : boards) min_m = std::min(min_m, bm), min_n = std::min(min_n, bn);
      std::cout << "a strict set dominates " << boards.size()
                << " boards, down to " << min_m << "x" << min_n << "\n";
      break;
    }
  return write_construct_file(out_path, p.board(), sets, "qdom construct strong");
}

int run_construct_zero_cover(const std::string& preset,
                             const std::string& out_path) {
  if (preset != "example1") {
    std::cerr << "unknown preset: " << preset << "\n";
    return kExitInfeasible;
  }
  auto [dims, plan] = example1_plan();
  std::vector<QueenSet> found = zero_cover_search(dims, 10, plan);
  if (found.empty()) return kExitInfeasible;
  std::cout << found.size() << " zero covers of " << dims.m << "x" << dims.n
            << " with 10 queens (gamma <= 10)\n"
            << "first: " << squares_str(found.front()) << "\n";
  return write_construct_file(out_path, dims, found, "qdom construct zero-cover");
}

int run_construct_family(int n1, int m1, const std::string& out_path) {
  StrongSet s = n1 == 5 ? family_n1_5(m1)
              : n1 == 7 ? family_n1_7(m1)
                        : throw InvalidM1("family: n1 must be 5 or 7");
  QueenSet qs = s.to_board();
  if (!qs.dominates()) throw Error("family member failed to dominate");
  const CentralParams& p = s.params;
  std::cout << "gamma(" << p.m() << "x" << p.n() << ") <= " << qs.size()
            << (s.strict ? " (strict)" : "") << "\n"
            << squares_str(qs) << "\n";
  return write_construct_file(out_path, p.board(), {qs}, "qdom construct family");
}

int run_verify(const std::string& path) {
  SolutionFile file = load_file(path);
  for (const SolutionRecord& rec : file.records)
    if (!(rec.squares == canonical(rec.squares)))
      throw VerificationFailed("record is not in canonical form");
  if (file.status == SolveStatus::Exact)
    if (auto g = table1().lookup(file.dims.m, file.dims.n))
      if (*g != file.gamma)
        throw VerificationFailed("gamma " + std::to_string(file.gamma) +
                                 " contradicts reference value " +
                                 std::to_string(*g));
  std::cout << "OK: " << file.records.size() << " records, gamma="
            << file.gamma << "\n";
  return 0;
}

int run_export_html(const std::string& in_path, const std::string& out_path) {
  SolutionFile file = load_file(in_path);
  std::ofstream h(out_path, std::ios::binary);
  if (!h) throw Error("cannot open for writing: " + out_path);
  h << export_html(file);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"queens-graph domination workbench"};
  app.require_subcommand(1);

  BudgetFlags bf;

  int m = 0, n = 0, k = 0;
  bool expect = false;
  auto* solve = app.add_subcommand("solve", "exact domination number");
  solve->add_option("m", m)->required();
  solve->add_option("n", n)->required();
  solve->add_flag("--expect", expect, "compare against the reference table");
  bf.attach(solve);

  std::string out_path, html_path;
  auto* enumerate = app.add_subcommand("enumerate", "all minimum sets");
  enumerate->add_option("m", m)->required();
  enumerate->add_option("n", n)->required();
  enumerate->add_option("--out", out_path, "write solution JSON");
  enumerate->add_option("--html", html_path, "write HTML board diagrams");
  bf.attach(enumerate);

  auto* near = app.add_subcommand("near-dominate", "max coverage by k queens");
  near->add_option("m", m)->required();
  near->add_option("n", n)->required();
  near->add_option("k", k)->required();

  std::vector<int> pair;
  bool census = false;
  auto* bounds = app.add_subcommand("bounds", "lower bounds and gaps");
  bounds->add_option("pair", pair, "single (m, n)")->expected(0, 2);
  bounds->add_flag("--census", census, "gap breakdown over the full table");

  auto* construct = app.add_subcommand("construct", "dominating set builders");
  construct->require_subcommand(1);
  int m1 = 0, n1 = 0;
  bool strict_only = false;
  auto* strong = construct->add_subcommand("strong", "centrally strong search");
  strong->add_option("--m1", m1)->required();
  strong->add_option("--n1", n1)->required();
  strong->add_option("--k", k)->required();
  strong->add_flag("--strict", strict_only);
  strong->add_option("--out", out_path);
  std::string preset;
  auto* zero = construct->add_subcommand("zero-cover", "0-cover search");
  zero->add_option("--preset", preset)->required();
  zero->add_option("--out", out_path);
  auto* family = construct->add_subcommand("family", "infinite families");
  family->add_option("--n1", n1)->required();
  family->add_option("--m1", m1)->required();
  family->add_option("--out", out_path);

  std::string file_path;
  auto* verify = app.add_subcommand("verify", "re-check a solution file");
  verify->add_option("file", file_path)->required();

  std::string export_out = "solutions.html";
  auto* exp = app.add_subcommand("export-html", "render a solution file");
  exp->add_option("file", file_path)->required();
  exp->add_option("--out", export_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(m, n, expect, bf);
    if (enumerate->parsed()) return run_enumerate(m, n, out_path, html_path, bf);
    if (near->parsed()) return run_near(m, n, k);
    if (bounds->parsed()) {
      if (pair.size() == 1) {
        std::cerr << "bounds takes zero or two positional arguments\n";
        return 1;
      }
      return run_bounds(pair, census);
    }
    if (construct->parsed()) {
      try {
        if (strong->parsed())
          return run_construct_strong(m1, n1, k, strict_only, out_path);
        if (zero->parsed()) return run_construct_zero_cover(preset, out_path);
        if (family->parsed()) return run_construct_family(n1, m1, out_path);
      } catch (const InfeasiblePlan& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
      } catch (const InvalidParity& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
      } catch (const NegativeAuxCount& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
      } catch (const InvalidM1& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
      }
    }
    if (verify->parsed()) return run_verify(file_path);
    if (exp->parsed()) return run_export_html(file_path, export_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
