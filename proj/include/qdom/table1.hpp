// table1.hpp -- embedded reference values of gamma(Q_{m x n}) for
// 4 <= m <= n <= 18.  Reference data only: the solver never reads this.

#ifndef QDOM_TABLE1_HPP
#define QDOM_TABLE1_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "qdom/board.hpp"

namespace qdom {

// Contents of table1.csv, header m,n,gamma; 120 entries.
inline const char* table1_csv() {
  return
      "m,n,gamma\n"
      "4,4,2\n"
      "4,5,2\n5,5,3\n"
      "4,6,3\n5,6,3\n6,6,3\n"
      "4,7,3\n5,7,3\n6,7,4\n7,7,4\n"
      "4,8,3\n5,8,4\n6,8,4\n7,8,5\n8,8,5\n"
      "4,9,4\n5,9,4\n6,9,4\n7,9,5\n8,9,5\n9,9,5\n"
      "4,10,4\n5,10,4\n6,10,4\n7,10,5\n8,10,5\n9,10,5\n10,10,5\n"
      "4,11,4\n5,11,4\n6,11,5\n7,11,5\n8,11,6\n9,11,5\n10,11,5\n11,11,5\n"
      "4,12,4\n5,12,4\n6,12,5\n7,12,5\n8,12,6\n9,12,6\n10,12,6\n11,12,6\n"
      "12,12,6\n"
      "4,13,4\n5,13,5\n6,13,5\n7,13,6\n8,13,6\n9,13,6\n10,13,7\n11,13,7\n"
      "12,13,7\n13,13,7\n"
      "4,14,4\n5,14,5\n6,14,6\n7,14,6\n8,14,6\n9,14,6\n10,14,7\n11,14,7\n"
      "12,14,8\n13,14,8\n14,14,8\n"
      "4,15,4\n5,15,5\n6,15,6\n7,15,6\n8,15,6\n9,15,7\n10,15,7\n11,15,7\n"
      "12,15,8\n13,15,8\n14,15,8\n15,15,9\n"
      "4,16,4\n5,16,5\n6,16,6\n7,16,6\n8,16,7\n9,16,7\n10,16,7\n11,16,8\n"
      "12,16,8\n13,16,8\n14,16,9\n15,16,9\n16,16,9\n"
      "4,17,4\n5,17,5\n6,17,6\n7,17,7\n8,17,7\n9,17,7\n10,17,8\n11,17,8\n"
      "12,17,8\n13,17,9\n14,17,9\n15,17,9\n16,17,9\n17,17,9\n"
      "4,18,4\n5,18,5\n6,18,6\n7,18,7\n8,18,7\n9,18,8\n10,18,8\n11,18,8\n"
      "12,18,8\n13,18,9\n14,18,9\n15,18,9\n16,18,9\n17,18,9\n18,18,9\n";
}

// (m, n) -> gamma lookup; (m, n) is normalized so that m <= n.
class Table1Store {
 public:
  Table1Store() {
    std::istringstream in(table1_csv());
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      int m, n, g;
      char comma;
      std::istringstream row(line);
      row >> m >> comma >> n >> comma >> g;
      values_.emplace(std::pair{m, n}, g);
    }
    if (values_.size() != 120)
      throw Error("Table1Store: expected 120 entries");
  }

  std::optional<int> lookup(int m, int n) const {
    if (m > n) std::swap(m, n);
    auto it = values_.find({m, n});
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::pair<int, int>, int>& entries() const { return values_; }

 private:
  std::map<std::pair<int, int>, int> values_;
};

inline const Table1Store& table1() {
  static const Table1Store store;
  return store;
}

}  // namespace qdom

#endif  // QDOM_TABLE1_HPP
