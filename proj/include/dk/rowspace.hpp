#pragma once
// Incremental sparse row space over the rationals with a fixed column order:
// exact elimination, deterministic pivoting (insertion order + ascending
// column scans).  Pivot rows are normalized to leading coefficient 1 and
// have all other entries in strictly larger columns, so one ascending pass
// fully reduces any vector.

#include <map>
#include <utility>
#include <vector>

#include "dk/rat.hpp"

namespace dk {

class RowSpace {
 public:
  using Row = std::map<int, Rat>;  // column -> nonzero coefficient

  // Eliminate every pivot column from v (over any coefficient ring K that
  // supports K -= K and K * K with K constructible from Rat).
  template <class K>
  void reduceCoords(std::map<int, K>& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pit = pivots_.find(it->first);
      if (pit == pivots_.end()) {
        ++it;
        continue;
      }
      K c = it->second;
      int col = it->first;
      for (const auto& [pc, pv] : pit->second) {
        auto vt = v.find(pc);
        K delta = c * K(pv);
        if (vt == v.end()) {
          if (!(delta == K(0))) v.emplace(pc, -delta);
        } else {
          vt->second -= delta;
          if (vt->second == K(0)) v.erase(vt);
        }
      }
      it = v.upper_bound(col);
    }
  }

  // Returns true if the row was independent (rank grew).
  bool insert(Row r) {
    reduceCoords(r);
    if (r.empty()) return false;
    Rat lead = r.begin()->second;
    for (auto& [c, v] : r) v /= lead;
    int col = r.begin()->first;
    pivots_.emplace(col, std::move(r));
    return true;
  }

  bool contains(Row r) const {
    reduceCoords(r);
    return r.empty();
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, Row>& pivots() const { return pivots_; }
  bool isPivot(int col) const { return pivots_.count(col) != 0; }

 private:
  std::map<int, Row> pivots_;  // leading column -> normalized row
};

}  // namespace dk
