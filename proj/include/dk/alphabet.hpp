#pragma once
// Weighted alphabets.  Every graded object references a shared immutable
// Alphabet; words are integer sequences over the alphabet index.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dk/rat.hpp"

namespace dk {

enum class Role { X, Y, T, Z, Center };

struct Symbol {
  std::string name;  // display name, e.g. "x[1,2]" or "t[*,0]"
  Role role;
  int weight;  // x,y: 1; t,z,center: 2
};

class Alphabet {
 public:
  int add(const Symbol& s) {
    if (s.weight <= 0) throw Error("symbol weight must be positive");
    if (byName_.count(s.name)) throw Error("duplicate symbol " + s.name);
    int id = static_cast<int>(syms_.size());
    syms_.push_back(s);
    byName_.emplace(s.name, id);
    return id;
  }
  int size() const { return static_cast<int>(syms_.size()); }
  const Symbol& operator[](int i) const {
    return syms_.at(static_cast<size_t>(i));
  }
  int find(const std::string& name) const {
    auto it = byName_.find(name);
    return it == byName_.end() ? -1 : it->second;
  }
  int require(const std::string& name) const {
    int id = find(name);
    if (id < 0) throw Error("unknown symbol " + name);
    return id;
  }
  bool operator==(const Alphabet& o) const {
    if (syms_.size() != o.syms_.size()) return false;
    for (size_t i = 0; i < syms_.size(); ++i)
      if (syms_[i].name != o.syms_[i].name ||
          syms_[i].weight != o.syms_[i].weight)
        return false;
    return true;
  }
  // Stable identity string, used as a cache key for Lyndon systems.
  std::string signature() const {
    std::string s;
    for (const auto& sym : syms_) s += sym.name + "#" + std::to_string(sym.weight) + ";";
    return s;
  }

 private:
  std::vector<Symbol> syms_;
  std::map<std::string, int> byName_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

using Word = std::vector<int>;  // letter ids; empty word = unit

inline int wordWeight(const Alphabet& a, const Word& w) {
  int s = 0;
  for (int c : w) s += a[c].weight;
  return s;
}

inline std::string wordString(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int c : w) {
    if (!s.empty()) s += ".";
    s += a[c].name;
  }
  return s;
}

inline void checkSameContext(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !(*a == *b)) throw Error("alphabet mismatch");
}

}  // namespace dk
