#pragma once
// Lyndon words over a weighted alphabet and their standard bracketings.
// Fixed normal-form convention for the whole library: basis of the free Lie
// algebra indexed by Lyndon words ordered by (weight, lex), each with the
// standard (Chen-Fox-Lyndon) factorization bracketing.  The expansion of a
// standard bracketing into tensor words is unitriangular: it is the word
// itself plus lexicographically larger rearrangements, which gives the
// tensor -> Lyndon coordinate elimination used everywhere.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "dk/alphabet.hpp"
#include "dk/rat.hpp"

namespace dk {

inline bool isLyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    // w must be strictly smaller than each proper suffix
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
      return false;
  }
  return true;
}

class LyndonSystem {
 public:
  LyndonSystem(AlphabetPtr alpha, int D) : alpha_(std::move(alpha)), D_(D) {
    generate();
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  int degree() const { return D_; }
  int size() const { return static_cast<int>(words_.size()); }
  const Word& word(int idx) const { return words_.at(static_cast<size_t>(idx)); }
  int weightOf(int idx) const { return weights_.at(static_cast<size_t>(idx)); }
  int index(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }
  // Basis indices of weight exactly d, in lex order.
  const std::vector<int>& byWeight(int d) const {
    static const std::vector<int> empty;
    if (d < 1 || d > D_) return empty;
    return byWeight_.at(static_cast<size_t>(d));
  }

  // Standard factorization w = u.v with v the lexicographically least
  // (equivalently, longest Lyndon) proper suffix.
  std::pair<Word, Word> stdFactor(const Word& w) const {
    if (w.size() < 2) throw Error("standard factorization of a letter");
    size_t best = 1;
    for (size_t i = 2; i < w.size(); ++i)
      if (std::lexicographical_compare(w.begin() + i, w.end(),
                                       w.begin() + best, w.end()))
        best = i;
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
  }

  // Tensor-word expansion of the standard bracketing B(word(idx)).
  const std::map<Word, Rat>& expansion(int idx) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto& slot = expansions_.at(static_cast<size_t>(idx));
      if (slot) return *slot;
    }
    std::map<Word, Rat> result;
    const Word& w = word(idx);
    if (w.size() == 1) {
      result.emplace(w, 1);
    } else {
      auto [u, v] = stdFactor(w);
      int iu = index(u), iv = index(v);
      if (iu < 0 || iv < 0) throw Error("factor missing from Lyndon system");
      const auto& eu = expansion(iu);
      const auto& ev = expansion(iv);
      auto addProd = [&](const std::map<Word, Rat>& a,
                         const std::map<Word, Rat>& b, int sign) {
        for (const auto& [wa, ca] : a)
          for (const auto& [wb, cb] : b) {
            Word x = wa;
            x.insert(x.end(), wb.begin(), wb.end());
            Rat& r = result[x];
            r += sign * ca * cb;
            if (r == 0) result.erase(x);
          }
      };
      addProd(eu, ev, 1);
      addProd(ev, eu, -1);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = expansions_.at(static_cast<size_t>(idx));
    if (!slot) slot = std::move(result);
    return *slot;
  }

  // Lyndon coordinates of [generator letter, B(word(idx))]; memoized.
  // This is the workhorse of the nilpotent-quotient ideal recursion.
  const std::vector<std::pair<int, Rat>>& bracketGenLyndon(int letter, int idx) const {
    auto key = std::make_pair(letter, idx);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = genBr_.find(key);
      if (it != genBr_.end()) return it->second;
    }
    std::map<Word, Rat> comm;
    const auto& e = expansion(idx);
    for (const auto& [w, c] : e) {
      Word lw;
      lw.push_back(letter);
      lw.insert(lw.end(), w.begin(), w.end());
      Word wr = w;
      wr.push_back(letter);
      comm[lw] += c;
      if (comm[lw] == 0) comm.erase(lw);
      comm[wr] -= c;
      if (comm[wr] == 0) comm.erase(wr);
    }
    std::vector<std::pair<int, Rat>> coords = lieCoordsFromWords(comm);
    std::lock_guard<std::mutex> lock(mu_);
    return genBr_.emplace(key, std::move(coords)).first->second;
  }

  // Eliminate a (homogeneous or not) word-coefficient map into Lyndon
  // coordinates (index, coefficient), sorted by index.  Throws if the input
  // is not a Lie element.
  std::vector<std::pair<int, Rat>> lieCoordsFromWords(std::map<Word, Rat> rem) const {
    std::vector<std::pair<int, Rat>> out;
    // Process weight classes independently so the lex elimination's "minimum
    // strictly increases" argument applies within a fixed letter content.
    std::map<int, std::map<Word, Rat>> byW;
    for (auto& [w, c] : rem) byW[wordWeight(*alpha_, w)][w] = c;
    for (auto& [d, part] : byW) {
      while (!part.empty()) {
        auto it = part.begin();
        Word w0 = it->first;
        Rat c = it->second;
        int idx = index(w0);
        if (idx < 0) throw Error("not a Lie element (lex-minimal word " +
                                 wordString(*alpha_, w0) + " is not Lyndon)");
        out.emplace_back(idx, c);
        for (const auto& [w, e] : expansion(idx)) {
          Rat& r = part[w];
          r -= c * e;
          if (r == 0) part.erase(w);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void generate() {
    int k = alpha_->size();
    if (k == 0) {
      byWeight_.assign(static_cast<size_t>(D_) + 1, {});
      return;
    }
    // Duval's algorithm: all Lyndon words of length <= D_ in lex order.
    std::vector<Word> all;
    Word w{0};
    while (true) {
      if (wordWeight(*alpha_, w) <= D_) all.push_back(w);
      Word t = w;
      while (static_cast<int>(t.size()) < D_)
        t.push_back(t[t.size() % w.size()]);
      while (!t.empty() && t.back() == k - 1) t.pop_back();
      if (t.empty()) break;
      ++t.back();
      w = t;
    }
    std::stable_sort(all.begin(), all.end(), [&](const Word& a, const Word& b) {
      int wa = wordWeight(*alpha_, a), wb = wordWeight(*alpha_, b);
      if (wa != wb) return wa < wb;
      return a < b;
    });
    words_ = std::move(all);
    byWeight_.assign(static_cast<size_t>(D_) + 1, {});
    for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
      index_.emplace(words_[static_cast<size_t>(i)], i);
      int d = wordWeight(*alpha_, words_[static_cast<size_t>(i)]);
      weights_.push_back(d);
      byWeight_[static_cast<size_t>(d)].push_back(i);
    }
    expansions_.resize(words_.size());
  }

  AlphabetPtr alpha_;
  int D_;
  std::vector<Word> words_;
  std::vector<int> weights_;
  std::map<Word, int> index_;
  std::vector<std::vector<int>> byWeight_;
  mutable std::mutex mu_;
  mutable std::vector<std::optional<std::map<Word, Rat>>> expansions_;
  mutable std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> genBr_;
};

using LyndonSystemPtr = std::shared_ptr<const LyndonSystem>;

// Shared cache: one system per (alphabet signature, >= D).
inline LyndonSystemPtr lyndonSystem(const AlphabetPtr& alpha, int D) {
  static std::mutex mu;
  static std::map<std::string, LyndonSystemPtr> cache;
  std::string key = alpha->signature();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end() && it->second->degree() >= D) return it->second;
  auto sys = std::make_shared<const LyndonSystem>(alpha, D);
  cache[key] = sys;
  return sys;
}

}  // namespace dk
