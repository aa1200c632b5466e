#pragma once

// Join-preserving maps between finite lattices ("states of compoundness"),
// their meet-preserving Galois duals, and the complete lattice Q(L1, L2) of
// all such maps under the pointwise order.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qcomp/error.hpp"
#include "qcomp/order.hpp"

namespace qcomp {

inline bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  return a == b || (a && b && *a == *b);
}

/// True iff `table` maps bottom to bottom and preserves every binary join,
/// which in a finite lattice is equivalent to preserving all joins.
inline bool is_join_preserving(std::span<const Element> table, const FiniteLattice& L1,
                               const FiniteLattice& L2) {
  if (table.size() != L1.size()) return false;
  for (Element x : table)
    if (x >= L2.size()) return false;
  if (table[L1.bottom()] != L2.bottom()) return false;
  for (std::size_t a = 0; a < L1.size(); ++a)
    for (std::size_t b = a + 1; b < L1.size(); ++b)
      if (table[L1.join(a, b)] != L2.join(table[a], table[b])) return false;
  return true;
}

/// Dual check: top to top and every binary meet preserved.
inline bool is_meet_preserving(std::span<const Element> table, const FiniteLattice& from,
                               const FiniteLattice& to) {
  if (table.size() != from.size()) return false;
  for (Element x : table)
    if (x >= to.size()) return false;
  if (table[from.top()] != to.top()) return false;
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = a + 1; b < from.size(); ++b)
      if (table[from.meet(a, b)] != to.meet(table[a], table[b])) return false;
  return true;
}

class JoinMap {
 public:
  JoinMap(LatticePtr source, LatticePtr target, std::vector<Element> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (!is_join_preserving(table_, *source_, *target_))
      throw Error(ErrorKind::NotJoinPreserving, "table " + describe(table_));
  }

  const LatticePtr& source() const noexcept { return source_; }
  const LatticePtr& target() const noexcept { return target_; }
  const std::vector<Element>& table() const noexcept { return table_; }
  Element operator()(Element a) const { return table_.at(a); }

  /// Pointwise order in the target lattice.
  bool leq(const JoinMap& g) const {
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (!target_->leq(table_[a], g.table_[a])) return false;
    return true;
  }

  friend bool operator==(const JoinMap& f, const JoinMap& g) { return f.table_ == g.table_; }

  static std::string describe(std::span<const Element> table) {
    std::string s = "[";
    for (std::size_t i = 0; i < table.size(); ++i) s += (i ? "," : "") + std::to_string(table[i]);
    return s + "]";
  }

 private:
  LatticePtr source_;
  LatticePtr target_;
  std::vector<Element> table_;
};

/// A meet-preserving map L2 -> L1. `source()` is L2 and `target()` is L1, so
/// the roles are reversed with respect to the JoinMap it is dual to.
class MeetMap {
 public:
  MeetMap(LatticePtr source, LatticePtr target, std::vector<Element> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (!is_meet_preserving(table_, *source_, *target_))
      throw Error(ErrorKind::NotMeetPreserving, "table " + JoinMap::describe(table_));
  }

  const LatticePtr& source() const noexcept { return source_; }
  const LatticePtr& target() const noexcept { return target_; }
  const std::vector<Element>& table() const noexcept { return table_; }
  Element operator()(Element a) const { return table_.at(a); }

  bool leq(const MeetMap& g) const {
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (!target_->leq(table_[a], g.table_[a])) return false;
    return true;
  }

  friend bool operator==(const MeetMap& f, const MeetMap& g) { return f.table_ == g.table_; }

 private:
  LatticePtr source_;
  LatticePtr target_;
  std::vector<Element> table_;
};

/// f*(b) = ∨{a | f(a) <= b}: the weakest property of the source that assures b.
inline MeetMap galois_dual(const JoinMap& f) {
  const auto& L1 = *f.source();
  const auto& L2 = *f.target();
  std::vector<Element> table(L2.size());
  for (std::size_t b = 0; b < L2.size(); ++b) {
    Element acc = L1.bottom();
    for (std::size_t a = 0; a < L1.size(); ++a)
      if (L2.leq(f(a), b)) acc = L1.join(acc, a);
    table[b] = acc;
  }
  return MeetMap(f.target(), f.source(), std::move(table));
}

/// f(a) = ∧{b | a <= g(b)}, the strongest property whose cause a implies.
inline JoinMap adjoint_of_meetmap(const MeetMap& g) {
  const auto& L2 = *g.source();
  const auto& L1 = *g.target();
  if (!is_meet_preserving(g.table(), L2, L1))
    throw Error(ErrorKind::NotMeetPreserving, "table " + JoinMap::describe(g.table()));
  std::vector<Element> table(L1.size());
  for (std::size_t a = 0; a < L1.size(); ++a) {
    Element acc = L2.top();
    for (std::size_t b = 0; b < L2.size(); ++b)
      if (L1.leq(a, g(b))) acc = L2.meet(acc, b);
    table[a] = acc;
  }
  return JoinMap(g.target(), g.source(), std::move(table));
}

inline JoinMap absurd_state(const LatticePtr& L1, const LatticePtr& L2) {
  return JoinMap(L1, L2, std::vector<Element>(L1->size(), L2->bottom()));
}

inline JoinMap separation_state(const LatticePtr& L1, const LatticePtr& L2) {
  std::vector<Element> table(L1->size(), L2->top());
  table[L1->bottom()] = L2->bottom();
  return JoinMap(L1, L2, std::move(table));
}

inline JoinMap identity_map(const LatticePtr& L) {
  std::vector<Element> table(L->size());
  for (std::size_t a = 0; a < table.size(); ++a) table[a] = a;
  return JoinMap(L, L, std::move(table));
}

/// Pointwise join; with no maps this is the absurd state.
inline JoinMap pointwise_join(const LatticePtr& L1, const LatticePtr& L2, std::span<const JoinMap> fs) {
  std::vector<Element> table(L1->size(), L2->bottom());
  for (const auto& f : fs) {
    if (!same_lattice(f.source(), L1) || !same_lattice(f.target(), L2))
      throw Error(ErrorKind::MixedSignatures, "pointwise_join over maps with different lattices");
    for (std::size_t a = 0; a < table.size(); ++a) table[a] = L2->join(table[a], f(a));
  }
  return JoinMap(L1, L2, std::move(table));
}

/// Pointwise meet of meet-preserving maps L2 -> L1; empty gives constant top.
inline MeetMap pointwise_meet(const LatticePtr& L2, const LatticePtr& L1, std::span<const MeetMap> gs) {
  std::vector<Element> table(L2->size(), L1->top());
  for (const auto& g : gs) {
    if (!same_lattice(g.source(), L2) || !same_lattice(g.target(), L1))
      throw Error(ErrorKind::MixedSignatures, "pointwise_meet over maps with different lattices");
    for (std::size_t b = 0; b < table.size(); ++b) table[b] = L1->meet(table[b], g(b));
  }
  return MeetMap(L2, L1, std::move(table));
}

/// Law check: (f <= g) iff (g* <= f*). Always true for valid inputs.
inline bool order_antitone_check(const JoinMap& f, const JoinMap& g) {
  if (!same_lattice(f.source(), g.source()) || !same_lattice(f.target(), g.target()))
    throw Error(ErrorKind::MixedSignatures, "order_antitone_check");
  return f.leq(g) == galois_dual(g).leq(galois_dual(f));
}

struct MapClass {
  bool atomistic = false;        ///< every atom goes to an atom or bottom
  bool separation_like = false;  ///< equals the separation state

  /// Highest-priority label: atomistic > separation-like > other.
  std::string primary() const {
    if (atomistic) return "atomistic";
    if (separation_like) return "separation-like";
    return "other";
  }
};

inline MapClass classify_map(const JoinMap& f) {
  const auto& L2 = *f.target();
  MapClass c;
  auto target_atoms = L2.atoms();
  c.atomistic = std::ranges::all_of(f.source()->atoms(), [&](Element a) {
    Element img = f(a);
    return img == L2.bottom() || std::ranges::find(target_atoms, img) != target_atoms.end();
  });
  c.separation_like = f == separation_state(f.source(), f.target());
  return c;
}

/// Q(L1, L2): every join-preserving map in canonical (lexicographic table)
/// order, together with the lattice they form under the pointwise order.
struct QLattice {
  LatticePtr source;
  LatticePtr target;
  std::vector<JoinMap> maps;
  FiniteLattice order;

  std::size_t size() const noexcept { return maps.size(); }
  const JoinMap& top() const { return maps[order.top()]; }
  const JoinMap& bottom() const { return maps[order.bottom()]; }

  std::size_t index_of(const JoinMap& f) const {
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (maps[i] == f) return i;
    throw Error(ErrorKind::UnknownElement, "map " + JoinMap::describe(f.table()) + " not in Q");
  }
};

inline constexpr std::size_t kEnumerationLimit = 8;

/// Enumerates Q(L1, L2) by choosing images of the join-irreducibles of L1
/// (isotone among themselves) and extending by joins.
inline QLattice enumerate_Q(const LatticePtr& L1, const LatticePtr& L2) {
  if (L1->size() > kEnumerationLimit || L2->size() > kEnumerationLimit)
    throw Error(ErrorKind::TooLarge, "enumerate_Q is limited to lattices of at most " +
                                         std::to_string(kEnumerationLimit) + " elements");
  auto irr = L1->join_irreducibles();
  // Linear extension: fewer elements below comes first.
  auto height = [&](Element a) {
    std::size_t h = 0;
    for (std::size_t c = 0; c < L1->size(); ++c) h += L1->leq(c, a);
    return h;
  };
  std::ranges::stable_sort(irr, [&](Element x, Element y) { return height(x) < height(y); });

  std::vector<std::vector<Element>> tables;
  std::vector<Element> image(irr.size());
  std::vector<Element> table(L1->size());

  auto extend = [&] {
    for (std::size_t x = 0; x < L1->size(); ++x) {
      Element acc = L2->bottom();
      for (std::size_t k = 0; k < irr.size(); ++k)
        if (L1->leq(irr[k], x)) acc = L2->join(acc, image[k]);
      table[x] = acc;
    }
    if (is_join_preserving(table, *L1, *L2)) tables.push_back(table);
  };

  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == irr.size()) {
      extend();
      return;
    }
    for (std::size_t y = 0; y < L2->size(); ++y) {
      bool isotone = true;
      for (std::size_t i = 0; i < k && isotone; ++i)
        if (L1->leq(irr[i], irr[k]) && !L2->leq(image[i], y)) isotone = false;
      if (!isotone) continue;
      image[k] = y;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  std::ranges::sort(tables);

  std::vector<JoinMap> maps;
  std::vector<std::string> labels;
  maps.reserve(tables.size());
  for (auto& t : tables) {
    labels.push_back(JoinMap::describe(t));
    maps.emplace_back(L1, L2, std::move(t));
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j)
      if (maps[i].leq(maps[j])) pairs.emplace_back(i, j);
  auto order = FiniteLattice::build(std::move(labels), pairs);
  return QLattice{L1, L2, std::move(maps), std::move(order)};
}

}  // namespace qcomp
