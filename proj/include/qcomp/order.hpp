#pragma once

// Finite complete lattices stored as dense tables, ortholattices, and the
// Sasaki projection. Elements are identified by index; labels are for
// display only.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcomp/error.hpp"

namespace qcomp {

using Element = std::size_t;

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

class FiniteLattice {
 public:
  /// Validates `leq_pairs` as a partial order (taken literally: the reflexive
  /// pairs must be present) and computes the meet/join tables.
  static FiniteLattice build(std::vector<std::string> labels,
                             std::span<const std::pair<Element, Element>> leq_pairs) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorKind::NoBounds, "empty element set has no bottom or top");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels[i] == labels[j])
          throw Error(ErrorKind::NotAPoset, "duplicate label '" + labels[i] + "'");

    FiniteLattice L;
    L.labels_ = std::move(labels);
    L.n_ = n;
    L.leq_.assign(n * n, 0);
    for (auto [a, b] : leq_pairs) {
      if (a >= n || b >= n)
        throw Error(ErrorKind::UnknownElement,
                    "leq pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      L.leq_[a * n + b] = 1;
    }

    for (std::size_t a = 0; a < n; ++a)
      if (!L.leq(a, a))
        throw Error(ErrorKind::NotAPoset, "reflexivity fails at '" + L.labels_[a] + "'");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && L.leq(a, b) && L.leq(b, a))
          throw Error(ErrorKind::NotAPoset, "antisymmetry fails for '" + L.labels_[a] + "' and '" +
                                                L.labels_[b] + "'");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (L.leq(a, b))
          for (std::size_t c = 0; c < n; ++c)
            if (L.leq(b, c) && !L.leq(a, c))
              throw Error(ErrorKind::NotAPoset, "transitivity fails on '" + L.labels_[a] + "' <= '" +
                                                    L.labels_[b] + "' <= '" + L.labels_[c] + "'");

    L.meet_.assign(n * n, 0);
    L.join_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        auto lub = L.least_upper_bound(a, b);
        auto glb = L.greatest_lower_bound(a, b);
        if (!lub || !glb)
          throw Error(ErrorKind::NotALattice, "pair {'" + L.labels_[a] + "', '" + L.labels_[b] +
                                                  "'} lacks a " + (lub ? "meet" : "join"));
        L.join_[a * n + b] = L.join_[b * n + a] = *lub;
        L.meet_[a * n + b] = L.meet_[b * n + a] = *glb;
      }
    }

    Element bot = 0, top = 0;
    for (std::size_t a = 1; a < n; ++a) {
      bot = L.meet_[bot * n + a];
      top = L.join_[top * n + a];
    }
    for (std::size_t a = 0; a < n; ++a)
      if (!L.leq(bot, a) || !L.leq(a, top))
        throw Error(ErrorKind::NoBounds, "no global bottom/top");
    L.bottom_ = bot;
    L.top_ = top;
    return L;
  }

  static FiniteLattice build(std::vector<std::string> labels,
                             std::initializer_list<std::pair<Element, Element>> leq_pairs) {
    std::vector<std::pair<Element, Element>> v(leq_pairs);
    return build(std::move(labels), v);
  }

  std::size_t size() const noexcept { return n_; }
  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const noexcept { return leq_[a * n_ + b] != 0; }
  bool lt(Element a, Element b) const noexcept { return a != b && leq(a, b); }
  Element meet(Element a, Element b) const noexcept { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const noexcept { return join_[a * n_ + b]; }

  /// Meet of a set; the empty meet is top.
  Element meet(std::span<const Element> xs) const {
    Element r = top_;
    for (Element x : xs) r = meet(r, checked(x));
    return r;
  }
  /// Join of a set; the empty join is bottom.
  Element join(std::span<const Element> xs) const {
    Element r = bottom_;
    for (Element x : xs) r = join(r, checked(x));
    return r;
  }

  Element index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorKind::UnknownElement, "no element labelled '" + label + "'");
    return static_cast<Element>(it - labels_.begin());
  }

  Element checked(Element a) const {
    if (a >= n_) throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(a));
    return a;
  }

  /// b covers a: a < b with nothing strictly in between.
  bool covers(Element b, Element a) const noexcept {
    if (!lt(a, b)) return false;
    for (std::size_t c = 0; c < n_; ++c)
      if (lt(a, c) && lt(c, b)) return false;
    return true;
  }

  std::vector<Element> atoms() const {
    std::vector<Element> out;
    for (std::size_t a = 0; a < n_; ++a)
      if (covers(a, bottom_)) out.push_back(a);
    return out;
  }

  /// Elements that are not the join of the elements strictly below them.
  std::vector<Element> join_irreducibles() const {
    std::vector<Element> out;
    for (std::size_t a = 0; a < n_; ++a) {
      if (a == bottom_) continue;
      Element below = bottom_;
      for (std::size_t c = 0; c < n_; ++c)
        if (lt(c, a)) below = join(below, c);
      if (below != a) out.push_back(a);
    }
    return out;
  }

  bool is_distributive() const noexcept {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
    return true;
  }

  /// All order pairs (a, b) with a <= b, the relation in the form build() accepts.
  std::vector<std::pair<Element, Element>> leq_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (leq(a, b)) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return x.labels_ == y.labels_ && x.leq_ == y.leq_;
  }

 private:
  FiniteLattice() = default;

  std::optional<Element> least_upper_bound(Element a, Element b) const {
    std::optional<Element> best;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!leq(a, c) || !leq(b, c)) continue;
      if (!best || leq(c, *best)) best = c;
    }
    if (!best) return std::nullopt;
    for (std::size_t c = 0; c < n_; ++c)
      if (leq(a, c) && leq(b, c) && !leq(*best, c)) return std::nullopt;
    return best;
  }

  std::optional<Element> greatest_lower_bound(Element a, Element b) const {
    std::optional<Element> best;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!leq(c, a) || !leq(c, b)) continue;
      if (!best || leq(*best, c)) best = c;
    }
    if (!best) return std::nullopt;
    for (std::size_t c = 0; c < n_; ++c)
      if (leq(c, a) && leq(c, b) && !leq(c, *best)) return std::nullopt;
    return best;
  }

  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Builds a lattice from a generating relation (typically the covering pairs)
/// by taking its reflexive-transitive closure first.
inline FiniteLattice lattice_from_covers(std::vector<std::string> labels,
                                         std::span<const std::pair<Element, Element>> covers) {
  const std::size_t n = labels.size();
  std::vector<char> r(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) r[a * n + a] = 1;
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownElement, "cover pair out of range");
    r[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k * n + j]) r[i * n + j] = 1;
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i * n + j]) pairs.emplace_back(i, j);
  return FiniteLattice::build(std::move(labels), pairs);
}

inline FiniteLattice lattice_from_covers(std::vector<std::string> labels,
                                         std::initializer_list<std::pair<Element, Element>> covers) {
  std::vector<std::pair<Element, Element>> v(covers);
  return lattice_from_covers(std::move(labels), v);
}

class OrthoLattice {
 public:
  /// Checks involution, order reversal, complementation and orthomodularity
  /// exhaustively, in that order.
  static OrthoLattice attach(FiniteLattice base, std::vector<Element> ortho) {
    const std::size_t n = base.size();
    if (ortho.size() != n)
      throw Error(ErrorKind::PreconditionViolated, "orthocomplement table must cover every element");
    for (Element x : ortho) base.checked(x);
    const auto& L = base;
    for (std::size_t a = 0; a < n; ++a)
      if (ortho[ortho[a]] != a)
        throw Error(ErrorKind::NotInvolutive, "'" + L.label(a) + "'");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (L.leq(a, b) && !L.leq(ortho[b], ortho[a]))
          throw Error(ErrorKind::NotOrderReversing, "'" + L.label(a) + "' <= '" + L.label(b) + "'");
    for (std::size_t a = 0; a < n; ++a)
      if (L.meet(a, ortho[a]) != L.bottom() || L.join(a, ortho[a]) != L.top())
        throw Error(ErrorKind::NotComplement, "'" + L.label(a) + "' and its orthocomplement");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (L.leq(a, b) && L.join(a, L.meet(b, ortho[a])) != b)
          throw Error(ErrorKind::NotOrthomodular, "'" + L.label(a) + "' <= '" + L.label(b) + "'");
    return OrthoLattice(std::move(base), std::move(ortho));
  }

  const FiniteLattice& lattice() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  Element ortho(Element a) const { return ortho_.at(a); }
  const std::vector<Element>& ortho_table() const noexcept { return ortho_; }

  /// a ∧ (b ∨ a⊥)
  Element sasaki(Element a, Element b) const {
    base_.checked(a);
    base_.checked(b);
    return base_.meet(a, base_.join(b, ortho_[a]));
  }

  /// a = (a ∧ b) ∨ (a ∧ b⊥), required in both directions.
  bool compatible(Element a, Element b) const {
    base_.checked(a);
    base_.checked(b);
    auto one_way = [&](Element x, Element y) {
      return x == base_.join(base_.meet(x, y), base_.meet(x, ortho_[y]));
    };
    return one_way(a, b) && one_way(b, a);
  }

  /// For weaker <= a: checks φ_weaker(φ_a(b)) = φ_weaker(b) for every b.
  bool foulis_order_check(Element a, Element weaker) const {
    base_.checked(a);
    base_.checked(weaker);
    if (!base_.leq(weaker, a))
      throw Error(ErrorKind::PreconditionViolated,
                  "'" + base_.label(weaker) + "' is not below '" + base_.label(a) + "'");
    for (std::size_t b = 0; b < base_.size(); ++b)
      if (sasaki(weaker, sasaki(a, b)) != sasaki(weaker, b)) return false;
    return true;
  }

 private:
  OrthoLattice(FiniteLattice base, std::vector<Element> ortho)
      : base_(std::move(base)), ortho_(std::move(ortho)) {}

  FiniteLattice base_;
  std::vector<Element> ortho_;
};

inline OrthoLattice attach_ortho(FiniteLattice L, std::vector<Element> ortho) {
  return OrthoLattice::attach(std::move(L), std::move(ortho));
}

/// Small named lattices used throughout tests and the CLI.
namespace lattices {

/// Chain 0 < 1 < ... < n-1. The 3-chain is labelled {0, m, 1}.
inline FiniteLattice chain(std::size_t n) {
  std::vector<std::string> labels;
  if (n == 2) labels = {"0", "1"};
  else if (n == 3) labels = {"0", "m", "1"};
  else
    for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return lattice_from_covers(std::move(labels), covers);
}

/// Four-element Boolean lattice {0, a, b, 1}.
inline FiniteLattice boolean2() {
  return lattice_from_covers({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

/// Power set of an n-element set; element i is the subset with bitmask i.
inline FiniteLattice boolean_cube(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < size; ++m) {
    std::string s = "{";
    for (std::size_t k = 0; k < n; ++k)
      if (m >> k & 1) s += (s.size() > 1 ? "," : "") + std::to_string(k);
    labels.push_back(s + "}");
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if ((a & b) == a) pairs.emplace_back(a, b);
  return FiniteLattice::build(std::move(labels), pairs);
}

/// The six-element lantern MO2 {0, a, a', b, b', 1}: four pairwise
/// incomparable atoms.
inline FiniteLattice mo2() {
  return lattice_from_covers({"0", "a", "a'", "b", "b'", "1"},
                             {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

inline OrthoLattice ortho_boolean2() { return attach_ortho(boolean2(), {3, 2, 1, 0}); }
inline OrthoLattice ortho_mo2() { return attach_ortho(mo2(), {5, 2, 1, 4, 3, 0}); }
inline OrthoLattice ortho_chain2() { return attach_ortho(chain(2), {1, 0}); }

}  // namespace lattices

}  // namespace qcomp
