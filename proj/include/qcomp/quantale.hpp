#pragma once

// Finite proper-state spaces (Σ, C), the quantale Q#(Σ) of union-preserving
// transitions compatible with the C-closure, and its projection onto
// join-preserving property propagations L -> L.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qcomp/error.hpp"
#include "qcomp/galois.hpp"
#include "qcomp/order.hpp"

namespace qcomp {

/// Subset of Σ as a bitmask over state indices.
using StateSet = std::uint32_t;

inline constexpr std::size_t kMaxStates = 16;

class ProperStateSpace {
 public:
  ProperStateSpace(std::vector<std::string> states, LatticePtr lattice, std::vector<Element> c_map)
      : states_(std::move(states)), lattice_(std::move(lattice)), c_map_(std::move(c_map)) {
    if (states_.size() > kMaxStates)
      throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxStates) + " proper states");
    if (c_map_.size() != states_.size())
      throw Error(ErrorKind::PreconditionViolated, "c_map must assign a property to every state");
    for (Element e : c_map_) lattice_->checked(e);
  }

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const LatticePtr& lattice() const noexcept { return lattice_; }
  const std::vector<Element>& c_map() const noexcept { return c_map_; }
  StateSet all() const noexcept { return (StateSet{1} << size()) - 1; }

  /// Strongest property implied by every state of T; C(∅) is bottom.
  Element C(StateSet T) const {
    Element acc = lattice_->bottom();
    for (std::size_t p = 0; p < size(); ++p)
      if (T >> p & 1) acc = lattice_->join(acc, c_map_[p]);
    return acc;
  }

  /// {p | c(p) <= x}
  StateSet below(Element x) const {
    StateSet out = 0;
    for (std::size_t p = 0; p < size(); ++p)
      if (lattice_->leq(c_map_[p], x)) out |= StateSet{1} << p;
    return out;
  }

  /// Induced closure on subsets: {p | c(p) <= C(T)}.
  StateSet closure(StateSet T) const { return below(C(T)); }

  /// p ≤_C q; a pre-order (distinct states may share a property).
  bool leq_C(std::size_t p, std::size_t q) const { return lattice_->leq(c_map_.at(p), c_map_.at(q)); }

  /// The C-images {C(T)}: bottom plus all joins of generators.
  std::vector<Element> c_images() const {
    std::vector<char> seen(lattice_->size(), 0);
    for (StateSet T = 0; T <= all(); ++T) {
      seen[C(T)] = 1;
      if (T == all()) break;
    }
    std::vector<Element> out;
    for (Element x = 0; x < seen.size(); ++x)
      if (seen[x]) out.push_back(x);
    return out;
  }

 private:
  std::vector<std::string> states_;
  LatticePtr lattice_;
  std::vector<Element> c_map_;
};

using SpacePtr = std::shared_ptr<const ProperStateSpace>;

/// A transition defined on singletons and extended by union.
class TransitionMap {
 public:
  TransitionMap(SpacePtr space, std::vector<StateSet> images) : space_(std::move(space)), images_(std::move(images)) {
    if (images_.size() != space_->size())
      throw Error(ErrorKind::PreconditionViolated, "transition needs one image per state");
    for (StateSet s : images_)
      if (s & ~space_->all()) throw Error(ErrorKind::UnknownElement, "image mentions an unknown state");
  }

  static TransitionMap identity(const SpacePtr& space) {
    std::vector<StateSet> im(space->size());
    for (std::size_t p = 0; p < im.size(); ++p) im[p] = StateSet{1} << p;
    return TransitionMap(space, std::move(im));
  }
  static TransitionMap empty(const SpacePtr& space) {
    return TransitionMap(space, std::vector<StateSet>(space->size(), 0));
  }
  /// Every state goes to all of Σ.
  static TransitionMap top(const SpacePtr& space) {
    return TransitionMap(space, std::vector<StateSet>(space->size(), space->all()));
  }

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<StateSet>& images() const noexcept { return images_; }

  StateSet operator()(StateSet T) const {
    StateSet out = 0;
    for (std::size_t p = 0; p < images_.size(); ++p)
      if (T >> p & 1) out |= images_[p];
    return out;
  }

  friend bool operator==(const TransitionMap& f, const TransitionMap& g) { return f.images_ == g.images_; }

 private:
  SpacePtr space_;
  std::vector<StateSet> images_;
};

/// f(closure(T)) ⊆ closure(f(T)) for every T ⊆ Σ.
inline bool is_member(const TransitionMap& f) {
  const auto& S = *f.space();
  for (StateSet T = 0;; ++T) {
    const StateSet lhs = f(S.closure(T));
    if (lhs & ~S.closure(f(T))) return false;
    if (T == S.all()) break;
  }
  return true;
}

namespace detail {
inline void require_same_space(const TransitionMap& f, const TransitionMap& g) {
  if (f.space() != g.space() && !(f.space()->states() == g.space()->states() &&
                                  f.space()->c_map() == g.space()->c_map() &&
                                  same_lattice(f.space()->lattice(), g.space()->lattice())))
    throw Error(ErrorKind::MixedSignatures, "transitions on different state spaces");
}
inline void require_member(const TransitionMap& f) {
  if (!is_member(f)) throw Error(ErrorKind::NotMember, "transition is not in Q#");
}
}  // namespace detail

/// (f ∘ g)(T) = f(g(T)); both must be members.
inline TransitionMap compose(const TransitionMap& f, const TransitionMap& g) {
  detail::require_same_space(f, g);
  detail::require_member(f);
  detail::require_member(g);
  std::vector<StateSet> im(g.images().size());
  for (std::size_t p = 0; p < im.size(); ++p) im[p] = f(g.images()[p]);
  return TransitionMap(f.space(), std::move(im));
}

/// Pointwise union; the empty union is the constant-∅ transition.
inline TransitionMap union_join(const SpacePtr& space, std::span<const TransitionMap> fs) {
  std::vector<StateSet> im(space->size(), 0);
  for (const auto& f : fs) {
    detail::require_same_space(f, TransitionMap::empty(space));
    detail::require_member(f);
    for (std::size_t p = 0; p < im.size(); ++p) im[p] |= f.images()[p];
  }
  return TransitionMap(space, std::move(im));
}

/// f_L : C(T) ↦ C(f(T)) on the C-images, extended to all of L through the
/// least C-image above the argument (C(Σ) when there is none).
inline JoinMap property_propagation(const TransitionMap& f) {
  detail::require_member(f);
  const auto& S = *f.space();
  const auto& L = *S.lattice();
  constexpr Element unset = ~Element{0};
  std::vector<Element> on_images(L.size(), unset);
  std::vector<StateSet> witness(L.size(), 0);
  for (StateSet T = 0;; ++T) {
    const Element x = S.C(T);
    const Element y = S.C(f(T));
    if (on_images[x] == unset) {
      on_images[x] = y;
      witness[x] = T;
    } else if (on_images[x] != y) {
      throw Error(ErrorKind::IllDefined, "subsets with masks " + std::to_string(witness[x]) + " and " +
                                             std::to_string(T) + " share C but their images do not");
    }
    if (T == S.all()) break;
  }
  // When C is onto L this loop is the identity on arguments. Otherwise the
  // C-images above x need a least element for the extension to exist.
  const Element full = S.C(S.all());
  std::vector<Element> table(L.size());
  for (Element x = 0; x < L.size(); ++x) {
    if (!L.leq(x, full)) {
      table[x] = on_images[full];
      continue;
    }
    std::optional<Element> up;
    for (Element s = 0; s < L.size(); ++s) {
      if (on_images[s] == unset || !L.leq(x, s)) continue;
      bool least = true;
      for (Element t = 0; t < L.size() && least; ++t)
        if (on_images[t] != unset && L.leq(x, t) && !L.leq(s, t)) least = false;
      if (least) up = s;
    }
    if (!up)
      throw Error(ErrorKind::IllDefined,
                  "no least C-image above '" + L.label(x) + "'; propagation does not extend to the whole lattice");
    table[x] = on_images[*up];
  }
  return JoinMap(S.lattice(), S.lattice(), std::move(table));
}

/// Composition of join maps on one lattice: (f ∘ g)(x) = f(g(x)).
inline JoinMap compose(const JoinMap& f, const JoinMap& g) {
  if (!same_lattice(g.target(), f.source())) throw Error(ErrorKind::MixedSignatures, "compose join maps");
  std::vector<Element> t(g.table().size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = f(g(a));
  return JoinMap(g.source(), f.target(), std::move(t));
}

struct EpimorphismReport {
  std::size_t pairs_checked = 0;
  std::size_t composition_failures = 0;
  std::size_t union_failures = 0;
  bool empty_union_ok = true;
  std::vector<std::string> witnesses;

  bool passed() const noexcept { return composition_failures == 0 && union_failures == 0 && empty_union_ok; }
};

/// For every ordered pair in the sample: propagation(f∘g) = propagation(f)∘propagation(g)
/// and propagation(f ∪ g) = propagation(f) ∨ propagation(g).
inline EpimorphismReport epimorphism_check(const SpacePtr& space, std::span<const TransitionMap> sample) {
  EpimorphismReport rep;
  const auto& L = space->lattice();
  std::vector<JoinMap> props;
  props.reserve(sample.size());
  for (const auto& f : sample) props.push_back(property_propagation(f));
  rep.empty_union_ok =
      property_propagation(union_join(space, std::span<const TransitionMap>{})) == absurd_state(L, L);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      ++rep.pairs_checked;
      if (!(property_propagation(compose(sample[i], sample[j])) == compose(props[i], props[j]))) {
        ++rep.composition_failures;
        if (rep.witnesses.size() < 8)
          rep.witnesses.push_back("composition " + std::to_string(i) + "," + std::to_string(j));
      }
      const TransitionMap pair[] = {sample[i], sample[j]};
      const JoinMap jp[] = {props[i], props[j]};
      if (!(property_propagation(union_join(space, pair)) == pointwise_join(L, L, jp))) {
        ++rep.union_failures;
        if (rep.witnesses.size() < 8) rep.witnesses.push_back("union " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  return rep;
}

inline constexpr std::size_t kQuantaleEnumerationLimit = 4;

/// Every member of Q#(Σ), in lexicographic order of the per-state images.
inline std::vector<TransitionMap> enumerate_members(const SpacePtr& space) {
  const std::size_t n = space->size();
  if (n > kQuantaleEnumerationLimit)
    throw Error(ErrorKind::TooLarge, "Q# enumeration limited to " + std::to_string(kQuantaleEnumerationLimit) +
                                         " states");
  std::vector<TransitionMap> out;
  std::vector<StateSet> im(n, 0);
  const StateSet full = space->all();
  while (true) {
    TransitionMap f(space, im);
    if (is_member(f)) out.push_back(std::move(f));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (im[k] < full) {
        ++im[k];
        for (std::size_t r = k + 1; r < n; ++r) im[r] = 0;
        break;
      }
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

struct QuantaleReport {
  std::size_t members = 0;
  bool identity_member = false;
  bool closed_under_union = true;
  bool closed_under_composition = true;
  bool unit_law = true;
  std::size_t triples_checked = 0;
  std::size_t associativity_failures = 0;
  std::size_t left_distributivity_failures = 0;   ///< f∘(g ∪ h) vs f∘g ∪ f∘h, and f∘∅ = ∅
  std::size_t right_distributivity_failures = 0;  ///< (g ∪ h)∘f vs g∘f ∪ h∘f, and ∅∘f = ∅

  /// Right distributivity is reported separately and does not gate this.
  bool passed() const noexcept {
    return identity_member && closed_under_union && closed_under_composition && unit_law &&
           associativity_failures == 0 && left_distributivity_failures == 0;
  }
};

/// Exhaustive quantale laws on Q#(Σ). Binary unions suffice for arbitrary
/// ones here since ⋃ is pointwise on singletons and Σ is finite; the empty
/// union is checked separately.
inline QuantaleReport check_quantale_laws(const SpacePtr& space) {
  QuantaleReport rep;
  auto members = enumerate_members(space);
  const std::size_t m = members.size();
  rep.members = m;
  std::map<std::vector<StateSet>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(members[i].images(), i);
  constexpr std::size_t missing = ~std::size_t{0};
  auto lookup = [&](const TransitionMap& f) {
    auto it = index.find(f.images());
    return it == index.end() ? missing : it->second;
  };

  const auto id = TransitionMap::identity(space);
  const auto none = TransitionMap::empty(space);
  rep.identity_member = lookup(id) != missing;
  const std::size_t empty_idx = lookup(none);

  // Composition and union tables; a missing entry means Q# is not closed.
  std::vector<std::size_t> comp(m * m), uni(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<StateSet> c(space->size()), u(space->size());
      for (std::size_t p = 0; p < space->size(); ++p) {
        c[p] = members[i](members[j].images()[p]);
        u[p] = members[i].images()[p] | members[j].images()[p];
      }
      comp[i * m + j] = lookup(TransitionMap(space, c));
      uni[i * m + j] = lookup(TransitionMap(space, u));
      if (comp[i * m + j] == missing) rep.closed_under_composition = false;
      if (uni[i * m + j] == missing) rep.closed_under_union = false;
    }
  }
  if (!rep.closed_under_composition || !rep.closed_under_union || empty_idx == missing) {
    rep.closed_under_union = rep.closed_under_union && empty_idx != missing;
    return rep;
  }
  if (rep.identity_member) {
    const std::size_t id_idx = lookup(id);
    for (std::size_t i = 0; i < m; ++i)
      if (comp[i * m + id_idx] != i || comp[id_idx * m + i] != i) rep.unit_law = false;
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (comp[f * m + empty_idx] != empty_idx) ++rep.left_distributivity_failures;
    if (comp[empty_idx * m + f] != empty_idx) ++rep.right_distributivity_failures;
    for (std::size_t g = 0; g < m; ++g) {
      const std::size_t fg = comp[f * m + g];
      for (std::size_t h = 0; h < m; ++h) {
        ++rep.triples_checked;
        if (comp[fg * m + h] != comp[f * m + comp[g * m + h]]) ++rep.associativity_failures;
        if (comp[f * m + uni[g * m + h]] != uni[fg * m + comp[f * m + h]]) ++rep.left_distributivity_failures;
        if (comp[uni[g * m + h] * m + f] != uni[comp[g * m + f] * m + comp[h * m + f]])
          ++rep.right_distributivity_failures;
      }
    }
  }
  return rep;
}

}  // namespace qcomp
