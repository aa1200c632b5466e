#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace qcomp;

namespace {

LatticePtr share(FiniteLattice L) { return std::make_shared<const FiniteLattice>(std::move(L)); }

SpacePtr space(std::vector<std::string> st, LatticePtr L, std::vector<Element> c) {
  return std::make_shared<const ProperStateSpace>(std::move(st), std::move(L), std::move(c));
}

SpacePtr two_state() { return space({"p", "q"}, share(lattices::chain(2)), {1, 1}); }
SpacePtr three_state_chain() { return space({"p", "q", "r"}, share(lattices::chain(3)), {1, 1, 2}); }
SpacePtr three_state_b2() { return space({"p", "q", "r"}, share(lattices::boolean2()), {1, 2, 3}); }
SpacePtr four_state_mo2() { return space({"p", "q", "r", "s"}, share(lattices::mo2()), {1, 2, 3, 4}); }
SpacePtr four_state_chain() { return space({"p", "q", "r", "s"}, share(lattices::chain(3)), {1, 1, 2, 2}); }

oracle::SetSpace set_space(const SpacePtr& S) { return {S->lattice().get(), S->c_map()}; }

/// Every transition map on S (all images), members or not.
std::vector<TransitionMap> all_maps(const SpacePtr& S) {
  std::vector<TransitionMap> out;
  const std::size_t n = S->size();
  const std::size_t per = std::size_t{1} << n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= per;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<StateSet> im(n);
    std::size_t c = code;
    for (std::size_t p = 0; p < n; ++p) {
      im[p] = static_cast<StateSet>(c % per);
      c /= per;
    }
    out.emplace_back(S, im);
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no qcomp::Error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(StateSpace, ClosureAndPreorder) {
  auto S = three_state_chain();
  EXPECT_EQ(S->C(0), S->lattice()->bottom());
  EXPECT_EQ(S->C(0b001), 1u);
  EXPECT_EQ(S->C(0b101), 2u);
  EXPECT_EQ(S->closure(0b001), StateSet{0b011});
  // p and q share a property: ≤_C is a pre-order, not a partial order.
  EXPECT_TRUE(S->leq_C(0, 1) && S->leq_C(1, 0));
  for (std::size_t p = 0; p < 3; ++p) {
    EXPECT_TRUE(S->leq_C(p, p));
    for (std::size_t q = 0; q < 3; ++q)
      for (std::size_t r = 0; r < 3; ++r)
        if (S->leq_C(p, q) && S->leq_C(q, r)) EXPECT_TRUE(S->leq_C(p, r));
  }
  EXPECT_THROW(space({"p"}, share(lattices::chain(2)), {0, 1}), Error);
}

TEST(IsMember, Examples) {
  for (const auto& S : {two_state(), three_state_chain(), three_state_b2(), four_state_mo2()}) {
    EXPECT_TRUE(is_member(TransitionMap::identity(S)));
    EXPECT_TRUE(is_member(TransitionMap::empty(S)));
  }
}

TEST(IsMember, FrozenCounterexampleFoundByExhaustiveSearch) {
  auto S = three_state_chain();
  auto oracle_space = set_space(S);
  // Oracle: every non-member whose images are singletons (a plain function
  // on states), found by exhaustive search with the set-based checker.
  std::vector<TransitionMap> found;
  for (const auto& f : all_maps(S)) {
    auto sets = oracle::to_sets(f);
    bool singletons = true;
    for (const auto& s : sets) singletons = singletons && s.size() == 1;
    if (singletons && !oracle_space.member(sets)) found.push_back(f);
  }
  ASSERT_FALSE(found.empty());
  TransitionMap frozen(S, {0b001, 0b100, 0b100});  // p -> {p}, q -> {r}, r -> {r}
  EXPECT_NE(std::find(found.begin(), found.end(), frozen), found.end());
  EXPECT_FALSE(is_member(frozen));
  // Violated at T = {p}: f(cl{p}) = {p, r} but cl f{p} = {p, q}.
  EXPECT_EQ(frozen(S->closure(0b001)), StateSet{0b101});
  EXPECT_EQ(S->closure(frozen(0b001)), StateSet{0b011});
}

TEST(IsMember, AgreesWithSetOracle) {
  for (const auto& S : {two_state(), three_state_chain(), three_state_b2()}) {
    auto os = set_space(S);
    std::size_t members = 0;
    for (const auto& f : all_maps(S)) {
      const bool m = is_member(f);
      ASSERT_EQ(m, os.member(oracle::to_sets(f)));
      members += m;
    }
    EXPECT_EQ(members, enumerate_members(S).size());
  }
  auto S4 = four_state_mo2();
  auto os = set_space(S4);
  Rng rng(1);
  for (int t = 0; t < 2000; ++t) {
    std::vector<StateSet> im(4);
    for (auto& s : im) s = static_cast<StateSet>(uniform_index(rng, 0, 15));
    TransitionMap f(S4, im);
    ASSERT_EQ(is_member(f), os.member(oracle::to_sets(f)));
  }
}

TEST(TransitionCompose, UnitAndEmptyUnion) {
  auto S = three_state_b2();
  auto members = enumerate_members(S);
  auto id = TransitionMap::identity(S);
  for (const auto& f : members) {
    EXPECT_EQ(compose(f, id), f);
    EXPECT_EQ(compose(id, f), f);
  }
  EXPECT_EQ(union_join(S, {}), TransitionMap::empty(S));
}

TEST(TransitionCompose, RejectsNonMembersAndMixedSpaces) {
  auto S = three_state_chain();
  TransitionMap bad(S, {0b001, 0b100, 0b100});
  EXPECT_EQ(kind_of([&] { compose(bad, TransitionMap::identity(S)); }), ErrorKind::NotMember);
  EXPECT_EQ(kind_of([&] { compose(TransitionMap::identity(S), TransitionMap::identity(two_state())); }),
            ErrorKind::MixedSignatures);
  const TransitionMap one[] = {bad};
  EXPECT_EQ(kind_of([&] { union_join(S, one); }), ErrorKind::NotMember);
}

TEST(Quantale, LawsExhaustiveUpToThreeStates) {
  for (const auto& S : {two_state(), space({"p", "q"}, share(lattices::boolean2()), {1, 2}), three_state_chain(),
                        three_state_b2()}) {
    auto r = check_quantale_laws(S);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.identity_member);
    EXPECT_EQ(r.associativity_failures, 0u);
    EXPECT_EQ(r.left_distributivity_failures, 0u);
    EXPECT_EQ(r.right_distributivity_failures, 0u);
    EXPECT_EQ(r.triples_checked, r.members * r.members * r.members);
  }
}

TEST(Quantale, DistributivityMatchesSetOracle) {
  auto S = three_state_chain();
  auto os = set_space(S);
  auto members = enumerate_members(S);
  Rng rng(2);
  for (int t = 0; t < 3000; ++t) {
    auto pick = [&]() -> const TransitionMap& { return members[uniform_index(rng, 0, members.size() - 1)]; };
    const auto &f = pick(), &g = pick(), &h = pick();
    auto fs = oracle::to_sets(f), gs = oracle::to_sets(g), hs = oracle::to_sets(h);
    // f∘(g ∪ h) evaluated on singletons with sets.
    for (std::size_t p = 0; p < 3; ++p) {
      std::set<std::size_t> gh = gs[p];
      gh.insert(hs[p].begin(), hs[p].end());
      auto lhs = os.apply(fs, gh);
      auto rhs = os.apply(fs, gs[p]);
      auto fh = os.apply(fs, hs[p]);
      rhs.insert(fh.begin(), fh.end());
      ASSERT_EQ(lhs, rhs);
    }
    const TransitionMap gh[] = {g, h};
    const TransitionMap fg_fh[] = {compose(f, g), compose(f, h)};
    ASSERT_EQ(compose(f, union_join(S, gh)), union_join(S, fg_fh));
  }
}

TEST(Quantale, FourStateSampled) {
  for (const auto& S : {four_state_mo2(), four_state_chain()}) {
    auto members = enumerate_members(S);
    Rng rng(3);
    for (int t = 0; t < 5000; ++t) {
      auto pick = [&]() -> const TransitionMap& { return members[uniform_index(rng, 0, members.size() - 1)]; };
      const auto &f = pick(), &g = pick(), &h = pick();
      const TransitionMap gh[] = {g, h};
      auto u = union_join(S, gh);
      ASSERT_TRUE(is_member(compose(f, g)));
      ASSERT_TRUE(is_member(u));
      ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
      const TransitionMap fg_fh[] = {compose(f, g), compose(f, h)};
      ASSERT_EQ(compose(f, u), union_join(S, fg_fh));
    }
  }
}

TEST(Quantale, EnumerationLimit) {
  auto S = space({"a", "b", "c", "d", "e"}, share(lattices::chain(2)), {1, 1, 1, 1, 1});
  EXPECT_EQ(kind_of([&] { enumerate_members(S); }), ErrorKind::TooLarge);
}

TEST(Propagation, Examples) {
  auto S = three_state_chain();
  const auto& L = S->lattice();
  EXPECT_EQ(property_propagation(TransitionMap::identity(S)), identity_map(L));
  EXPECT_EQ(property_propagation(TransitionMap::empty(S)), absurd_state(L, L));
  EXPECT_EQ(property_propagation(TransitionMap::top(S)), separation_state(L, L));

  // Collapse q onto p: p and q share the property m.
  TransitionMap collapse(S, {0b001, 0b001, 0b100});
  ASSERT_TRUE(is_member(collapse));
  auto fL = property_propagation(collapse);
  auto brute = oracle::join_maps(*L, *L);
  EXPECT_NE(std::find(brute.begin(), brute.end(), fL.table()), brute.end());
  EXPECT_EQ(fL, identity_map(L));
}

TEST(Propagation, AgreesWithDefinitionOnCImages) {
  for (const auto& S : {two_state(), three_state_chain(), three_state_b2()}) {
    for (const auto& f : enumerate_members(S)) {
      auto fL = property_propagation(f);
      for (StateSet T = 0; T <= S->all(); ++T) ASSERT_EQ(fL(S->C(T)), S->C(f(T)));
    }
  }
}

TEST(Propagation, NoLeastCImageIsIllDefined) {
  // Two states with properties {0,1} and {0,2} in the cube: above {0} sit
  // both and they are incomparable.
  auto S = space({"p", "q"}, share(lattices::boolean_cube(3)), {3, 5});
  EXPECT_EQ(kind_of([&] { property_propagation(TransitionMap::identity(S)); }), ErrorKind::IllDefined);
}

TEST(Epimorphism, Examples) {
  auto S2 = two_state();
  const TransitionMap id[] = {TransitionMap::identity(S2)};
  EXPECT_TRUE(epimorphism_check(S2, id).passed());
  auto all = enumerate_members(S2);
  auto r = epimorphism_check(S2, all);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.pairs_checked, all.size() * all.size());
}

TEST(Epimorphism, ThreeStateExhaustive) {
  for (const auto& S : {three_state_chain(), three_state_b2()}) {
    auto all = enumerate_members(S);
    EXPECT_TRUE(epimorphism_check(S, all).passed());
  }
}

TEST(Epimorphism, FourStateRandomPairs) {
  for (const auto& S : {four_state_mo2(), four_state_chain()}) {
    auto members = enumerate_members(S);
    Rng rng(4);
    for (int t = 0; t < 300; ++t) {
      const TransitionMap pair[] = {members[uniform_index(rng, 0, members.size() - 1)],
                                    members[uniform_index(rng, 0, members.size() - 1)]};
      ASSERT_TRUE(epimorphism_check(S, pair).passed());
    }
  }
}

TEST(QuantaleSuite, Quantale) { EXPECT_TRUE(run_suite("quantale", 5, 500).passed()); }
