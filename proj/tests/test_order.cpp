#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qcomp;

namespace {

std::vector<FiniteLattice> sample_lattices() {
  return {lattices::chain(2), lattices::chain(3), lattices::chain(5), lattices::boolean2(), lattices::mo2(),
          lattices::boolean_cube(3)};
}

std::vector<OrthoLattice> sample_ortholattices() {
  return {lattices::ortho_chain2(), lattices::ortho_boolean2(), lattices::ortho_mo2(),
          attach_ortho(lattices::boolean_cube(3), {7, 6, 5, 4, 3, 2, 1, 0})};
}

template <typename Err>
ErrorKind kind_of(Err&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no qcomp::Error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(BuildLattice, TwoChain) {
  auto L = FiniteLattice::build({"0", "1"}, {{0, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(L.size(), 2u);
  EXPECT_EQ(L.label(L.bottom()), "0");
  EXPECT_EQ(L.label(L.top()), "1");
}

TEST(BuildLattice, BooleanMeetJoinMatchBruteForce) {
  auto L = lattices::boolean2();
  const Element a = L.index_of("a"), b = L.index_of("b");
  EXPECT_EQ(L.meet(a, b), *oracle::glb(L, {a, b}));
  EXPECT_EQ(L.join(a, b), *oracle::lub(L, {a, b}));
  EXPECT_EQ(L.label(L.meet(a, b)), "0");
  EXPECT_EQ(L.label(L.join(a, b)), "1");
}

TEST(BuildLattice, TwoMinimalUpperBoundsIsNotALattice) {
  // a, b below both c and d: {a, b} has two minimal upper bounds.
  std::vector<std::pair<Element, Element>> pairs{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  auto P = [&] { return FiniteLattice::build({"a", "b", "c", "d"}, pairs); };
  EXPECT_EQ(kind_of(P), ErrorKind::NotALattice);

  // The same defect with global bounds added.
  auto Q = [] {
    return lattice_from_covers({"0", "a", "b", "c", "d", "1"},
                               {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  };
  EXPECT_EQ(kind_of(Q), ErrorKind::NotALattice);
  // Independent confirmation on the raw order: c and d both bound {a, b}
  // from above and are incomparable, so neither is least.
  std::set<std::pair<Element, Element>> order{{1, 3}, {1, 4}, {2, 3}, {2, 4}};
  EXPECT_TRUE(order.count({1, 3}) && order.count({2, 3}) && order.count({1, 4}) && order.count({2, 4}));
  EXPECT_FALSE(order.count({3, 4}) || order.count({4, 3}));
}

TEST(BuildLattice, RejectsNonPosets) {
  EXPECT_EQ(kind_of([] { return FiniteLattice::build({"x", "y"}, {{0, 0}, {0, 1}}); }), ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of([] { return FiniteLattice::build({"x", "y"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}); }),
            ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of([] {
              return FiniteLattice::build({"x", "y", "z"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
            }),
            ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of([] { return FiniteLattice::build({"x", "x"}, {{0, 0}, {1, 1}, {0, 1}}); }), ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of([] { return FiniteLattice::build({}, {}); }), ErrorKind::NoBounds);
  EXPECT_EQ(kind_of([] { return FiniteLattice::build({"x"}, {{0, 3}}); }), ErrorKind::UnknownElement);
}

TEST(BuildLattice, AntichainHasNoBounds) {
  auto A = [] { return FiniteLattice::build({"x", "y"}, {{0, 0}, {1, 1}}); };
  const auto k = kind_of(A);
  EXPECT_TRUE(k == ErrorKind::NotALattice || k == ErrorKind::NoBounds);
}

TEST(MeetJoin, SetOperations) {
  auto B2 = lattices::boolean2();
  EXPECT_EQ(B2.meet(std::span<const Element>{}), B2.top());
  EXPECT_EQ(B2.label(B2.meet(std::span<const Element>{})), "1");
  EXPECT_EQ(B2.join(std::span<const Element>{}), B2.bottom());
  std::vector<Element> ab{B2.index_of("a"), B2.index_of("b")};
  EXPECT_EQ(B2.label(B2.join(ab)), "1");

  auto M = lattices::mo2();
  std::vector<Element> aa{M.index_of("a"), M.index_of("a'")};
  EXPECT_EQ(M.meet(aa), *oracle::glb(M, aa));
  EXPECT_EQ(M.label(M.meet(aa)), "0");
}

TEST(MeetJoin, EverySubsetMatchesBruteForce) {
  for (const auto& L : sample_lattices()) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << L.size()); ++mask) {
      std::vector<Element> xs;
      for (Element x = 0; x < L.size(); ++x)
        if (mask >> x & 1) xs.push_back(x);
      ASSERT_EQ(L.meet(xs), *oracle::glb(L, xs));
      ASSERT_EQ(L.join(xs), *oracle::lub(L, xs));
    }
  }
}

TEST(MeetJoin, PosetAxiomsAndBounds) {
  for (const auto& L : sample_lattices()) {
    for (Element a = 0; a < L.size(); ++a) {
      EXPECT_TRUE(L.leq(a, a));
      EXPECT_TRUE(L.leq(L.bottom(), a));
      EXPECT_TRUE(L.leq(a, L.top()));
      for (Element b = 0; b < L.size(); ++b) {
        if (a != b) EXPECT_FALSE(L.leq(a, b) && L.leq(b, a));
        for (Element c = 0; c < L.size(); ++c)
          if (L.leq(a, b) && L.leq(b, c)) EXPECT_TRUE(L.leq(a, c));
      }
    }
  }
}

TEST(MeetJoin, UnknownElementRejected) {
  auto L = lattices::boolean2();
  std::vector<Element> bad{0, 9};
  EXPECT_EQ(kind_of([&] { return L.meet(bad); }), ErrorKind::UnknownElement);
  EXPECT_EQ(kind_of([&] { return L.index_of("zz"); }), ErrorKind::UnknownElement);
}

TEST(Atoms, MatchCoveringScan) {
  auto labels = [](const FiniteLattice& L) {
    std::set<std::string> s;
    for (Element a : L.atoms()) s.insert(L.label(a));
    return s;
  };
  EXPECT_EQ(labels(lattices::chain(2)), (std::set<std::string>{"1"}));
  EXPECT_EQ(labels(lattices::boolean2()), (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(labels(lattices::mo2()), (std::set<std::string>{"a", "a'", "b", "b'"}));
  for (const auto& L : sample_lattices()) {
    auto v = L.atoms();
    EXPECT_EQ(std::set<Element>(v.begin(), v.end()), oracle::atoms(L));
  }
}

TEST(Distributivity, BooleanYesLanternNo) {
  EXPECT_TRUE(lattices::boolean2().is_distributive());
  EXPECT_TRUE(lattices::boolean_cube(3).is_distributive());
  EXPECT_TRUE(lattices::chain(4).is_distributive());
  EXPECT_FALSE(lattices::mo2().is_distributive());
}

TEST(AttachOrtho, ValidAndInvalid) {
  EXPECT_NO_THROW(lattices::ortho_boolean2());
  auto M = lattices::ortho_mo2();
  EXPECT_FALSE(M.lattice().is_distributive());
  EXPECT_EQ(M.lattice().label(M.ortho(M.lattice().index_of("a"))), "a'");
  EXPECT_EQ(M.lattice().label(M.ortho(M.lattice().index_of("b"))), "b'");

  EXPECT_EQ(kind_of([] { return attach_ortho(lattices::boolean2(), {3, 1, 2, 0}); }), ErrorKind::NotComplement);
  EXPECT_EQ(kind_of([] { return attach_ortho(lattices::boolean2(), {3, 2, 2, 0}); }), ErrorKind::NotInvolutive);
  EXPECT_EQ(kind_of([] { return attach_ortho(lattices::chain(3), {0, 1, 2}); }), ErrorKind::NotOrderReversing);
  EXPECT_EQ(kind_of([] { return attach_ortho(lattices::boolean2(), {3, 2, 1}); }), ErrorKind::PreconditionViolated);
}

TEST(AttachOrtho, HexagonIsOrthoButNotOrthomodular) {
  // 0 < a < b' < 1 and 0 < b < a' < 1 with a <-> a', b <-> b'.
  auto L = lattice_from_covers({"0", "a", "b'", "b", "a'", "1"}, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(kind_of([&] { return attach_ortho(L, {5, 4, 3, 2, 1, 0}); }), ErrorKind::NotOrthomodular);
}

TEST(OrthoLaws, Exhaustive) {
  for (const auto& O : sample_ortholattices()) {
    const auto& L = O.lattice();
    for (Element a = 0; a < L.size(); ++a) {
      EXPECT_EQ(O.ortho(O.ortho(a)), a);
      EXPECT_EQ(L.meet(a, O.ortho(a)), L.bottom());
      EXPECT_EQ(L.join(a, O.ortho(a)), L.top());
      for (Element b = 0; b < L.size(); ++b) {
        if (L.leq(a, b)) {
          EXPECT_TRUE(L.leq(O.ortho(b), O.ortho(a)));
          EXPECT_EQ(b, L.join(a, L.meet(b, O.ortho(a))));
        }
      }
    }
  }
}

TEST(Sasaki, Examples) {
  auto M = lattices::ortho_mo2();
  const auto& L = M.lattice();
  const Element a = L.index_of("a"), b = L.index_of("b");
  EXPECT_EQ(M.sasaki(a, b), a);
  EXPECT_EQ(M.sasaki(a, M.ortho(a)), L.bottom());
  for (const auto& O : sample_ortholattices())
    for (Element x = 0; x < O.size(); ++x)
      for (Element y = 0; y < O.size(); ++y)
        if (O.lattice().leq(y, x)) EXPECT_EQ(O.sasaki(x, y), y);
}

TEST(Sasaki, BelowAndIsotone) {
  for (const auto& O : sample_ortholattices()) {
    const auto& L = O.lattice();
    for (Element a = 0; a < L.size(); ++a)
      for (Element b = 0; b < L.size(); ++b) {
        EXPECT_TRUE(L.leq(O.sasaki(a, b), a));
        EXPECT_EQ(O.sasaki(a, b), L.meet(a, L.join(b, O.ortho(a))));
        for (Element c = 0; c < L.size(); ++c)
          if (L.leq(b, c)) EXPECT_TRUE(L.leq(O.sasaki(a, b), O.sasaki(a, c)));
      }
  }
}

TEST(Compatible, Examples) {
  auto B = lattices::ortho_boolean2();
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) EXPECT_TRUE(B.compatible(a, b));
  auto M = lattices::ortho_mo2();
  const Element a = M.lattice().index_of("a"), b = M.lattice().index_of("b");
  EXPECT_FALSE(M.compatible(a, b));
  for (Element x = 0; x < M.size(); ++x) EXPECT_TRUE(M.compatible(x, M.ortho(x)));
}

TEST(Compatible, ImpliesSasakiIsMeet) {
  for (const auto& O : sample_ortholattices())
    for (Element a = 0; a < O.size(); ++a)
      for (Element b = 0; b < O.size(); ++b)
        if (O.compatible(a, b)) EXPECT_EQ(O.sasaki(a, b), O.lattice().meet(a, b));
}

TEST(Foulis, Examples) {
  auto B = lattices::ortho_boolean2();
  for (Element a = 0; a < 4; ++a) EXPECT_TRUE(B.foulis_order_check(a, a));
  for (Element b = 0; b < 4; ++b) EXPECT_EQ(B.sasaki(B.lattice().top(), b), b);
  EXPECT_TRUE(B.foulis_order_check(B.lattice().top(), B.lattice().top()));
  auto M = lattices::ortho_mo2();
  const Element a = M.lattice().index_of("a");
  EXPECT_TRUE(M.foulis_order_check(M.lattice().top(), a));
  EXPECT_TRUE(M.foulis_order_check(a, a));
  EXPECT_EQ(kind_of([&] { return M.foulis_order_check(a, M.lattice().index_of("b")); }),
            ErrorKind::PreconditionViolated);
}

TEST(Foulis, CompositionLawExhaustive) {
  for (const auto& O : sample_ortholattices()) {
    const auto& L = O.lattice();
    for (Element a = 0; a < L.size(); ++a)
      for (Element w = 0; w < L.size(); ++w) {
        if (!L.leq(w, a)) continue;
        EXPECT_TRUE(O.foulis_order_check(a, w));
        for (Element b = 0; b < L.size(); ++b) EXPECT_EQ(O.sasaki(w, O.sasaki(a, b)), O.sasaki(w, b));
      }
  }
}
