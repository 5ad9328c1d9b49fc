#include <doctest.h>

#include <random>

#include "krchar/charring.hpp"

using namespace krc;

TEST_SUITE("charring") {

TEST_CASE("weyl_dim basics") {
  RootSystem b3 = build_root_system(LieType::parse("B3"));
  CHECK(weyl_dim(Weight::zero(3), b3) == 1);
  CHECK(weyl_dim(Weight::fundamental(1, 3), b3) == 7);
  CHECK(weyl_dim(Weight::fundamental(3, 3), b3) == 8);

  RootSystem c3 = build_root_system(LieType::parse("C3"));
  CHECK(weyl_dim(Weight::fundamental(1, 3), c3) == 6);

  RootSystem b4 = build_root_system(LieType::parse("B4"));
  Weight adj = b4.root_to_weight(b4.theta);
  CHECK(weyl_dim(adj, b4) == 36);  // |R| + rank
}

TEST_CASE("simple_character: trivial and vector modules") {
  RootSystem b3 = build_root_system(LieType::parse("B3"));
  const FormalCharacter& triv = simple_character(Weight::zero(3), b3);
  CHECK(triv.dominant_mult().size() == 1);
  CHECK(triv.dim(b3) == 1);

  const FormalCharacter& v = simple_character(Weight::fundamental(1, 3), b3);
  CHECK(v.support_size(b3) == 7);
  CHECK(v.dim(b3) == 7);
  v.for_each_weight(b3, [&](const Weight&, long long m) { CHECK(m == 1); });

  const FormalCharacter& spin = simple_character(Weight::fundamental(3, 3), b3);
  CHECK(spin.dim(b3) == 8);
}

TEST_CASE("simple_character totals equal weyl_dim with Weyl-invariant support") {
  for (const char* s : {"B3", "C3", "D4"}) {
    RootSystem rs = build_root_system(LieType::parse(s));
    Weight lam({1, 0, 2, 1});
    lam.c.resize(rs.rank);
    const FormalCharacter& ch = simple_character(lam, rs);
    CHECK(ch.dim(rs) == weyl_dim(lam, rs));
    CHECK(ch.mult_at(lam, rs) == 1);
    // Weyl invariance: the expansion is constant along each orbit
    auto full = ch.full_expansion(rs);
    long long total = 0;
    for (const auto& [w, m] : full) {
      CHECK(m == ch.mult_at(w, rs));
      total += m;
    }
    CHECK(total == ch.dim(rs));
  }
}

TEST_CASE("freudenthal totals vs weyl_dim for 200 random weights") {
  std::mt19937 rng(20260811);
  std::vector<LieType> types;
  for (int n = 2; n <= 5; ++n) {
    types.push_back(LieType::make(Family::B, n));
    types.push_back(LieType::make(Family::C, n));
    if (n >= 4) types.push_back(LieType::make(Family::D, n));
  }
  std::map<std::string, RootSystem> systems;
  for (const LieType& t : types) systems.emplace(t.str(), build_root_system(t));
  for (int trial = 0; trial < 200; ++trial) {
    const LieType& t = types[rng() % types.size()];
    const RootSystem& rs = systems.at(t.str());
    Weight lam = Weight::zero(t.rank);
    for (int i = 0; i < t.rank; ++i) lam.c[i] = (int)(rng() % 4);
    CHECK(simple_character(lam, rs).dim(rs) == weyl_dim(lam, rs));
  }
}

TEST_CASE("tensor_multiplicity") {
  RootSystem b3 = build_root_system(LieType::parse("B3"));
  Weight w1 = Weight::fundamental(1, 3);

  // tensoring with the trivial module in both positions
  DominantCharacter triv = DominantCharacter::one(3);
  CHECK(tensor_multiplicity(triv, w1, b3) == DominantCharacter::simple(w1));
  DominantCharacter m;
  m.add(w1, 2);
  m.add(Weight::fundamental(2, 3), 1);
  CHECK(tensor_multiplicity(m, Weight::zero(3), b3) == m);

  // V(w1) (x) V(w1) = V(2w1) + V(w2) + V(0)
  DominantCharacter sq = tensor_multiplicity(DominantCharacter::simple(w1), w1, b3);
  DominantCharacter expect;
  expect.add(Weight({2, 0, 0}), 1);
  expect.add(Weight({0, 1, 0}), 1);
  expect.add(Weight::zero(3), 1);
  CHECK(sq == expect);
  CHECK(sq.dim(b3) == 49);
}

TEST_CASE("tensor agrees with highest-weight-subtraction oracle") {
  // independent oracle: multiply the two weight expansions literally, then
  // repeatedly strip the dominance-maximal dominant term
  for (const char* s : {"B2", "C3"}) {
    RootSystem rs = build_root_system(LieType::parse(s));
    std::vector<Weight> probes = {Weight::fundamental(1, rs.rank),
                                  Weight::fundamental(2, rs.rank),
                                  Weight::fundamental(rs.rank, rs.rank)};
    for (const Weight& a : probes)
      for (const Weight& b : probes) {
        if (weyl_dim(a, rs) * weyl_dim(b, rs) > 10000) continue;
        auto ea = simple_character(a, rs).full_expansion(rs);
        auto eb = simple_character(b, rs).full_expansion(rs);
        std::unordered_map<Weight, long long, WeightHash> prod;
        for (const auto& [va, ma] : ea)
          for (const auto& [vb, mb] : eb) prod[va + vb] += ma * mb;
        DominantCharacter oracle;
        for (;;) {
          // find the maximal dominant weight with nonzero coefficient
          const Weight* top = nullptr;
          for (const auto& [v, mv] : prod) {
            if (mv == 0 || !v.is_dominant()) continue;
            if (!top || rs.dominance_leq(*top, v)) top = &v;
          }
          if (!top) break;
          Weight t = *top;
          long long mult = prod[t];
          REQUIRE(mult > 0);
          oracle.add(t, mult);
          simple_character(t, rs).for_each_weight(
              rs, [&](const Weight& v, long long m) { prod[v] -= mult * m; });
        }
        for (const auto& [v, mv] : prod) CHECK(mv == 0);
        CHECK(oracle == tensor_multiplicity(DominantCharacter::simple(a), b, rs));
      }
  }
}

TEST_CASE("tensor dimension additivity") {
  RootSystem c3 = build_root_system(LieType::parse("C3"));
  DominantCharacter m;
  m.add(Weight({1, 0, 0}), 1);
  m.add(Weight({0, 1, 0}), 2);
  Weight lam({1, 1, 0});
  DominantCharacter prod = tensor_multiplicity(m, lam, c3);
  CHECK(prod.dim(c3) == m.dim(c3) * weyl_dim(lam, c3));
}

TEST_CASE("exterior and symmetric powers") {
  RootSystem b3 = build_root_system(LieType::parse("B3"));
  DominantCharacter v = DominantCharacter::simple(Weight::fundamental(1, 3));

  CHECK(exterior_power(v, 0, b3) == DominantCharacter::one(3));
  CHECK(exterior_power(v, 1, b3) == v);
  CHECK(symmetric_power(v, 1, b3) == v);

  DominantCharacter wedge2 = exterior_power(v, 2, b3);
  CHECK(wedge2 == DominantCharacter::simple(Weight({0, 1, 0})));
  CHECK(wedge2.dim(b3) == 21);

  DominantCharacter sym2 = symmetric_power(v, 2, b3);
  DominantCharacter expect;
  expect.add(Weight({2, 0, 0}), 1);
  expect.add(Weight::zero(3), 1);
  CHECK(sym2 == expect);
  CHECK(sym2.dim(b3) == 28);

  DominantCharacter neg;
  neg.add(Weight::fundamental(1, 3), -1);
  CHECK_THROWS_AS(exterior_power(neg, 2, b3), std::invalid_argument);
}

TEST_CASE("powers match the brute-force multiset oracle") {
  // enumerate subsets/multisets of the explicit weight list and compare the
  // resulting weight functions
  for (const char* s : {"B2", "C2", "B3"}) {
    RootSystem rs = build_root_system(LieType::parse(s));
    DominantCharacter m = DominantCharacter::simple(Weight::fundamental(1, rs.rank));
    if (s == std::string("B3")) m.add(Weight::zero(rs.rank), 2);  // dim 9
    std::vector<Weight> weights;
    for (const auto& [kappa, mult] : m.terms())
      simple_character(kappa, rs).for_each_weight(
          rs, [&](const Weight& v, long long mm) {
            for (long long k = 0; k < mult * mm; ++k) weights.push_back(v);
          });
    const int dim = (int)weights.size();
    REQUIRE(dim <= 12);
    for (int p = 0; p <= 4; ++p) {
      // exterior: p-subsets
      std::unordered_map<Weight, long long, WeightHash> wedge, sym;
      std::vector<int> idx(p);
      std::function<void(int, int, Weight)> subsets = [&](int start, int k,
                                                          Weight acc) {
        if (k == 0) {
          wedge[acc] += 1;
          return;
        }
        for (int i = start; i + k <= dim + 0; ++i)
          if (dim - i >= k) subsets(i + 1, k - 1, acc + weights[i]);
      };
      subsets(0, p, Weight::zero(rs.rank));
      std::function<void(int, int, Weight)> multis = [&](int start, int k,
                                                         Weight acc) {
        if (k == 0) {
          sym[acc] += 1;
          return;
        }
        for (int i = start; i < dim; ++i) multis(i, k - 1, acc + weights[i]);
      };
      multis(0, p, Weight::zero(rs.rank));
      DominantCharacter we = decompose_weight_function(wedge, rs);
      DominantCharacter se = decompose_weight_function(sym, rs);
      CHECK(we == exterior_power(m, p, rs));
      CHECK(se == symmetric_power(m, p, rs));
    }
    // binomial dimension identities
    long long sum_wedge = 0;
    for (int p = 0; p <= dim; ++p) sum_wedge += exterior_power(m, p, rs).dim(rs);
    CHECK(sum_wedge == (1LL << dim));
    long long s3 = symmetric_power(m, 3, rs).dim(rs);
    long long expect = (long long)dim * (dim + 1) * (dim + 2) / 6;
    CHECK(s3 == expect);
  }
}

TEST_CASE("error paths") {
  RootSystem b3 = build_root_system(LieType::parse("B3"));
  CHECK_THROWS_AS(simple_character(Weight({1, -1, 0}), b3), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(Weight({-1, 0, 0}), b3), std::invalid_argument);
  CHECK_THROWS_AS(simple_character(Weight({1, 0}), b3), std::invalid_argument);
  CHECK_THROWS_AS(
      tensor_multiplicity(DominantCharacter::one(3), Weight({0, -1, 0}), b3),
      std::invalid_argument);
  CHECK_THROWS_AS(bilinear(Weight({1, 0}), Weight({1, 0, 0}), b3),
                  std::invalid_argument);
}

TEST_CASE("graded characters and specialization") {
  GradedCharacter g;
  g.add(0, Weight({0, 1, 0}), 1);
  g.add(1, Weight::zero(3), 1);
  DominantCharacter total = graded_specialize(g);
  CHECK(total.at(Weight({0, 1, 0})) == 1);
  CHECK(total.at(Weight::zero(3)) == 1);

  GradedCharacter single;
  single.add(2, Weight({1, 0, 0}), 3);
  CHECK(graded_specialize(single) == single.layers.at(2));

  GradedCharacter diff = g;
  diff -= g;
  CHECK(diff.is_zero());
}

}  // TEST_SUITE
