#include <random>

#include "blockatlas/drinfeld.hpp"
#include "blockatlas/gamma.hpp"
#include "doctest.h"

using namespace blockatlas;

namespace {

SpectralPoint sp(Int num, Int den = 1) { return SpectralPoint(rat(num, den)); }

}  // namespace

TEST_CASE("tuples merge repeated points and drop zero weights") {
  auto rs = RootSystem::build(LieType::parse("A2"));

  auto p = poly_tuple(rs, {{sp(2), {1, 0}}, {sp(2), {0, 1}}, {sp(3), {1, 1}}});
  REQUIRE(p.factors.size() == 2);
  CHECK(p.factors.at(sp(2)) == Weight{1, 1});
  CHECK(p.factors.at(sp(3)) == Weight{1, 1});

  auto q = poly_tuple(rs, {{sp(5), {0, 0}}});
  CHECK(q.factors.empty());

  CHECK(poly_tuple(rs, {}) == q);
}

TEST_CASE("tuple validation") {
  auto rs = RootSystem::build(LieType::parse("A2"));
  CHECK_THROWS_AS(poly_tuple(rs, {{sp(0), {1, 0}}}), std::domain_error);
  CHECK_THROWS_AS(poly_tuple(rs, {{SpectralPoint(std::string()), {1, 0}}}), std::domain_error);
  CHECK_THROWS_AS(poly_tuple(rs, {{sp(1), {1, 0, 0}}}), std::domain_error);
  CHECK_THROWS_AS(poly_tuple(rs, {{sp(1), {-1, 0}}}), std::domain_error);
}

TEST_CASE("spectral points order rationals before labels") {
  SpectralPointLess less;
  CHECK(less(sp(1, 2), sp(3)));
  CHECK(less(sp(-2), sp(1, 2)));
  CHECK(less(sp(7), SpectralPoint(std::string("a"))));
  CHECK(less(SpectralPoint(std::string("a")), SpectralPoint(std::string("b"))));
  CHECK_FALSE(less(sp(3), sp(3)));
  CHECK(spectral_point_str(sp(-1, 2)) == "-1/2");
  CHECK(spectral_point_str(SpectralPoint(std::string("z"))) == "z");
}

TEST_CASE("product adds weights over the union of supports") {
  auto rs = RootSystem::build(LieType::parse("A2"));
  auto a = poly_tuple(rs, {{sp(1), {1, 0}}, {sp(2), {0, 1}}});
  auto b = poly_tuple(rs, {{sp(2), {2, 0}}, {SpectralPoint(std::string("z")), {0, 1}}});
  auto ab = multiply(rs, a, b);
  REQUIRE(ab.factors.size() == 3);
  CHECK(ab.factors.at(sp(1)) == Weight{1, 0});
  CHECK(ab.factors.at(sp(2)) == Weight{2, 1});
  CHECK(ab.factors.at(SpectralPoint(std::string("z"))) == Weight{0, 1});
  CHECK(multiply(rs, a, b) == multiply(rs, b, a));

  auto rs3 = RootSystem::build(LieType::parse("A3"));
  auto c = poly_tuple(rs3, {{sp(1), {1, 0, 0}}});
  CHECK_THROWS_AS(multiply(rs, a, c), std::domain_error);
}

TEST_CASE("dual tuple flips weights and is an involution") {
  auto rs = RootSystem::build(LieType::parse("A3"));
  auto p = poly_tuple(rs, {{sp(2), {1, 0, 0}}, {sp(3), {0, 2, 1}}});
  auto d = dual(rs, p);
  CHECK(d.factors.at(sp(2)) == Weight{0, 0, 1});
  CHECK(d.factors.at(sp(3)) == Weight{1, 2, 0});
  CHECK(dual(rs, d) == p);

  // self-dual type: dual changes nothing
  auto rsb = RootSystem::build(LieType::parse("B3"));
  auto q = poly_tuple(rsb, {{sp(5), {1, 2, 1}}});
  CHECK(dual(rsb, q) == q);
}

TEST_CASE("top weight is the sum over the support") {
  auto rs = RootSystem::build(LieType::parse("B2"));
  auto p = poly_tuple(rs, {{sp(1), {1, 0}}, {sp(2), {0, 3}}, {sp(1, 2), {1, 1}}});
  CHECK(lambda_pi(rs, p) == Weight{2, 4});
  CHECK(lambda_pi(rs, poly_tuple(rs, {})) == rs.zero());
}

TEST_CASE("characters keep only points with nonzero class") {
  auto rs = RootSystem::build(LieType::parse("A2"));
  auto G = gamma_group(rs);

  // theta lies in the root lattice, so its class vanishes
  auto p = poly_tuple(rs, {{sp(1), {1, 0}}, {sp(2), {1, 1}}, {sp(3), {0, 2}}});
  auto chi = spectral_character(rs, G, p);
  REQUIRE(chi.size() == 2);
  CHECK(chi.at(sp(1)) == GammaClass{1});
  CHECK(chi.at(sp(3)) == GammaClass{1});
  CHECK(chi.count(sp(2)) == 0);
}

TEST_CASE("blocks compare by character, not by tuple") {
  auto rs = RootSystem::build(LieType::parse("A2"));
  auto G = gamma_group(rs);

  auto base = poly_tuple(rs, {{sp(1), {1, 0}}});
  auto padded = multiply(rs, base, poly_tuple(rs, {{sp(5), {1, 1}}}));
  CHECK(same_block(rs, G, base, padded));

  // moving the support moves the block
  CHECK_FALSE(same_block(rs, G, base, poly_tuple(rs, {{sp(2), {1, 0}}})));
  // changing the class at a point moves the block
  CHECK_FALSE(same_block(rs, G, base, poly_tuple(rs, {{sp(1), {0, 1}}})));
  // two classes that sum the same way still differ pointwise
  auto split = poly_tuple(rs, {{sp(1), {0, 1}}, {sp(2), {0, 1}}});
  auto joined = poly_tuple(rs, {{sp(1), {0, 2}}});
  CHECK_FALSE(same_block(rs, G, split, joined));
  CHECK(same_block(rs, G, joined, poly_tuple(rs, {{sp(1), {1, 0}}})));

  auto rs3 = RootSystem::build(LieType::parse("A3"));
  CHECK_THROWS_AS(same_block(rs, G, base, poly_tuple(rs3, {{sp(1), {1, 0, 0}}})),
                  std::domain_error);
}

TEST_CASE("block labels pair points with class representatives") {
  auto rs = RootSystem::build(LieType::parse("A1"));
  auto G = gamma_group(rs);
  auto p = poly_tuple(rs, {{sp(2), {3}}});
  auto label = block_label(rs, G, p);
  REQUIRE(label.size() == 1);
  CHECK(label[0].first == sp(2));
  CHECK(label[0].second == Weight{1});

  CHECK(block_label(rs, G, poly_tuple(rs, {})).empty());

  auto rs2 = RootSystem::build(LieType::parse("A2"));
  auto G2 = gamma_group(rs2);
  // theta lies in the root lattice: empty label
  CHECK(block_label(rs2, G2, poly_tuple(rs2, {{sp(5), {1, 1}}})).empty());
  auto q = poly_tuple(rs2, {{sp(3), {0, 1}}, {sp(1, 2), {1, 0}}});
  auto ql = block_label(rs2, G2, q);
  REQUIRE(ql.size() == 2);
  CHECK(ql[0] == std::pair<SpectralPoint, Weight>(sp(1, 2), {1, 0}));
  CHECK(ql[1] == std::pair<SpectralPoint, Weight>(sp(3), {2, 0}));

  auto rsd = RootSystem::build(LieType::parse("D4"));
  auto Gd = gamma_group(rsd);
  auto d = block_label(rsd, Gd, poly_tuple(rsd, {{sp(1), {1, 0, 0, 0}}}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].second == Weight{0, 0, 1, 1});
}

TEST_CASE("character of a product is the pointwise sum") {
  auto rs = RootSystem::build(LieType::parse("A3"));
  auto G = gamma_group(rs);

  std::mt19937 rng(20240811);
  std::vector<SpectralPoint> pool = {sp(1), sp(2), sp(1, 2), sp(-1), SpectralPoint(std::string("z"))};
  auto random_tuple = [&]() {
    std::vector<std::pair<SpectralPoint, Weight>> parts;
    int k = 1 + int(rng() % 3);
    for (int j = 0; j < k; ++j) {
      Weight w(rs.rank);
      for (int i = 0; i < rs.rank; ++i) w[i] = Int(rng() % 3);
      parts.emplace_back(pool[rng() % pool.size()], w);
    }
    return poly_tuple(rs, parts);
  };

  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_tuple(), b = random_tuple();
    auto chi = spectral_character(rs, G, multiply(rs, a, b));
    auto ca = spectral_character(rs, G, a), cb = spectral_character(rs, G, b);
    SpectralCharacter expect;
    for (const auto& [pt, cls] : ca) expect[pt] = cls;
    for (const auto& [pt, cls] : cb) {
      auto it = expect.find(pt);
      if (it == expect.end())
        expect[pt] = cls;
      else {
        it->second = G.add(it->second, cls);
        if (G.is_zero(it->second)) expect.erase(it);
      }
    }
    CHECK(chi == expect);

    // the dual negates the character pointwise
    auto cd = spectral_character(rs, G, dual(rs, a));
    REQUIRE(cd.size() == ca.size());
    for (const auto& [pt, cls] : ca) {
      REQUIRE(cd.count(pt) == 1);
      CHECK(cd.at(pt) == G.neg(cls));
    }

    // blocks are stable under a common factor
    auto c = random_tuple();
    CHECK(same_block(rs, G, a, b) ==
          same_block(rs, G, multiply(rs, a, c), multiply(rs, b, c)));
  }
}

TEST_CASE("factoring coefficient lists") {
  auto rs = RootSystem::build(LieType::parse("A2"));

  SUBCASE("linear factors come out with their points") {
    // node 1: (1-u)(1-2u), node 2: (1+u)
    auto p = from_coefficients(rs, {{rat(1), rat(-3), rat(2)}, {rat(1), rat(1)}});
    REQUIRE(p.factors.size() == 3);
    CHECK(p.factors.at(sp(-1)) == Weight{0, 1});
    CHECK(p.factors.at(sp(1)) == Weight{1, 0});
    CHECK(p.factors.at(sp(2)) == Weight{1, 0});
  }

  SUBCASE("repeated roots give multiplicity") {
    auto rs1 = RootSystem::build(LieType::parse("A1"));
    // (1-u)^2 = 1 - 2u + u^2
    auto p = from_coefficients(rs1, {{rat(1), rat(-2), rat(1)}});
    REQUIRE(p.factors.size() == 1);
    CHECK(p.factors.at(sp(1)) == Weight{2});
  }

  SUBCASE("same point on two nodes merges into one weight") {
    auto p = from_coefficients(rs, {{rat(1), rat(-1)}, {rat(1), rat(-1)}});
    REQUIRE(p.factors.size() == 1);
    CHECK(p.factors.at(sp(1)) == Weight{1, 1});
  }

  SUBCASE("rational points survive") {
    auto rs1 = RootSystem::build(LieType::parse("A1"));
    auto p = from_coefficients(rs1, {{rat(1), rat(-1, 2)}});
    REQUIRE(p.factors.size() == 1);
    CHECK(p.factors.at(sp(1, 2)) == Weight{1});
  }

  SUBCASE("trailing zero coefficients are harmless") {
    auto p = from_coefficients(rs, {{rat(1), rat(-1), rat(0)}, {rat(1), rat(0), rat(0)}});
    REQUIRE(p.factors.size() == 1);
    CHECK(p.factors.at(sp(1)) == Weight{1, 0});
  }

  SUBCASE("constant term must be one") {
    CHECK_THROWS_AS(from_coefficients(rs, {{rat(2), rat(-1)}, {rat(1)}}), std::domain_error);
    CHECK_THROWS_AS(from_coefficients(rs, {{}, {rat(1)}}), std::domain_error);
  }

  SUBCASE("irreducible quadratics are rejected") {
    CHECK_THROWS_AS(from_coefficients(rs, {{rat(1), rat(1), rat(1)}, {rat(1)}}),
                    std::domain_error);
  }

  SUBCASE("node count must match the rank") {
    CHECK_THROWS_AS(from_coefficients(rs, {{rat(1)}}), std::domain_error);
  }
}

TEST_CASE("expansion round-trips factoring") {
  auto rs = RootSystem::build(LieType::parse("C3"));
  std::vector<std::vector<Rat>> coeffs = {
      {rat(1), rat(-5), rat(6)},          // (1-2u)(1-3u)
      {rat(1)},                            //
      {rat(1), rat(1, 2)},                 // (1+u/2)
  };
  auto p = from_coefficients(rs, coeffs);
  CHECK(to_coefficients(rs, p) == coeffs);

  auto again = from_coefficients(rs, to_coefficients(rs, p));
  CHECK(again == p);
}

TEST_CASE("expansion needs a rational support") {
  auto rs = RootSystem::build(LieType::parse("A1"));
  auto p = poly_tuple(rs, {{SpectralPoint(std::string("z")), {1}}});
  CHECK_THROWS_AS(to_coefficients(rs, p), std::domain_error);
}
