#include "blockatlas/loopmod.hpp"

#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"

using namespace blockatlas;

namespace {

struct Ctx {
  RootSystem rs;
  GAlgebraPtr g;
  explicit Ctx(const std::string& type) : rs(RootSystem::build(LieType::parse(type))) {
    g = build_galgebra(rs);
  }
  Irrep irrep(const Weight& w) const { return build_irrep(rs, w); }
};

QMat diag2(long a, long b) {
  QMat M(2, 2);
  M.at(0, 0) = rat(a);
  M.at(1, 1) = rat(b);
  return M;
}

LaurentPoly shifted_square(const Rat& a, Int k) {
  // (t - a)^2 t^k
  return {{k + 2, rat(1)}, {k + 1, rat(-2) * a}, {k, a * a}};
}

}  // namespace

TEST_CASE("evaluation modules scale powers by the point") {
  Ctx c("A1");
  Irrep v = c.irrep({1});

  LoopModule m2 = evaluation_module(c.g, v, rat(2));
  CHECK(m2.dim == 2);
  CHECK(m2.act_gen(gen_cartan(1, 0), 1) == diag2(2, -2));
  CHECK(m2.act_gen(gen_cartan(1, 0), -1) == diag2(1, -1).scaled(rat(1, 2)));

  LoopModule m1 = evaluation_module(c.g, v, rat(1));
  LoopModule mneg = evaluation_module(c.g, v, rat(-1));
  for (int s = 0; s < 3; ++s) {
    for (Int r = -2; r <= 2; ++r) CHECK(m1.act_gen(s, r) == m1.act_gen(s, 0));
    CHECK(mneg.act_gen(s, 2) == mneg.act_gen(s, 0));
  }

  CHECK(loop_axiom_sampled(m2));
  CHECK(loop_axiom_components(m2));
  CHECK_THROWS_WITH_AS(evaluation_module(c.g, v, rat(0)), "evaluation point must be nonzero",
                       std::domain_error);
}

TEST_CASE("extension module on the adjoint pair") {
  Ctx c("A1");
  Irrep v2 = c.irrep({2});
  QMat p = equivariant_projection(*c.g, v2, v2);

  ExtensionModule m = extension_module(c.g, v2, v2, rat(1), p);
  CHECK(m.module.dim == 6);
  CHECK(loop_axiom_sampled(m.module));
  CHECK(loop_axiom_components(m.module));
  CHECK(is_nonsplit(m));
  CHECK(spectral_character_of(m.module).empty());

  // scaling p is a change of basis on the V(mu) summand
  ExtensionModule m5 = extension_module(c.g, v2, v2, rat(1), p.scaled(rat(5)));
  QMat S(6, 6);
  for (int i = 0; i < 3; ++i) {
    S.at(i, i) = rat(1);
    S.at(3 + i, 3 + i) = rat(5);
  }
  for (int k = 0; k < c.g->dim(); ++k)
    for (Int r = -2; r <= 2; ++r) CHECK(m5.module.act(k, r) * S == S * m.module.act(k, r));

  // the same formula with p = 0 gives the split sum
  ExtensionModule split = extension_module(c.g, v2, v2, rat(1), QMat(3, 9));
  CHECK_FALSE(is_nonsplit(split));
  CHECK(split.module.terms.size() == 1);

  QMat bad(3, 9);
  bad.at(0, 0) = rat(1);
  CHECK_THROWS_WITH_AS(extension_module(c.g, v2, v2, rat(1), bad),
                       "projection is not equivariant", std::domain_error);
}

TEST_CASE("extension module with distinct weights") {
  Ctx c("A1");
  Irrep v3 = c.irrep({3});
  Irrep v1 = c.irrep({1});
  QMat p = equivariant_projection(*c.g, v3, v1);
  Rat a = rat(2);
  ExtensionModule m = extension_module(c.g, v3, v1, a, p);
  CHECK(m.module.dim == 6);
  CHECK(loop_axiom_sampled(m.module));
  CHECK(is_nonsplit(m));

  // V(mu) spans a submodule carrying the evaluation action; the quotient
  // by it is the evaluation module on V(lambda)
  LoopModule evl = evaluation_module(c.g, v3, a);
  LoopModule evm = evaluation_module(c.g, v1, a);
  for (int k = 0; k < c.g->dim(); ++k)
    for (Int r = -2; r <= 2; ++r) {
      QMat M = m.module.act(k, r);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) CHECK(M.at(i, 4 + j) == 0);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(M.at(4 + i, 4 + j) == evm.act(k, r).at(i, j));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(M.at(i, j) == evl.act(k, r).at(i, j));
    }

  // frozen: both constituents sit in the odd class at the point
  SpectralCharacter chi = spectral_character_of(m.module);
  CHECK(chi.size() == 1);
  CHECK(chi.at(SpectralPoint(a)) == GammaClass{1});

  auto rep = irreducibility(m.module, 7);
  CHECK_FALSE(rep.irreducible);
  REQUIRE(rep.witness);
  CHECK(rep.witness->m == 2);
}

TEST_CASE("jet annihilator") {
  Ctx c("A1");
  Irrep v2 = c.irrep({2});
  QMat p = equivariant_projection(*c.g, v2, v2);
  Rat a = rat(3, 2);
  ExtensionModule m = extension_module(c.g, v2, v2, a, p);

  for (Int k = -2; k <= 2; ++k) {
    auto f = shifted_square(a, k);
    CHECK(jet_annihilator_check(m.module, f));
    for (const QMat& M : polynomial_action(m.module, f)) CHECK(M.is_zero());
  }

  // constant jet acts as the plain algebra action
  LaurentPoly one{{0, rat(1)}};
  CHECK(jet_annihilator_check(m.module, one));
  LoopModule ev = evaluation_module(c.g, v2, a);
  auto acts = algebra_actions(*c.g, v2);
  auto by_one = polynomial_action(ev, one);
  auto by_t = polynomial_action(ev, LaurentPoly{{1, rat(1)}});
  for (int k = 0; k < c.g->dim(); ++k) {
    CHECK(by_one[k] == acts[k]);
    CHECK(by_t[k] == acts[k].scaled(a));
  }
  CHECK(jet_annihilator_check(ev, LaurentPoly{{1, rat(1)}}));
}

TEST_CASE("tensor dichotomy at two points") {
  Ctx c("A1");
  Irrep v = c.irrep({1});
  LoopModule x = evaluation_module(c.g, v, rat(2));
  LoopModule y = evaluation_module(c.g, v, rat(3));

  LoopModule distinct = tensor_product(x, y);
  CHECK(distinct.dim == 4);
  CHECK(distinct.terms.size() == 2);
  CHECK(loop_axiom_sampled(distinct));
  auto rep = irreducibility(distinct, 11);
  CHECK(rep.irreducible);
  CHECK(rep.certified);
  CHECK(rep.verdict() == "irreducible");

  SpectralCharacter chi = spectral_character_of(distinct);
  SpectralCharacter want;
  want[SpectralPoint(rat(2))] = {1};
  want[SpectralPoint(rat(3))] = {1};
  CHECK(chi == want);

  LoopModule same = tensor_product(x, x);
  CHECK(same.terms.size() == 1);  // components merge at a shared point
  auto rep2 = irreducibility(same, 11);
  CHECK_FALSE(rep2.irreducible);
  CHECK(rep2.certified);
  REQUIRE(rep2.witness);
  CHECK(rep2.witness->m == 1);  // the antisymmetric singlet surfaces first
  CHECK(rep2.verdict() == "definitely reducible (witness submodule)");
  CHECK(spectral_character_of(same).empty());

  CHECK(is_irreducible(distinct, 1) == is_irreducible(distinct, 1));
}

TEST_CASE("direct sums and mixed characters") {
  Ctx c("A1");
  Irrep v1 = c.irrep({1});
  Irrep v2 = c.irrep({2});

  LoopModule twice = direct_sum(evaluation_module(c.g, v1, rat(2)),
                                evaluation_module(c.g, v1, rat(2)));
  CHECK(twice.dim == 4);
  auto rep = irreducibility(twice, 5);
  CHECK_FALSE(rep.irreducible);
  REQUIRE(rep.witness);
  CHECK(rep.witness->m == 2);
  CHECK(spectral_character_of(twice) ==
        SpectralCharacter{{SpectralPoint(rat(2)), GammaClass{1}}});

  LoopModule mixed = direct_sum(evaluation_module(c.g, v1, rat(2)),
                                evaluation_module(c.g, v2, rat(2)));
  try {
    spectral_character_of(mixed);
    FAIL("expected a mixed-character error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("different blocks") != std::string::npos);
  }
}

TEST_CASE("characters of evaluation modules") {
  Ctx c("A1");
  LoopModule m = evaluation_module(c.g, c.irrep({1}), rat(5, 7));
  CHECK(spectral_character_of(m) ==
        SpectralCharacter{{SpectralPoint(rat(5, 7)), GammaClass{1}}});
  CHECK(irreducibility(m, 0).irreducible);

  LoopModule trivial = evaluation_module(c.g, c.irrep({0}), rat(4));
  CHECK(trivial.dim == 1);
  CHECK(irreducibility(trivial, 0).irreducible);
  CHECK(spectral_character_of(trivial).empty());
}

TEST_CASE("characters over a rank-two algebra") {
  Ctx c("A2");
  LoopModule m = evaluation_module(c.g, c.irrep({1, 0}), rat(3));
  CHECK(spectral_character_of(m) ==
        SpectralCharacter{{SpectralPoint(rat(3)), GammaClass{1}}});
  CHECK(loop_axiom_sampled(m, -1, 1));
  CHECK(loop_axiom_components(m));

  // adjoint evaluation lands in the trivial class
  LoopModule ad = evaluation_module(c.g, c.irrep({1, 1}), rat(3));
  CHECK(spectral_character_of(ad).empty());
  CHECK(irreducibility(ad, 3).irreducible);
}

TEST_CASE("json export") {
  Ctx c("A1");
  LoopModule m = evaluation_module(c.g, c.irrep({1}), rat(1, 2));
  auto j = nlohmann::json::parse(module_json(m));
  CHECK(j["dim"] == 2);
  CHECK(j["generators"].size() == 9);
  CHECK(j["generators"][0]["name"] == "x0+");
  bool found = false;
  for (const auto& gen : j["generators"])
    if (gen["name"] == "h0" && gen["power"] == 1) {
      CHECK(gen["matrix"][0][0] == nlohmann::json::array({1, 2}));
      CHECK(gen["matrix"][1][1] == nlohmann::json::array({-1, 2}));
      found = true;
    }
  CHECK(found);
  CHECK(module_json(m) == module_json(m));
}
