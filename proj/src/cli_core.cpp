#include "blockatlas/cli.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockatlas/drinfeld.hpp"
#include "blockatlas/galgebra.hpp"
#include "blockatlas/gamma.hpp"
#include "blockatlas/irrep.hpp"
#include "blockatlas/linking.hpp"
#include "blockatlas/loopmod.hpp"
#include "blockatlas/oracle.hpp"
#include "blockatlas/rootsys.hpp"

namespace blockatlas {
namespace {

using nlohmann::json;

json big_json(const BigInt& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

json int_rat_json(const mpz_class& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

/// Exact rational input: an integer, or a [num, den] pair. Floats are
/// rejected, nothing here tolerates rounding.
Rat parse_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    Rat den(j[1].get<long>());
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
    return Rat(j[0].get<long>()) / den;
  }
  throw std::invalid_argument("expected an integer or a [num,den] pair");
}

json rat_json(const Rat& q) {
  return json::array({int_rat_json(q.get_num()), int_rat_json(q.get_den())});
}

SpectralPoint parse_point(const json& j) {
  if (j.is_object() && j.contains("rat")) return SpectralPoint(parse_rat(j.at("rat")));
  if (j.is_object() && j.contains("sym")) return SpectralPoint(j.at("sym").get<std::string>());
  throw std::invalid_argument(R"(spectral point must be {"rat":[num,den]} or {"sym":"label"})");
}

json point_json(const SpectralPoint& p) {
  if (const Rat* q = std::get_if<Rat>(&p)) return json{{"rat", rat_json(*q)}};
  return json{{"sym", std::get<std::string>(p)}};
}

Weight parse_weight(const RootSystem& rs, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON integer array");
  if (int(j.size()) != rs.rank) throw std::domain_error("weight has wrong rank");
  Weight w;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("weight entries must be integers");
    w.push_back(e.get<long>());
  }
  return w;
}

std::vector<Int> parse_class(const GammaGroup& G, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("class must be a JSON residue array");
  if (j.size() != G.invariant_factors.size())
    throw std::domain_error("class has wrong number of residues");
  std::vector<Int> cls;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("residues must be integers");
    cls.push_back(e.get<long>());
  }
  return G.reduce(cls);
}

std::vector<std::vector<Rat>> parse_coeff_lists(const json& j) {
  const json& rows = j.is_object() ? j.at("coeffs") : j;
  if (!rows.is_array()) throw std::invalid_argument("coefficients must be a list of lists");
  std::vector<std::vector<Rat>> out;
  for (const json& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("coefficients must be a list of lists");
    std::vector<Rat> c;
    for (const json& e : row) c.push_back(parse_rat(e));
    out.push_back(std::move(c));
  }
  return out;
}

PolyTuple parse_tuple(const RootSystem& rs, const json& j) {
  if (j.is_object() && j.contains("coeffs")) return from_coefficients(rs, parse_coeff_lists(j));
  if (!j.is_object() || !j.contains("factors"))
    throw std::invalid_argument(R"(polynomial tuple must carry "factors" or "coeffs")");
  if (j.contains("type") && LieType::parse(j.at("type").get<std::string>()) != rs.type)
    throw std::domain_error("tuple type does not match the command type");
  std::vector<std::pair<SpectralPoint, Weight>> parts;
  for (const json& f : j.at("factors"))
    parts.emplace_back(parse_point(f.at("point")), parse_weight(rs, f.at("weight")));
  return poly_tuple(rs, parts);
}

json tuple_json(const RootSystem& rs, const PolyTuple& p) {
  json fs = json::array();
  for (const auto& [pt, w] : p.factors)
    fs.push_back(json{{"point", point_json(pt)}, {"weight", w}});
  return json{{"type", rs.type.str()}, {"factors", fs}};
}

json character_json(const GammaGroup& G, const SpectralCharacter& chi) {
  json rows = json::array();
  for (const auto& [pt, cls] : chi) rows.push_back(json{{"point", point_json(pt)}, {"class", cls}});
  return json{{"character", rows}, {"invariant_factors", G.invariant_factors}};
}

/// Chains are emitted with the verification verdict they actually earned;
/// --certify additionally reloads the serialized chain and verifies again,
/// so the emitted bytes are known to round-trip.
json chain_json(const RootSystem& rs, const std::vector<Weight>& chain, bool certify) {
  bool ok = verify_chain(rs, chain);
  json jc = json::array();
  for (const Weight& w : chain) jc.push_back(w);
  if (certify) {
    std::vector<Weight> reload;
    for (const json& e : jc) reload.push_back(parse_weight(rs, e));
    ok = ok && verify_chain(rs, reload);
  }
  return json{{"type", rs.type.str()}, {"chain", jc}, {"certified", ok}};
}

int dim_cap() {
  const char* s = std::getenv("BLOCK_ATLAS_DIM_CAP");
  if (!s || !*s) return kDefaultDimCap;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v <= 0) throw std::invalid_argument("BLOCK_ATLAS_DIM_CAP must be a positive integer");
  return int(v);
}

/// Module expressions: {"ev":{"weight":W,"point":P}} builds V(W) at P,
/// {"ext":{"lambda":W,"mu":W,"point":P}} builds the self-extension with the
/// projection computed internally, {"tensor":[...]} and {"sum":[...]} fold
/// their children. root_ext receives the extension data when the whole
/// expression is a single "ext", so the report can include the splitting
/// verdict.
LoopModule build_expr(const RootSystem& rs, const GAlgebraPtr& g, int cap, const json& j,
                      std::optional<ExtensionModule>* root_ext) {
  if (j.is_object() && j.contains("ev")) {
    const json& e = j.at("ev");
    Irrep v = build_irrep(rs, parse_weight(rs, e.at("weight")), cap);
    SpectralPoint pt = parse_point(e.at("point"));
    const Rat* a = std::get_if<Rat>(&pt);
    if (!a) throw std::domain_error("module construction needs a rational point");
    return evaluation_module(g, v, *a);
  }
  if (j.is_object() && j.contains("ext")) {
    const json& e = j.at("ext");
    Irrep vl = build_irrep(rs, parse_weight(rs, e.at("lambda")), cap);
    Irrep vm = build_irrep(rs, parse_weight(rs, e.at("mu")), cap);
    SpectralPoint pt = parse_point(e.at("point"));
    const Rat* a = std::get_if<Rat>(&pt);
    if (!a) throw std::domain_error("module construction needs a rational point");
    QMat p = equivariant_projection(*g, vl, vm);
    ExtensionModule em = extension_module(g, vl, vm, *a, p);
    if (root_ext) *root_ext = em;
    return em.module;
  }
  auto fold = [&](const json& items, auto combine) {
    if (!items.is_array() || items.empty())
      throw std::invalid_argument("tensor and sum need a nonempty list of module expressions");
    LoopModule acc = build_expr(rs, g, cap, items[0], nullptr);
    for (std::size_t i = 1; i < items.size(); ++i)
      acc = combine(acc, build_expr(rs, g, cap, items[i], nullptr));
    return acc;
  };
  if (j.is_object() && j.contains("tensor"))
    return fold(j.at("tensor"), [](const LoopModule& x, const LoopModule& y) { return tensor_product(x, y); });
  if (j.is_object() && j.contains("sum"))
    return fold(j.at("sum"), [](const LoopModule& x, const LoopModule& y) { return direct_sum(x, y); });
  throw std::invalid_argument(
      R"(module expression must be one of {"ev":...}, {"ext":...}, {"tensor":[...]}, {"sum":[...]})");
}

json run_module_lab(const RootSystem& rs, const json& expr, std::uint64_t seed, bool do_export) {
  int cap = dim_cap();
  GAlgebraPtr g = build_galgebra(rs, cap);
  std::optional<ExtensionModule> ext;
  LoopModule m = build_expr(rs, g, cap, expr, &ext);

  json out;
  out["dim"] = m.dim;
  json terms = json::array();
  for (const LoopTerm& t : m.terms) terms.push_back(json{{"point", rat_json(t.point)}, {"jet", t.jet}});
  out["terms"] = terms;

  GammaGroup G = gamma_group(rs);
  out["invariant_factors"] = G.invariant_factors;
  try {
    SpectralCharacter chi = spectral_character_of(m);
    json rows = json::array();
    for (const auto& [pt, cls] : chi) rows.push_back(json{{"point", point_json(pt)}, {"class", cls}});
    out["character"] = rows;
  } catch (const std::domain_error& e) {
    // A module whose constituents disagree has no spectral character; that
    // is a finding, not a failure.
    out["character"] = nullptr;
    out["character_error"] = e.what();
  }

  IrreducibilityReport rep = irreducibility(m, seed);
  out["irreducible"] = rep.irreducible;
  out["certified"] = rep.certified;
  out["verdict"] = rep.verdict();
  if (rep.witness) out["witness_dim"] = rep.witness->m;
  if (ext) out["nonsplit"] = is_nonsplit(*ext);
  if (do_export) out["module"] = json::parse(module_json(m));
  return out;
}

struct SubSpec {
  const char* name;
  const char* desc;
  std::vector<std::pair<const char*, const char*>> pos;
};

const std::vector<SubSpec>& sub_specs() {
  static const std::vector<SubSpec> specs = {
      {"gamma", "invariant factors of the weight lattice modulo the root lattice", {{"type", "Lie type, e.g. A3"}}},
      {"project", "class of a weight in the lattice quotient", {{"type", "Lie type"}, {"weight", "weight as a JSON integer array"}}},
      {"lambda-gamma", "minimal dominant representative of a class", {{"type", "Lie type"}, {"class", "class as a JSON residue array"}}},
      {"factor", "factor a coefficient presentation into point-weight pairs", {{"type", "Lie type"}, {"coeffs", R"({"coeffs":[[...],...]} or a bare list of coefficient lists)"}}},
      {"char", "spectral character of a polynomial tuple", {{"type", "Lie type"}, {"tuple", "polynomial tuple JSON"}}},
      {"same-block", "whether two tuples lie in the same block", {{"type", "Lie type"}, {"left", "polynomial tuple JSON"}, {"right", "polynomial tuple JSON"}}},
      {"block-label", "canonical label of a tuple's block", {{"type", "Lie type"}, {"tuple", "polynomial tuple JSON"}}},
      {"dual", "polynomial tuple of the dual module", {{"type", "Lie type"}, {"tuple", "polynomial tuple JSON"}}},
      {"chain", "linking chain from a weight to its class representative", {{"type", "Lie type"}, {"weight", "dominant weight as a JSON integer array"}}},
      {"chain-between", "linking chain between two weights in one coset", {{"type", "Lie type"}, {"from", "dominant weight"}, {"to", "dominant weight"}}},
      {"verify-chain", "check a chain is dominant and adjoint-linked", {{"type", "Lie type"}, {"chain", R"(chain JSON, [[...],...] or {"chain":[...]})"}}},
      {"tensor-mult", "multiplicity of one irreducible inside a tensor product", {{"type", "Lie type"}, {"lambda", "dominant weight"}, {"mu", "dominant weight"}, {"nu", "dominant weight"}}},
      {"dim", "dimension of an irreducible highest-weight module", {{"type", "Lie type"}, {"weight", "dominant weight"}}},
      {"weights", "weights of an irreducible module with multiplicities", {{"type", "Lie type"}, {"weight", "dominant weight"}}},
      {"module-lab", "build a loop module and report its invariants", {{"type", "Lie type"}, {"expr", "module expression JSON"}}},
  };
  return specs;
}

json dispatch(const std::string& name, const std::vector<std::string>& a, bool certify,
              std::uint64_t seed, bool do_export) {
  RootSystem rs = RootSystem::build(LieType::parse(a[0]));
  if (name == "gamma") {
    GammaGroup G = gamma_group(rs);
    return json{{"group", G.name()}, {"invariant_factors", G.invariant_factors}};
  }
  if (name == "project") {
    GammaGroup G = gamma_group(rs);
    Weight w = parse_weight(rs, json::parse(a[1]));
    return json{{"class", G.project(w)}, {"invariant_factors", G.invariant_factors}};
  }
  if (name == "lambda-gamma") {
    GammaGroup G = gamma_group(rs);
    std::vector<Int> cls = parse_class(G, json::parse(a[1]));
    return json{{"class", cls}, {"weight", lambda_gamma(rs, G, cls)}};
  }
  if (name == "factor") return tuple_json(rs, from_coefficients(rs, parse_coeff_lists(json::parse(a[1]))));
  if (name == "char") {
    GammaGroup G = gamma_group(rs);
    return character_json(G, spectral_character(rs, G, parse_tuple(rs, json::parse(a[1]))));
  }
  if (name == "same-block") {
    GammaGroup G = gamma_group(rs);
    bool same = same_block(rs, G, parse_tuple(rs, json::parse(a[1])), parse_tuple(rs, json::parse(a[2])));
    return json{{"same_block", same}};
  }
  if (name == "block-label") {
    GammaGroup G = gamma_group(rs);
    json rows = json::array();
    for (const auto& [pt, w] : block_label(rs, G, parse_tuple(rs, json::parse(a[1]))))
      rows.push_back(json{{"point", point_json(pt)}, {"weight", w}});
    return json{{"label", rows}};
  }
  if (name == "dual") return tuple_json(rs, dual(rs, parse_tuple(rs, json::parse(a[1]))));
  if (name == "chain") {
    GammaGroup G = gamma_group(rs);
    return chain_json(rs, chain_to_representative(rs, G, parse_weight(rs, json::parse(a[1]))), certify);
  }
  if (name == "chain-between") {
    GammaGroup G = gamma_group(rs);
    Weight from = parse_weight(rs, json::parse(a[1]));
    Weight to = parse_weight(rs, json::parse(a[2]));
    return chain_json(rs, chain_between(rs, G, from, to), certify);
  }
  if (name == "verify-chain") {
    json j = json::parse(a[1]);
    const json& arr = j.is_object() ? j.at("chain") : j;
    if (!arr.is_array()) throw std::invalid_argument("chain must be a JSON list of weights");
    std::vector<Weight> chain;
    for (const json& e : arr) chain.push_back(parse_weight(rs, e));
    return json{{"valid", verify_chain(rs, chain)}};
  }
  if (name == "tensor-mult") {
    Weight l = parse_weight(rs, json::parse(a[1]));
    Weight m = parse_weight(rs, json::parse(a[2]));
    Weight n = parse_weight(rs, json::parse(a[3]));
    return json{{"multiplicity", big_json(tensor_multiplicity(rs, l, m, n))}};
  }
  if (name == "dim") return json{{"dim", big_json(weyl_dim(rs, parse_weight(rs, json::parse(a[1]))))}};
  if (name == "weights") {
    std::map<Weight, BigInt> ws = weight_system(rs, parse_weight(rs, json::parse(a[1])));
    json rows = json::array();
    BigInt total = 0;
    for (const auto& [w, mult] : ws) {
      rows.push_back(json{{"weight", w}, {"mult", big_json(mult)}});
      total += mult;
    }
    return json{{"dim", big_json(total)}, {"weights", rows}};
  }
  if (name == "module-lab") return run_module_lab(rs, json::parse(a[1]), seed, do_export);
  throw std::logic_error("unhandled subcommand");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"block decomposition tools for loop algebra module categories", "blockatlas"};
  app.require_subcommand(1);

  bool pretty = false;
  bool certify = false;
  bool do_export = false;
  std::uint64_t seed = 0;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.add_flag("--certify", certify, "re-verify emitted chains after a serialization round trip");
  app.add_option("--seed", seed, "seed for the randomized irreducibility test");
  app.add_flag("--export", do_export, "include the full module bundle in module-lab output");

  std::map<std::string, std::vector<std::string>> vals;
  for (const SubSpec& spec : sub_specs()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.desc);
    sub->fallthrough();
    std::vector<std::string>& store = vals[spec.name];
    store.resize(spec.pos.size());
    for (std::size_t i = 0; i < spec.pos.size(); ++i)
      sub->add_option(spec.pos[i].first, store[i], spec.pos[i].second)->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    json result = dispatch(name, vals[name], certify, seed, do_export);
    out << (pretty ? result.dump(2) : result.dump()) << '\n';
    return 0;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace blockatlas
