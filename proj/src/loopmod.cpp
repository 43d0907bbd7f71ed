#include "blockatlas/loopmod.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace blockatlas {

namespace {

Rat term_coeff(const LoopTerm& t, Int r) {
  if (t.jet == 0) return rat_pow(t.point, r);
  return r == 0 ? Rat(0) : Rat(r) * rat_pow(t.point, r - 1);
}

std::vector<LoopTerm> normalize_terms(std::vector<LoopTerm> in) {
  std::map<std::pair<Rat, int>, std::vector<QMat>> acc;
  for (LoopTerm& t : in) {
    auto key = std::make_pair(t.point, t.jet);
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(std::move(key), std::move(t.mats));
    } else {
      for (size_t k = 0; k < it->second.size(); ++k) it->second[k] = it->second[k] + t.mats[k];
    }
  }
  std::vector<LoopTerm> out;
  for (auto& [key, mats] : acc) {
    bool zero = true;
    for (const QMat& m : mats)
      if (!m.is_zero()) {
        zero = false;
        break;
      }
    if (!zero) out.push_back(LoopTerm{key.first, key.second, std::move(mats)});
  }
  return out;
}

// sum_k coords[k] * mats[k]
QMat contract(const std::vector<QMat>& mats, const std::vector<Rat>& coords) {
  QMat out(mats.empty() ? 0 : mats[0].n, mats.empty() ? 0 : mats[0].m);
  for (size_t k = 0; k < mats.size(); ++k)
    if (coords[k] != 0) out = out + mats[k].scaled(coords[k]);
  return out;
}

QMat embed(const QMat& m, int D, int row0, int col0) {
  QMat out(D, D);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.m; ++j)
      if (m.at(i, j) != 0) out.at(row0 + i, col0 + j) = m.at(i, j);
  return out;
}

void check_same_algebra(const LoopModule& x, const LoopModule& y) {
  if (!(x.alg->rs.type == y.alg->rs.type))
    throw std::domain_error("modules over different algebras");
}

Int rat_int(const Rat& q) {
  if (q.get_den() != 1) throw std::logic_error("expected an integer value");
  return Int(q.get_num().get_si());
}

}  // namespace

QMat LoopModule::act(int k, Int r) const {
  QMat out(dim, dim);
  for (const LoopTerm& t : terms) {
    Rat c = term_coeff(t, r);
    if (c != 0) out = out + t.mats[k].scaled(c);
  }
  return out;
}

QMat LoopModule::act_gen(int slot, Int r) const { return act_element(alg->gen_coords[slot], r); }

QMat LoopModule::act_element(const std::vector<Rat>& x, Int r) const {
  QMat out(dim, dim);
  for (const LoopTerm& t : terms) {
    Rat c = term_coeff(t, r);
    if (c != 0) out = out + contract(t.mats, x).scaled(c);
  }
  return out;
}

LoopModule evaluation_module(const GAlgebraPtr& g, const Irrep& v, const Rat& a) {
  if (a == 0) throw std::domain_error("evaluation point must be nonzero");
  LoopModule m;
  m.alg = g;
  m.dim = v.dim;
  m.terms = normalize_terms({LoopTerm{a, 0, algebra_actions(*g, v)}});
  return m;
}

ExtensionModule extension_module(const GAlgebraPtr& g, const Irrep& vlambda, const Irrep& vmu,
                                 const Rat& a, const QMat& p) {
  if (a == 0) throw std::domain_error("evaluation point must be nonzero");
  const int dg = g->dim(), dl = vlambda.dim, dm = vmu.dim, n = g->rs.rank;
  if (p.n != dm || p.m != dg * dl) throw std::domain_error("projection has the wrong shape");

  auto ga = chevalley_actions(g->adjoint);
  auto la = chevalley_actions(vlambda);
  auto ma = chevalley_actions(vmu);
  for (int s = 0; s < 3 * n; ++s) {
    QMat on_product =
        QMat::kron(ga[s], QMat::identity(dl)) + QMat::kron(QMat::identity(dg), la[s]);
    if (!(p * on_product == ma[s] * p)) throw std::domain_error("projection is not equivariant");
  }

  auto xl = algebra_actions(*g, vlambda);
  auto xm = algebra_actions(*g, vmu);
  const int D = dl + dm;
  LoopTerm value{a, 0, {}}, jet{a, 1, {}};
  for (int k = 0; k < dg; ++k) {
    QMat V = embed(xl[k], D, 0, 0) + embed(xm[k], D, dl, dl);
    QMat J(D, D);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dl; ++j) J.at(dl + i, j) = p.at(i, k * dl + j);
    value.mats.push_back(std::move(V));
    jet.mats.push_back(std::move(J));
  }

  ExtensionModule out;
  out.module.alg = g;
  out.module.dim = D;
  out.module.terms = normalize_terms({std::move(value), std::move(jet)});
  out.lambda = vlambda.highest;
  out.mu = vmu.highest;
  out.a = a;
  out.p = p;
  out.dim_lambda = dl;
  out.dim_mu = dm;
  return out;
}

ExtensionModule extension_module(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                 const Rat& a, const QMat& p, int dim_cap) {
  GAlgebraPtr g = build_galgebra(rs, dim_cap);
  Irrep vl = build_irrep(rs, lambda, dim_cap);
  Irrep vm = build_irrep(rs, mu, dim_cap);
  return extension_module(g, vl, vm, a, p);
}

LoopModule direct_sum(const LoopModule& x, const LoopModule& y) {
  check_same_algebra(x, y);
  const int D = x.dim + y.dim, dg = x.alg->dim();
  std::vector<LoopTerm> terms;
  for (const LoopTerm& t : x.terms) {
    LoopTerm lift{t.point, t.jet, {}};
    for (int k = 0; k < dg; ++k) lift.mats.push_back(embed(t.mats[k], D, 0, 0));
    terms.push_back(std::move(lift));
  }
  for (const LoopTerm& t : y.terms) {
    LoopTerm lift{t.point, t.jet, {}};
    for (int k = 0; k < dg; ++k) lift.mats.push_back(embed(t.mats[k], D, x.dim, x.dim));
    terms.push_back(std::move(lift));
  }
  LoopModule out;
  out.alg = x.alg;
  out.dim = D;
  out.terms = normalize_terms(std::move(terms));
  return out;
}

LoopModule tensor_product(const LoopModule& x, const LoopModule& y) {
  check_same_algebra(x, y);
  const int dg = x.alg->dim();
  std::vector<LoopTerm> terms;
  for (const LoopTerm& t : x.terms) {
    LoopTerm lift{t.point, t.jet, {}};
    for (int k = 0; k < dg; ++k)
      lift.mats.push_back(QMat::kron(t.mats[k], QMat::identity(y.dim)));
    terms.push_back(std::move(lift));
  }
  for (const LoopTerm& t : y.terms) {
    LoopTerm lift{t.point, t.jet, {}};
    for (int k = 0; k < dg; ++k)
      lift.mats.push_back(QMat::kron(QMat::identity(x.dim), t.mats[k]));
    terms.push_back(std::move(lift));
  }
  LoopModule out;
  out.alg = x.alg;
  out.dim = x.dim * y.dim;
  out.terms = normalize_terms(std::move(terms));
  return out;
}

bool loop_axiom_sampled(const LoopModule& m, Int lo, Int hi) {
  const GAlgebra& g = *m.alg;
  const int slots = 3 * g.rs.rank;
  const int W = int(hi - lo + 1);
  std::vector<std::vector<QMat>> acts(slots);
  for (int s = 0; s < slots; ++s)
    for (Int r = lo; r <= hi; ++r) acts[s].push_back(m.act_gen(s, r));

  for (int s1 = 0; s1 < slots; ++s1)
    for (int s2 = 0; s2 < slots; ++s2) {
      auto bc = bracket_coords(g, g.gen_coords[s1], g.gen_coords[s2]);
      std::vector<std::optional<QMat>> target(2 * W - 1);
      for (Int r = lo; r <= hi; ++r)
        for (Int s = lo; s <= hi; ++s) {
          auto& t = target[size_t(r + s - 2 * lo)];
          if (!t) t = m.act_element(bc, r + s);
          if (!(commutator(acts[s1][size_t(r - lo)], acts[s2][size_t(s - lo)]) == *t))
            return false;
        }
    }
  return true;
}

bool loop_axiom_components(const LoopModule& m) {
  const GAlgebra& g = *m.alg;
  const int slots = 3 * g.rs.rank, T = int(m.terms.size());
  std::vector<std::vector<QMat>> comp(T);
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < slots; ++s) comp[t].push_back(contract(m.terms[t].mats, g.gen_coords[s]));

  auto find_term = [&](const Rat& pt, int jet) {
    for (int t = 0; t < T; ++t)
      if (m.terms[t].jet == jet && m.terms[t].point == pt) return t;
    return -1;
  };

  for (int s1 = 0; s1 < slots; ++s1)
    for (int s2 = 0; s2 < slots; ++s2) {
      auto bc = bracket_coords(g, g.gen_coords[s1], g.gen_coords[s2]);
      for (int t1 = 0; t1 < T; ++t1)
        for (int t2 = 0; t2 < T; ++t2) {
          QMat br = commutator(comp[t1][s1], comp[t2][s2]);
          int jsum = m.terms[t1].jet + m.terms[t2].jet;
          if (!(m.terms[t1].point == m.terms[t2].point) || jsum == 2) {
            if (!br.is_zero()) return false;
            continue;
          }
          int tt = find_term(m.terms[t1].point, jsum);
          QMat want = tt < 0 ? QMat(m.dim, m.dim) : contract(m.terms[tt].mats, bc);
          if (!(br == want)) return false;
        }
    }
  return true;
}

std::vector<QMat> polynomial_action(const LoopModule& m, const LaurentPoly& f) {
  const int dg = m.alg->dim();
  std::vector<QMat> out;
  out.reserve(dg);
  for (int k = 0; k < dg; ++k) {
    QMat acc(m.dim, m.dim);
    for (const auto& [e, c] : f)
      if (c != 0) acc = acc + m.act(k, e).scaled(c);
    out.push_back(std::move(acc));
  }
  return out;
}

bool jet_annihilator_check(const LoopModule& m, const LaurentPoly& f) {
  auto lhs = polynomial_action(m, f);
  const int dg = m.alg->dim();
  for (int k = 0; k < dg; ++k) {
    QMat rhs(m.dim, m.dim);
    for (const LoopTerm& t : m.terms) {
      Rat c(0);
      for (const auto& [e, co] : f)
        c += t.jet == 0 ? Rat(co * rat_pow(t.point, e))
                        : Rat(co * Rat(e) * rat_pow(t.point, e - 1));
      if (c != 0) rhs = rhs + t.mats[k].scaled(c);
    }
    if (!(lhs[k] == rhs)) return false;
  }
  return true;
}

bool is_nonsplit(const ExtensionModule& em) {
  const LoopModule& m = em.module;
  const GAlgebra& g = *m.alg;
  const int n = g.rs.rank, slots = 3 * n, dl = em.dim_lambda, dm = em.dim_mu;
  const Rat& a = em.a;

  std::vector<QMat> XL(slots, QMat(dl, dl)), XM(slots, QMat(dm, dm)), PS(slots, QMat(dm, dl));
  for (int s = 0; s < slots; ++s) {
    QMat V = m.act_gen(s, 0);
    QMat D1 = m.act_gen(s, 1) - V.scaled(a);
    for (int i = 0; i < dl; ++i)
      for (int j = 0; j < dl; ++j) XL[s].at(i, j) = V.at(i, j);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dm; ++j) XM[s].at(i, j) = V.at(dl + i, dl + j);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dl; ++j) PS[s].at(i, j) = D1.at(dl + i, j);
  }

  std::vector<Weight> wl(dl, Weight(n)), wm(dm, Weight(n));
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < dl; ++v) wl[v][i] = rat_int(XL[gen_cartan(n, i)].at(v, v));
    for (int u = 0; u < dm; ++u) wm[u][i] = rat_int(XM[gen_cartan(n, i)].at(u, u));
  }

  // a complement is the graph of phi: V(lambda) -> V(mu); the h-layer of the
  // system forces phi to preserve weights, so those are the only unknowns
  std::vector<int> unk_of(size_t(dm) * dl, -1);
  std::vector<std::pair<int, int>> unks;
  for (int u = 0; u < dm; ++u)
    for (int v = 0; v < dl; ++v)
      if (wm[u] == wl[v]) {
        unk_of[size_t(u) * dl + v] = int(unks.size());
        unks.emplace_back(u, v);
      }
  const int U = int(unks.size());

  std::vector<Weight> shift(slots, Weight(n, 0));
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    Weight alpha = g.rs.root_to_weight(e);
    shift[gen_raise(n, i)] = alpha;
    for (int c = 0; c < n; ++c) alpha[c] = -alpha[c];
    shift[gen_lower(n, i)] = alpha;
  }

  std::vector<std::vector<Rat>> rows;
  for (Int r = -1; r <= 1; ++r) {
    Rat ar = rat_pow(a, r);
    Rat dr = Rat(r) * rat_pow(a, r - 1);
    for (int s = 0; s < slots; ++s)
      for (int u = 0; u < dm; ++u)
        for (int v = 0; v < dl; ++v) {
          Weight want = wl[v];
          for (int c = 0; c < n; ++c) want[c] += shift[s][c];
          if (wm[u] != want && PS[s].at(u, v) == 0) continue;
          std::vector<Rat> row(size_t(U) + 1, Rat(0));
          for (int t = 0; t < dm; ++t)
            if (XM[s].at(u, t) != 0 && unk_of[size_t(t) * dl + v] >= 0)
              row[unk_of[size_t(t) * dl + v]] += ar * XM[s].at(u, t);
          for (int t = 0; t < dl; ++t)
            if (XL[s].at(t, v) != 0 && unk_of[size_t(u) * dl + t] >= 0)
              row[unk_of[size_t(u) * dl + t]] -= ar * XL[s].at(t, v);
          row[U] = -dr * PS[s].at(u, v);
          bool zero = true;
          for (const Rat& c : row)
            if (c != 0) {
              zero = false;
              break;
            }
          if (!zero) rows.push_back(std::move(row));
        }
  }

  if (rows.empty()) return false;
  QMat A(int(rows.size()), U + 1);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j <= U; ++j) A.at(int(i), j) = rows[i][j];
  auto pivots = rref(A);
  for (int p : pivots)
    if (p == U) return true;  // inconsistent: no invariant complement
  return false;
}

namespace {

// per-term generator components and the slot grading by value-Cartan data
struct ModuleOps {
  int dim = 0;
  std::vector<QMat> comps;        // every nonzero component matrix
  std::vector<QMat> raising;      // raising components across all terms
  std::map<std::vector<Rat>, std::vector<int>> groups;  // cartan key -> slots
  std::vector<int> jet0;          // indices of value terms
};

ModuleOps analyze(const LoopModule& m) {
  const GAlgebra& g = *m.alg;
  const int n = g.rs.rank, dg = g.dim();
  ModuleOps ops;
  ops.dim = m.dim;

  for (const LoopTerm& t : m.terms)
    for (int k = 0; k < dg; ++k)
      if (!t.mats[k].is_zero()) ops.comps.push_back(t.mats[k]);

  for (const LoopTerm& t : m.terms)
    for (int i = 0; i < n; ++i) {
      QMat R = contract(t.mats, g.gen_coords[gen_raise(n, i)]);
      if (!R.is_zero()) ops.raising.push_back(std::move(R));
    }

  std::vector<std::vector<Rat>> key(m.dim);
  for (size_t t = 0; t < m.terms.size(); ++t) {
    if (m.terms[t].jet != 0) continue;
    ops.jet0.push_back(int(t));
    for (int i = 0; i < n; ++i) {
      QMat C = contract(m.terms[t].mats, g.gen_coords[gen_cartan(n, i)]);
      for (int u = 0; u < m.dim; ++u)
        for (int v = 0; v < m.dim; ++v)
          if (u != v && C.at(u, v) != 0)
            throw std::logic_error("value Cartan component is not diagonal");
      for (int u = 0; u < m.dim; ++u) key[u].push_back(C.at(u, u));
    }
  }
  for (int u = 0; u < m.dim; ++u) ops.groups[key[u]].push_back(u);
  return ops;
}

// joint kernel of the raising components inside one grading group
std::vector<std::vector<Rat>> top_space(const ModuleOps& ops, const std::vector<int>& slots) {
  const int g = int(slots.size());
  QMat A(int(ops.raising.size()) * ops.dim, g);
  int r0 = 0;
  for (const QMat& R : ops.raising) {
    for (int i = 0; i < ops.dim; ++i)
      for (int j = 0; j < g; ++j) A.at(r0 + i, j) = R.at(i, slots[j]);
    r0 += ops.dim;
  }
  QMat N = ops.raising.empty() ? QMat::identity(g) : nullspace(A);
  std::vector<std::vector<Rat>> out;
  for (int c = 0; c < N.m; ++c) {
    std::vector<Rat> v(ops.dim, Rat(0));
    for (int j = 0; j < g; ++j) v[slots[j]] = N.at(j, c);
    out.push_back(std::move(v));
  }
  return out;
}

struct SpinResult {
  SpanBuilder sb;
  std::vector<std::vector<Rat>> basis;
};

SpinResult spin(int dim, const std::vector<QMat>& comps,
                const std::vector<std::vector<Rat>>& seeds) {
  SpinResult out{SpanBuilder(dim), {}};
  auto add = [&](std::vector<Rat> v) {
    if (!out.sb.offer(v)) out.basis.push_back(std::move(v));
  };
  for (const auto& s : seeds) add(s);
  for (size_t i = 0; i < out.basis.size(); ++i)
    for (const QMat& c : comps) add(c.apply(out.basis[i]));
  return out;
}

QMat basis_matrix(int dim, const std::vector<std::vector<Rat>>& basis) {
  QMat W(dim, int(basis.size()));
  for (int c = 0; c < int(basis.size()); ++c)
    for (int i = 0; i < dim; ++i) W.at(i, c) = basis[c][i];
  return W;
}

bool burnside_full(int dim, const std::vector<QMat>& comps) {
  SpanBuilder sb(dim * dim);
  std::vector<QMat> basis;
  auto add = [&](QMat M) {
    if (M.is_zero()) return;
    if (!sb.offer(M.a)) basis.push_back(std::move(M));
  };
  add(QMat::identity(dim));
  for (const QMat& c : comps) add(c);
  for (size_t i = 0; i < basis.size() && sb.accepted < dim * dim; ++i)
    for (const QMat& c : comps) {
      add(basis[i] * c);
      add(c * basis[i]);
    }
  return sb.accepted == dim * dim;
}

}  // namespace

std::string IrreducibilityReport::verdict() const {
  if (!irreducible) return "definitely reducible (witness submodule)";
  return certified ? "irreducible" : "probably irreducible";
}

IrreducibilityReport irreducibility(const LoopModule& m, std::uint64_t seed) {
  if (m.dim <= 1) return {true, true, std::nullopt};
  ModuleOps ops = analyze(m);

  bool mult_one = true;
  std::vector<std::pair<std::vector<std::vector<Rat>>, int>> tops;  // (basis, group size)
  for (const auto& [key, slots] : ops.groups) {
    auto N = top_space(ops, slots);
    if (N.size() > 1) mult_one = false;
    if (!N.empty()) tops.emplace_back(std::move(N), int(slots.size()));
  }

  for (const auto& [N, gsize] : tops)
    for (const auto& v : N) {
      SpinResult s = spin(m.dim, ops.comps, {v});
      if (int(s.basis.size()) < m.dim)
        return {false, true, basis_matrix(m.dim, s.basis)};
    }
  if (mult_one) return {true, true, std::nullopt};

  // multiplicity in a top layer: sample combinations inside it
  std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (const auto& [N, gsize] : tops) {
    if (N.size() < 2) continue;
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Rat> v(m.dim, Rat(0));
      bool nonzero = false;
      for (const auto& b : N) {
        Int c = Int(next() % 7) - 3;
        if (c == 0) continue;
        nonzero = true;
        for (int i = 0; i < m.dim; ++i) v[i] += Rat(c) * b[i];
      }
      if (!nonzero) continue;
      SpinResult s = spin(m.dim, ops.comps, {v});
      if (int(s.basis.size()) < m.dim)
        return {false, true, basis_matrix(m.dim, s.basis)};
    }
  }

  if (m.dim <= 12 && burnside_full(m.dim, ops.comps)) return {true, true, std::nullopt};
  return {true, false, std::nullopt};
}

bool is_irreducible(const LoopModule& m, std::uint64_t seed) {
  return irreducibility(m, seed).irreducible;
}

namespace {

std::string leaf_str(const std::vector<std::pair<Rat, Weight>>& tops) {
  std::ostringstream os;
  for (size_t i = 0; i < tops.size(); ++i) {
    if (i) os << ", ";
    os << "a=" << tops[i].first.get_str() << ": " << weight_str(tops[i].second);
  }
  return os.str();
}

}  // namespace

SpectralCharacter spectral_character_of(const LoopModule& m) {
  const GAlgebra& g = *m.alg;
  const int n = g.rs.rank;
  GammaGroup G = gamma_group(g.rs);

  std::vector<LoopTerm> cur = m.terms;
  int dim = m.dim;
  bool have_ref = false;
  SpectralCharacter ref;
  std::string ref_desc;

  while (dim > 0) {
    LoopModule layer{m.alg, dim, cur};
    ModuleOps ops = analyze(layer);

    // distinct points of the value terms, in term order
    std::vector<Rat> points;
    for (int t : ops.jet0) points.push_back(cur[t].point);
    const int s = int(points.size());
    QMat vand(s, s);
    for (int k = 0; k < s; ++k)
      for (int j = 0; j < s; ++j) vand.at(k, j) = rat_pow(points[j], k);

    std::vector<std::vector<Rat>> all_tops;
    for (const auto& [key, slots] : ops.groups) {
      auto N = top_space(ops, slots);
      if (N.empty()) continue;
      for (auto& v : N) all_tops.push_back(std::move(v));

      // recover the weight at each point from the Cartan eigenvalue data
      std::vector<std::pair<Rat, Weight>> tops(s);
      for (int j = 0; j < s; ++j) tops[j] = {points[j], Weight(n, 0)};
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> d(s, Rat(0));
        for (int k = 0; k < s; ++k)
          for (int j = 0; j < s; ++j) d[k] += rat_pow(points[j], k) * key[size_t(j) * n + i];
        auto lam = solve(vand, d);
        if (!lam) throw std::logic_error("Vandermonde system is singular");
        for (int j = 0; j < s; ++j) tops[j].second[i] = rat_int((*lam)[j]);
      }
      SpectralCharacter chi;
      for (int j = 0; j < s; ++j) {
        for (Int c : tops[j].second)
          if (c < 0) throw std::logic_error("constituent top weight is not dominant");
        auto cls = G.project(tops[j].second);
        if (!G.is_zero(cls)) chi[SpectralPoint(points[j])] = cls;
      }

      if (!have_ref) {
        have_ref = true;
        ref = chi;
        ref_desc = leaf_str(tops);
      } else if (!(chi == ref)) {
        throw std::domain_error("no single spectral character: constituent (" + ref_desc +
                                ") and constituent (" + leaf_str(tops) +
                                ") lie in different blocks");
      }
    }

    if (all_tops.empty()) throw std::logic_error("module has no highest-weight layer");
    SpinResult sub = spin(dim, ops.comps, all_tops);
    const int sdim = int(sub.basis.size());
    if (sdim == dim) break;

    // quotient onto the non-pivot slots
    std::vector<bool> is_pivot(dim, false);
    for (const auto& row : sub.sb.rows) is_pivot[row.pivot] = true;
    std::vector<int> rest;
    for (int i = 0; i < dim; ++i)
      if (!is_pivot[i]) rest.push_back(i);
    const int qdim = int(rest.size());

    std::vector<LoopTerm> next;
    for (const LoopTerm& t : cur) {
      LoopTerm q{t.point, t.jet, {}};
      for (const QMat& M : t.mats) {
        QMat Q(qdim, qdim);
        for (int v = 0; v < qdim; ++v) {
          std::vector<Rat> col(dim, Rat(0));
          for (int i = 0; i < dim; ++i) col[i] = M.at(i, rest[v]);
          for (const auto& row : sub.sb.rows) {
            Rat c = col[row.pivot];
            if (c == 0) continue;
            for (int i = 0; i < dim; ++i)
              if (row.v[i] != 0) col[i] -= c * row.v[i];
          }
          for (int u = 0; u < qdim; ++u) Q.at(u, v) = col[rest[u]];
        }
        q.mats.push_back(std::move(Q));
      }
      next.push_back(std::move(q));
    }
    cur = normalize_terms(std::move(next));
    dim = qdim;
  }
  return ref;
}

std::string module_json(const LoopModule& m, Int lo, Int hi) {
  const int n = m.alg->rs.rank;
  auto entry = [](const Rat& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
      throw std::logic_error("matrix entry exceeds the export range");
    return nlohmann::json::array({q.get_num().get_si(), q.get_den().get_si()});
  };
  auto name = [&](int slot) {
    if (slot < n) return "x" + std::to_string(slot) + "+";
    if (slot < 2 * n) return "x" + std::to_string(slot - n) + "-";
    return "h" + std::to_string(slot - 2 * n);
  };

  nlohmann::json j;
  j["dim"] = m.dim;
  j["generators"] = nlohmann::json::array();
  for (int slot = 0; slot < 3 * n; ++slot)
    for (Int r = lo; r <= hi; ++r) {
      QMat M = m.act_gen(slot, r);
      nlohmann::json rowsj = nlohmann::json::array();
      for (int i = 0; i < M.n; ++i) {
        nlohmann::json rowj = nlohmann::json::array();
        for (int c = 0; c < M.m; ++c) rowj.push_back(entry(M.at(i, c)));
        rowsj.push_back(std::move(rowj));
      }
      j["generators"].push_back(
          {{"name", name(slot)}, {"power", r}, {"matrix", std::move(rowsj)}});
    }
  return j.dump();
}

}  // namespace blockatlas
