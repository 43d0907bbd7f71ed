#include "blockatlas/galgebra.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace blockatlas {

namespace {

std::vector<Rat> flat(const QMat& m) { return m.a; }

// Root vectors for every positive root of the module's algebra, found by
// bracketing up from the simple raising operators. The (root, simple) pairs
// chosen depend only on the root combinatorics, so every module pins the
// same abstract element for each root.
std::map<RootVec, QMat> root_actions(const RootSystem& rs, const Irrep& v) {
  std::map<RootVec, QMat> e;
  for (const RootVec& beta : rs.pos_roots) {
    Int h = 0;
    for (Int c : beta) h += c;
    if (h == 1) {
      for (int i = 0; i < rs.rank; ++i)
        if (beta[i] == 1) e.emplace(beta, v.raise[i]);
      continue;
    }
    bool placed = false;
    for (int i = 0; i < rs.rank && !placed; ++i) {
      if (beta[i] == 0) continue;
      RootVec gamma = beta;
      gamma[i] -= 1;
      auto it = e.find(gamma);
      if (it == e.end()) continue;
      e.emplace(beta, commutator(v.raise[i], it->second));
      placed = true;
    }
    if (!placed) throw std::logic_error("positive root unreachable by single steps");
  }
  return e;
}

std::vector<QMat> replay_actions(const RootSystem& rs, const std::vector<std::vector<int>>& words,
                                 const Irrep& v) {
  QMat top = root_actions(rs, v).at(rs.theta);
  std::map<std::vector<int>, QMat> memo;
  memo.emplace(std::vector<int>{}, std::move(top));

  std::vector<QMat> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    // resolve the word back to front so shared suffixes are computed once
    for (int cut = int(w.size()) - 1; cut >= 0; --cut) {
      std::vector<int> suffix(w.begin() + cut, w.end());
      if (memo.count(suffix)) continue;
      std::vector<int> rest(suffix.begin() + 1, suffix.end());
      memo.emplace(std::move(suffix), commutator(v.lower[suffix[0]], memo.at(rest)));
    }
    out.push_back(memo.at(w));
  }
  return out;
}

}  // namespace

GAlgebraPtr build_galgebra(const RootSystem& rs, int dim_cap) {
  auto g = std::make_shared<GAlgebra>();
  g->rs = rs;
  g->adjoint = build_irrep(rs, rs.theta_w, dim_cap);
  g->ad = replay_actions(rs, g->adjoint.words, g->adjoint);

  const int n = rs.rank, dim = g->dim();
  SpanBuilder span(dim * dim);
  for (const QMat& m : g->ad)
    if (span.offer(flat(m))) throw std::logic_error("bracket table is not independent");

  std::vector<QMat> gens = chevalley_actions(g->adjoint);
  g->gen_coords.reserve(3 * n);
  for (const QMat& m : gens) {
    auto c = span.express(flat(m));
    if (!c) throw std::logic_error("generator missing from the bracket span");
    g->gen_coords.push_back(std::move(*c));
  }

  // brackets of the located generators must reproduce the defining relations
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto xy = bracket_coords(*g, g->gen_coords[gen_raise(n, i)], g->gen_coords[gen_lower(n, j)]);
      std::vector<Rat> want(dim, Rat(0));
      if (i == j) want = g->gen_coords[gen_cartan(n, i)];
      if (xy != want) throw std::logic_error("generator coordinates break the bracket relations");

      auto hx = bracket_coords(*g, g->gen_coords[gen_cartan(n, i)], g->gen_coords[gen_raise(n, j)]);
      std::vector<Rat> scaled = g->gen_coords[gen_raise(n, j)];
      for (Rat& c : scaled) c *= Rat(rs.cartan[i][j]);
      if (hx != scaled) throw std::logic_error("generator coordinates break the bracket relations");
    }
  return g;
}

std::vector<QMat> algebra_actions(const GAlgebra& g, const Irrep& v) {
  return replay_actions(g.rs, g.adjoint.words, v);
}

std::vector<Rat> bracket_coords(const GAlgebra& g, const std::vector<Rat>& x,
                                const std::vector<Rat>& y) {
  std::vector<Rat> z(g.dim(), Rat(0));
  for (int k = 0; k < g.dim(); ++k) {
    if (x[k] == 0) continue;
    std::vector<Rat> t = g.ad[k].apply(y);
    for (int j = 0; j < g.dim(); ++j) z[j] += x[k] * t[j];
  }
  return z;
}

namespace {

struct ProductSpace {
  const GAlgebra& g;
  const Irrep& lam;
  int dg, dl, dim;
  std::vector<Weight> weights;               // weight of each product slot
  std::map<Weight, std::vector<int>> bucket; // slots grouped by weight

  ProductSpace(const GAlgebra& g_, const Irrep& lam_)
      : g(g_), lam(lam_), dg(g_.dim()), dl(lam_.dim), dim(dg * lam_.dim) {
    weights.reserve(dim);
    for (int k = 0; k < dg; ++k)
      for (int l = 0; l < dl; ++l) {
        Weight w = g.adjoint.weights[k];
        for (int c = 0; c < int(w.size()); ++c) w[c] += lam.weights[l][c];
        bucket[w].push_back(int(weights.size()));
        weights.push_back(std::move(w));
      }
  }

  // x_i^- on a dense vector, using ad (x) 1 + 1 (x) action
  std::vector<Rat> apply_lower(int i, const std::vector<Rat>& v) const {
    std::vector<Rat> out(dim, Rat(0));
    for (int s = 0; s < dim; ++s) {
      if (v[s] == 0) continue;
      int k = s / dl, l = s % dl;
      for (int k2 = 0; k2 < dg; ++k2) {
        const Rat& c = g.adjoint.lower[i].at(k2, k);
        if (c != 0) out[k2 * dl + l] += c * v[s];
      }
      for (int l2 = 0; l2 < dl; ++l2) {
        const Rat& c = lam.lower[i].at(l2, l);
        if (c != 0) out[k * dl + l2] += c * v[s];
      }
    }
    return out;
  }

  Rat form_entry(int s, int t) const {
    return g.adjoint.gram.at(s / dl, t / dl) * lam.gram.at(s % dl, t % dl);
  }

  // contravariant form applied to a dense vector
  std::vector<Rat> form_apply(const std::vector<Rat>& v) const {
    std::vector<Rat> out(dim, Rat(0));
    for (const auto& [w, idx] : bucket)
      for (int s : idx)
        for (int t : idx)
          if (v[t] != 0) out[s] += form_entry(s, t) * v[t];
    return out;
  }
};

}  // namespace

QMat equivariant_projection(const GAlgebra& g, const Irrep& vlambda, const Irrep& vmu) {
  const RootSystem& rs = g.rs;
  const int n = rs.rank;
  ProductSpace M(g, vlambda);

  auto it = M.bucket.find(vmu.highest);
  if (it == M.bucket.end()) throw std::domain_error("Hom vanishes");
  const std::vector<int>& I = it->second;

  std::vector<Weight> alphas(n);
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    alphas[i] = rs.root_to_weight(e);
  }

  // highest-weight vectors of weight mu: joint kernel of the raisings
  int rows = 0;
  std::vector<std::pair<int, int>> row_of;  // (simple index, target slot)
  for (int i = 0; i < n; ++i) {
    Weight up = vmu.highest;
    for (int c = 0; c < n; ++c) up[c] += alphas[i][c];
    if (auto t = M.bucket.find(up); t != M.bucket.end())
      for (int s : t->second) row_of.emplace_back(i, s), ++rows;
  }
  QMat K;
  if (rows == 0) {
    K = QMat::identity(int(I.size()));
  } else {
    QMat A(rows, int(I.size()));
    for (int r = 0; r < rows; ++r) {
      auto [i, tslot] = row_of[r];
      int kt = tslot / M.dl, lt = tslot % M.dl;
      for (size_t p = 0; p < I.size(); ++p) {
        int k = I[p] / M.dl, l = I[p] % M.dl;
        Rat c(0);
        if (l == lt) c += g.adjoint.raise[i].at(kt, k);
        if (k == kt) c += vlambda.raise[i].at(lt, l);
        A.at(r, int(p)) = c;
      }
    }
    K = nullspace(A);
  }
  if (K.m == 0) throw std::domain_error("Hom vanishes");

  // pick a top vector that is not isotropic for the contravariant form
  QMat FI(int(I.size()), int(I.size()));
  for (size_t a = 0; a < I.size(); ++a)
    for (size_t b = 0; b < I.size(); ++b) FI.at(int(a), int(b)) = M.form_entry(I[a], I[b]);
  QMat HG = K.transpose() * (FI * K);
  std::vector<Rat> c(K.m, Rat(0));
  int pick = -1;
  for (int j = 0; j < K.m && pick < 0; ++j)
    if (HG.at(j, j) != 0) pick = j;
  if (pick >= 0) {
    c[pick] = 1;
  } else {
    for (int a = 0; a < K.m && pick < 0; ++a)
      for (int b = a + 1; b < K.m && pick < 0; ++b)
        if (HG.at(a, b) != 0) {
          c[a] = 1;
          c[b] = 1;
          pick = a;
        }
    if (pick < 0) throw std::logic_error("degenerate highest-weight pairing");
  }

  std::vector<Rat> u(M.dim, Rat(0));
  for (size_t p = 0; p < I.size(); ++p) {
    Rat s(0);
    for (int j = 0; j < K.m; ++j) s += K.at(int(p), j) * c[j];
    u[I[p]] = s;
  }

  // transport the target basis along its own word recipes
  std::map<std::vector<int>, std::vector<Rat>> memo;
  memo.emplace(std::vector<int>{}, u);
  std::vector<std::vector<Rat>> s_of(vmu.dim), fs_of(vmu.dim);
  for (int j = 0; j < vmu.dim; ++j) {
    const auto& w = vmu.words[j];
    for (int cut = int(w.size()) - 1; cut >= 0; --cut) {
      std::vector<int> suffix(w.begin() + cut, w.end());
      if (memo.count(suffix)) continue;
      std::vector<int> rest(suffix.begin() + 1, suffix.end());
      memo.emplace(std::move(suffix), M.apply_lower(suffix[0], memo.at(rest)));
    }
    s_of[j] = memo.at(w);
    fs_of[j] = M.form_apply(s_of[j]);
  }

  QMat GS(vmu.dim, vmu.dim);
  for (int a = 0; a < vmu.dim; ++a)
    for (int b = 0; b < vmu.dim; ++b) {
      Rat s(0);
      for (int e = 0; e < M.dim; ++e)
        if (s_of[a][e] != 0) s += s_of[a][e] * fs_of[b][e];
      GS.at(a, b) = s;
    }
  auto GSinv = inverse(GS);
  if (!GSinv) throw std::logic_error("transport Gram is degenerate");

  QMat R(vmu.dim, M.dim);
  for (int j = 0; j < vmu.dim; ++j)
    for (int e = 0; e < M.dim; ++e) R.at(j, e) = fs_of[j][e];
  QMat P = *GSinv * R;

  for (const Rat& v : P.a)
    if (v != 0) return P.scaled(Rat(1) / v);
  throw std::logic_error("projection collapsed to zero");
}

QMat equivariant_projection(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                            int dim_cap) {
  GAlgebraPtr g = build_galgebra(rs, dim_cap);
  Irrep vl = build_irrep(rs, lambda, dim_cap);
  Irrep vm = build_irrep(rs, mu, dim_cap);
  return equivariant_projection(*g, vl, vm);
}

}  // namespace blockatlas
