#include "blockatlas/irrep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "blockatlas/oracle.hpp"

namespace blockatlas {

namespace {

// A word lists simple lowering operators, outermost first: {j, rest...}
// stands for y_j applied to (y_rest ... v). The empty word is the highest
// vector itself. Every module element we ever touch is a rational
// combination of words, and the combination algebra below only uses the
// relations [x_i, y_j] = delta_ij h_i and the known h-eigenvalues.
using Word = std::vector<int>;
using Combo = std::map<Word, Rat>;

struct WordCalculus {
  const RootSystem& rs;
  const Weight lambda;
  std::map<std::pair<int, Word>, Combo> raise_memo;
  std::map<std::pair<Word, Word>, Rat> pair_memo;

  WordCalculus(const RootSystem& r, Weight l) : rs(r), lambda(std::move(l)) {}

  // lambda - sum of the word's roots, evaluated on h_i
  Int h_eigen(int i, const Word& w) const {
    Int s = lambda[i];
    for (int k : w) s -= rs.cartan[i][k];
    return s;
  }

  // x_i applied to a word, as a combination of words
  const Combo& raise(int i, const Word& w) {
    auto key = std::make_pair(i, w);
    auto it = raise_memo.find(key);
    if (it != raise_memo.end()) return it->second;

    Combo out;
    if (!w.empty()) {
      Word rest(w.begin() + 1, w.end());
      for (const auto& [sub, c] : raise(i, rest)) {
        Word moved;
        moved.reserve(sub.size() + 1);
        moved.push_back(w[0]);
        moved.insert(moved.end(), sub.begin(), sub.end());
        out[moved] += c;
      }
      if (i == w[0]) {
        Rat c(h_eigen(i, rest));
        if (c != 0) out[rest] += c;
      }
      for (auto it2 = out.begin(); it2 != out.end();)
        it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
    }
    return raise_memo.emplace(std::move(key), std::move(out)).first->second;
  }

  // contravariant pairing of two words
  Rat pairing(const Word& u, const Word& w) {
    if (u.empty()) return w.empty() ? Rat(1) : Rat(0);
    auto key = std::make_pair(u, w);
    auto it = pair_memo.find(key);
    if (it != pair_memo.end()) return it->second;

    Word rest(u.begin() + 1, u.end());
    Rat s(0);
    for (const auto& [sub, c] : raise(u[0], w)) s += c * pairing(rest, sub);
    pair_memo.emplace(std::move(key), s);
    return s;
  }

  Rat pairing(const Word& u, const Combo& c) {
    Rat s(0);
    for (const auto& [w, coeff] : c) s += coeff * pairing(u, w);
    return s;
  }
};

Int level_of(const RootSystem& rs, const Weight& lambda, const Weight& beta) {
  Weight diff(lambda);
  for (int i = 0; i < rs.rank; ++i) diff[i] -= beta[i];
  Rat s(0);
  for (const Rat& c : rs.weight_to_root_coords(diff)) s += c;
  if (s.get_den() != 1) throw std::logic_error("weight outside the root-lattice coset");
  return s.get_num().get_si();
}

void check_relations(const RootSystem& rs, const Irrep& v) {
  const int n = rs.rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c(rs.cartan[i][j]);
      if (commutator(v.cartan[i], v.raise[j]) != v.raise[j].scaled(c) ||
          commutator(v.cartan[i], v.lower[j]) != v.lower[j].scaled(-c))
        throw std::logic_error("constructed module violates the Chevalley relations");
      QMat xy = commutator(v.raise[i], v.lower[j]);
      if (i == j ? xy != v.cartan[i] : !xy.is_zero())
        throw std::logic_error("constructed module violates the Chevalley relations");
      if (i != j) {
        // Serre relations: (ad x_i)^{1-C_ij} x_j = 0 and the lowering twin
        QMat p = v.raise[j], m = v.lower[j];
        for (Int k = 0; k < 1 - rs.cartan[i][j]; ++k) {
          p = commutator(v.raise[i], p);
          m = commutator(v.lower[i], m);
        }
        if (!p.is_zero() || !m.is_zero())
          throw std::logic_error("constructed module violates the Serre relations");
      }
    }
}

}  // namespace

Irrep build_irrep(const RootSystem& rs, const Weight& highest, int dim_cap) {
  if (int(highest.size()) != rs.rank) throw std::domain_error("weight has wrong rank");
  if (!rs.is_dominant(highest)) throw std::domain_error("weight must be dominant");
  BigInt d = weyl_dim(rs, highest);
  if (d > dim_cap) throw std::domain_error("dimension cap exceeded");

  const int n = rs.rank;
  std::vector<Weight> alphas(n);
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    alphas[i] = rs.root_to_weight(e);
  }

  // weights sorted by depth below the top, so sources precede targets
  std::map<Weight, BigInt> wsys = weight_system(rs, highest);
  std::vector<Weight> order;
  order.reserve(wsys.size());
  for (const auto& [w, m] : wsys) order.push_back(w);
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    Int la = level_of(rs, highest, a), lb = level_of(rs, highest, b);
    return la != lb ? la < lb : a < b;
  });

  WordCalculus calc(rs, highest);
  Irrep v;
  v.type = rs.type;
  v.highest = highest;

  std::map<Weight, std::vector<int>> slots;  // weight -> basis indices
  for (const Weight& beta : order) {
    int want = int(wsys.at(beta).get_si());
    std::vector<Word> cands;
    std::set<Word> seen;
    for (int i = 0; i < n; ++i) {
      Weight above = beta;
      for (int k = 0; k < n; ++k) above[k] += alphas[i][k];
      auto it = slots.find(above);
      if (it == slots.end()) continue;
      for (int s : it->second) {
        Word w;
        w.reserve(v.words[s].size() + 1);
        w.push_back(i);
        w.insert(w.end(), v.words[s].begin(), v.words[s].end());
        if (seen.insert(w).second) cands.push_back(std::move(w));
      }
    }
    if (beta == highest) cands.push_back({});

    // greedy subset whose pairing Gram has full rank: exactly the words
    // that stay independent in the irreducible quotient
    std::vector<Word> chosen;
    for (const Word& c : cands) {
      if (int(chosen.size()) == want) break;
      std::vector<Word> trial = chosen;
      trial.push_back(c);
      QMat G(int(trial.size()), int(trial.size()));
      for (size_t a = 0; a < trial.size(); ++a)
        for (size_t b = 0; b < trial.size(); ++b) G.at(int(a), int(b)) = calc.pairing(trial[a], trial[b]);
      if (rank(G) == int(trial.size())) chosen.push_back(c);
    }
    if (int(chosen.size()) != want) throw std::logic_error("weight space construction failed");
    for (Word& w : chosen) {
      slots[beta].push_back(v.dim++);
      v.weights.push_back(beta);
      v.words.push_back(std::move(w));
    }
  }
  if (BigInt(v.dim) != d) throw std::logic_error("dimension mismatch against the Weyl formula");

  // per-weight Gram blocks, kept as one block-diagonal matrix
  v.gram = QMat(v.dim, v.dim);
  std::map<Weight, QMat> gram_inv;
  for (const auto& [beta, idx] : slots) {
    int k = int(idx.size());
    QMat G(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        G.at(a, b) = calc.pairing(v.words[idx[a]], v.words[idx[b]]);
        v.gram.at(idx[a], idx[b]) = G.at(a, b);
      }
    if (G != G.transpose()) throw std::logic_error("contravariant form is not symmetric");
    auto inv = inverse(G);
    if (!inv) throw std::logic_error("degenerate weight-space Gram block");
    gram_inv.emplace(beta, *inv);
  }

  v.raise.assign(n, QMat(v.dim, v.dim));
  v.lower.assign(n, QMat(v.dim, v.dim));
  v.cartan.assign(n, QMat(v.dim, v.dim));
  for (int s = 0; s < v.dim; ++s) {
    const Weight& beta = v.weights[s];
    for (int i = 0; i < n; ++i) v.cartan[i].at(s, s) = Rat(beta[i]);

    for (int i = 0; i < n; ++i) {
      // y_i b_s: coordinates from pairing against the target block
      Weight down = beta;
      for (int k = 0; k < n; ++k) down[k] -= alphas[i][k];
      if (auto it = slots.find(down); it != slots.end()) {
        Word w;
        w.reserve(v.words[s].size() + 1);
        w.push_back(i);
        w.insert(w.end(), v.words[s].begin(), v.words[s].end());
        const auto& idx = it->second;
        std::vector<Rat> rhs(idx.size());
        for (size_t a = 0; a < idx.size(); ++a) rhs[a] = calc.pairing(v.words[idx[a]], w);
        std::vector<Rat> coord = gram_inv.at(down).apply(rhs);
        for (size_t a = 0; a < idx.size(); ++a) v.lower[i].at(idx[a], s) = coord[a];
      }

      // x_i b_s: straighten, then the same coordinate extraction
      Weight up = beta;
      for (int k = 0; k < n; ++k) up[k] += alphas[i][k];
      if (auto it = slots.find(up); it != slots.end()) {
        const Combo& c = calc.raise(i, v.words[s]);
        const auto& idx = it->second;
        std::vector<Rat> rhs(idx.size());
        for (size_t a = 0; a < idx.size(); ++a) rhs[a] = calc.pairing(v.words[idx[a]], c);
        std::vector<Rat> coord = gram_inv.at(up).apply(rhs);
        for (size_t a = 0; a < idx.size(); ++a) v.raise[i].at(idx[a], s) = coord[a];
      }
    }
  }

  check_relations(rs, v);
  return v;
}

std::vector<QMat> chevalley_actions(const Irrep& v) {
  std::vector<QMat> out;
  out.reserve(3 * v.raise.size());
  for (const QMat& m : v.raise) out.push_back(m);
  for (const QMat& m : v.lower) out.push_back(m);
  for (const QMat& m : v.cartan) out.push_back(m);
  return out;
}

}  // namespace blockatlas
