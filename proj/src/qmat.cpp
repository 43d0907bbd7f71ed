#include "blockatlas/qmat.hpp"

#include <cassert>

namespace blockatlas {

QMat QMat::identity(int n) {
  QMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

QMat QMat::kron(const QMat& A, const QMat& B) {
  QMat K(A.n * B.n, A.m * B.m);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.m; ++j) {
      const Rat& c = A.at(i, j);
      if (c == 0) continue;
      for (int k = 0; k < B.n; ++k)
        for (int l = 0; l < B.m; ++l) {
          const Rat& d = B.at(k, l);
          if (d == 0) continue;
          K.at(i * B.n + k, j * B.m + l) = c * d;
        }
    }
  return K;
}

bool QMat::is_zero() const {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

QMat QMat::transpose() const {
  QMat T(m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) T.at(j, i) = at(i, j);
  return T;
}

QMat QMat::operator*(const QMat& B) const {
  assert(m == B.n);
  QMat C(n, B.m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < B.m; ++j) {
        const Rat& y = B.at(k, j);
        if (y == 0) continue;
        C.at(i, j) += x * y;
      }
    }
  return C;
}

QMat QMat::operator+(const QMat& B) const {
  assert(n == B.n && m == B.m);
  QMat C(n, m);
  for (size_t i = 0; i < a.size(); ++i) C.a[i] = a[i] + B.a[i];
  return C;
}

QMat QMat::operator-(const QMat& B) const {
  assert(n == B.n && m == B.m);
  QMat C(n, m);
  for (size_t i = 0; i < a.size(); ++i) C.a[i] = a[i] - B.a[i];
  return C;
}

QMat QMat::scaled(const Rat& c) const {
  QMat C(n, m);
  if (c == 0) return C;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) C.a[i] = c * a[i];
  return C;
}

std::vector<Rat> QMat::apply(const std::vector<Rat>& v) const {
  assert(int(v.size()) == m);
  std::vector<Rat> r(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const Rat& x = at(i, j);
      if (x == 0 || v[j] == 0) continue;
      r[i] += x * v[j];
    }
  return r;
}

std::vector<int> rref(QMat& M) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < M.m && row < M.n; ++col) {
    int p = -1;
    for (int i = row; i < M.n; ++i)
      if (M.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < M.m; ++j) std::swap(M.at(p, j), M.at(row, j));
    Rat inv = Rat(1) / M.at(row, col);
    for (int j = col; j < M.m; ++j)
      if (M.at(row, j) != 0) M.at(row, j) *= inv;
    for (int i = 0; i < M.n; ++i) {
      if (i == row) continue;
      const Rat c = M.at(i, col);
      if (c == 0) continue;
      for (int j = col; j < M.m; ++j)
        if (M.at(row, j) != 0) M.at(i, j) -= c * M.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

QMat nullspace(const QMat& M) {
  QMat R = M;
  std::vector<int> pivots = rref(R);
  std::vector<bool> is_pivot(M.m, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < M.m; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMat N(M.m, int(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    N.at(fc, int(k)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) N.at(pivots[r], int(k)) = -R.at(int(r), fc);
  }
  return N;
}

int rank(QMat M) { return int(rref(M).size()); }

std::optional<QMat> inverse(const QMat& M) {
  if (M.n != M.m) return std::nullopt;
  QMat A(M.n, 2 * M.n);
  for (int i = 0; i < M.n; ++i) {
    for (int j = 0; j < M.n; ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.n + i) = 1;
  }
  std::vector<int> pivots = rref(A);
  if (int(pivots.size()) != M.n || pivots.back() != M.n - 1) return std::nullopt;
  QMat inv(M.n, M.n);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) inv.at(i, j) = A.at(i, M.n + j);
  return inv;
}

std::optional<std::vector<Rat>> solve(const QMat& M, const std::vector<Rat>& b) {
  assert(int(b.size()) == M.n);
  QMat A(M.n, M.m + 1);
  for (int i = 0; i < M.n; ++i) {
    for (int j = 0; j < M.m; ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.m) = b[i];
  }
  std::vector<int> pivots = rref(A);
  if (!pivots.empty() && pivots.back() == M.m) return std::nullopt;
  std::vector<Rat> x(M.m, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = A.at(int(r), M.m);
  return x;
}

std::optional<std::vector<Rat>> SpanBuilder::offer(std::vector<Rat> v) {
  assert(int(v.size()) == width);
  std::vector<Rat> combo(size_t(accepted), Rat(0));
  for (const Row& r : rows) {
    const Rat c = v[r.pivot];
    if (c == 0) continue;
    for (int j = 0; j < width; ++j)
      if (r.v[j] != 0) v[j] -= c * r.v[j];
    for (int k = 0; k < accepted; ++k)
      if (r.combo[k] != 0) combo[k] += c * r.combo[k];
  }
  int pivot = -1;
  for (int j = 0; j < active; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return combo;

  Rat inv = Rat(1) / v[pivot];
  for (int j = 0; j < width; ++j)
    if (v[j] != 0) v[j] *= inv;
  // new accepted vector = original v; reduced row = inv*(v - sum combo_k * accepted_k)
  std::vector<Rat> rcombo(size_t(accepted) + 1, Rat(0));
  for (int k = 0; k < accepted; ++k) rcombo[k] = -inv * combo[k];
  rcombo[accepted] = inv;
  for (Row& r : rows) r.combo.push_back(Rat(0));
  rows.push_back(Row{std::move(v), pivot, std::move(rcombo)});
  ++accepted;
  return std::nullopt;
}

std::optional<std::vector<Rat>> SpanBuilder::express(std::vector<Rat> v) const {
  assert(int(v.size()) == width);
  std::vector<Rat> combo(size_t(accepted), Rat(0));
  for (const Row& r : rows) {
    const Rat c = v[r.pivot];
    if (c == 0) continue;
    for (int j = 0; j < width; ++j)
      if (r.v[j] != 0) v[j] -= c * r.v[j];
    for (int k = 0; k < accepted; ++k)
      if (r.combo[k] != 0) combo[k] += c * r.combo[k];
  }
  for (int j = 0; j < width; ++j)
    if (v[j] != 0) return std::nullopt;
  return combo;
}

}  // namespace blockatlas
