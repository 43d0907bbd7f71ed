#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blockatlas/numeric.hpp"

namespace blockatlas {

/// Dense matrix over exact rationals. Row-major.
struct QMat {
  int n = 0, m = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int rows, int cols) : n(rows), m(cols), a(size_t(rows) * cols, Rat(0)) {}

  Rat& at(int i, int j) { return a[size_t(i) * m + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * m + j]; }

  static QMat identity(int n);
  static QMat kron(const QMat& A, const QMat& B);

  bool is_zero() const;
  QMat transpose() const;

  QMat operator*(const QMat& B) const;  // skips zero entries of *this
  QMat operator+(const QMat& B) const;
  QMat operator-(const QMat& B) const;
  QMat scaled(const Rat& c) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  bool operator==(const QMat& B) const { return n == B.n && m == B.m && a == B.a; }
};

inline QMat commutator(const QMat& A, const QMat& B) { return A * B - B * A; }

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(QMat& M);

/// Columns form a basis of {x : Mx = 0}.
QMat nullspace(const QMat& M);

int rank(QMat M);

std::optional<QMat> inverse(const QMat& M);

/// One solution of Mx = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const QMat& M, const std::vector<Rat>& b);

/// Incremental row span with coordinate tracking. Vectors are offered in a
/// fixed order; each is either accepted into the basis or expressed as a
/// combination of previously accepted ones. Pivoting only looks at the first
/// `active` columns, so trailing columns can carry parallel data (e.g. the
/// image of the vector under a map being built alongside).
struct SpanBuilder {
  int width;
  int active;

  struct Row {
    std::vector<Rat> v;       // reduced vector, pivot entry normalized to 1
    int pivot;                // pivot column, < active
    std::vector<Rat> combo;   // expansion over accepted vectors
  };
  std::vector<Row> rows;
  int accepted = 0;

  explicit SpanBuilder(int width_, int active_ = -1)
      : width(width_), active(active_ < 0 ? width_ : active_) {}

  int dim() const { return accepted; }

  /// Accepts v (returns nullopt) or returns its coordinates over the
  /// accepted vectors. The first `active` components of an expressed vector
  /// reproduce v exactly; trailing components are reproduced only if the
  /// trailing data is a well-defined function of the active part.
  std::optional<std::vector<Rat>> offer(std::vector<Rat> v);

  /// Like offer but never accepts: coordinates if v lies in the span.
  std::optional<std::vector<Rat>> express(std::vector<Rat> v) const;
};

}  // namespace blockatlas
