#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "flagstab/linalg.hpp"
#include "flagstab/rootsys.hpp"

namespace flagstab {

// One Weyl group element, represented by its matrix on simple-root
// coordinates (an integer matrix permuting the roots).
struct WeylElement {
  QMatrix matrix;
  int length = 0;
  int index = -1;
};

// Matrix of the reflection in the i-th simple root, acting on simple-root
// coordinates.
QMatrix simple_reflection(const RootSystem& rs, int i);

bool qmat_less(const QMatrix& a, const QMatrix& b);
struct QMatrixLess {
  bool operator()(const QMatrix& a, const QMatrix& b) const {
    return qmat_less(a, b);
  }
};

// The full Weyl group, enumerated breadth-first from the identity. Elements
// are indexed by (length, matrix) lexicographically, so the identity has
// index 0 and the longest element comes last. Keeps its own copy of the
// root system.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystem& rs,
                             std::size_t cap = 2000000);

  const RootSystem& root_system() const { return rs_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const WeylElement& element(int idx) const { return elements_.at(idx); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }

  // Index of the element with the given matrix, -1 if it is not one.
  int index_of(const QMatrix& m) const;
  int simple(int i) const { return simple_idx_.at(i); }
  int multiply(int a, int b) const;  // element acting as a after b
  int inverse(int a) const;

  // Canonical reduced word, leftmost factor first: the element equals
  // s_{word[0]} s_{word[1]} ... applied to a vector right to left.
  std::vector<int> reduced_word(int idx) const;

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::map<QMatrix, int, QMatrixLess> index_;
  std::vector<int> simple_idx_;
};

// Number of positive roots the element sends to negative roots; equals the
// Coxeter length.
int inversion_count(const RootSystem& rs, const QMatrix& w);

// Conjugates a vector into the dominant chamber by simple reflections,
// always reflecting in the lowest-numbered violated wall.
struct DominantConjugation {
  QVector dominant;       // equals w applied to the input
  QMatrix w;
  std::vector<int> word;  // w as a product of simple reflections
};
DominantConjugation dominant_conjugate(const RootSystem& rs, const QVector& x);

// Whether lambda lies in the convex hull of the Weyl orbit of the strictly
// dominant weight chi, via the dominance-order criterion: the dominant
// conjugate of lambda must differ from chi by a nonnegative combination of
// simple roots.
bool weight_polytope_contains(const RootSystem& rs, const QVector& chi,
                              const QVector& lambda);

}  // namespace flagstab
