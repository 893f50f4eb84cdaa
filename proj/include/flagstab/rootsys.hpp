#pragma once

#include <string>
#include <vector>

#include "flagstab/linalg.hpp"

namespace flagstab {

// Coordinate systems a weight vector can be expressed in. Internally every
// computation runs in simple-root coordinates; the other two are provided
// for input/output. Epsilon coordinates exist only for classical families
// (A uses n+1 coordinates summing to zero, B/C/D use n).
enum class WeightBasis { kSimpleRoot, kFundamental, kEpsilon };

std::string basis_name(WeightBasis basis);
WeightBasis basis_from_name(const std::string& name);

struct Weight {
  QVector coords;
  WeightBasis basis = WeightBasis::kFundamental;
};

struct ComponentSpec {
  char family = 0;  // 'A'..'G'
  int rank = 0;
  int offset = 0;  // first simple-root index of this component
};

// Root datum of a semisimple group in simple-root coordinates. The invariant
// form is normalized so long roots in each irreducible component have
// squared length 2; all pairings are exact rationals.
struct RootSystem {
  std::string type_spec;  // normalized, e.g. "B4" or "A2xG2"
  int rank = 0;
  std::vector<ComponentSpec> components;
  QMatrix gram;      // (alpha_i, alpha_j)
  QMatrix gram_inv;
  QMatrix cartan;    // cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
  std::vector<QVector> all_roots;  // positive roots first, then their negatives
  int num_positive = 0;
  std::vector<QVector> fundamental_weights;  // simple-root coordinates

  bool has_epsilon = false;
  int epsilon_dim = 0;
  QMatrix eps_of_simple;  // epsilon_dim x rank, column j = alpha_j

  const QVector& simple_root(int i) const;  // unit coordinate vector, cached
  const QVector& positive_root(int i) const { return all_roots.at(i); }
  int negative_of(int positive_index) const { return positive_index + num_positive; }
  // Index of a root vector in all_roots, -1 if not a root.
  int root_index(const QVector& v) const;
  bool is_root(const QVector& v) const { return root_index(v) >= 0; }

 private:
  friend RootSystem build_root_system(const std::string&);
  std::vector<QVector> simple_cache_;
};

// Parses "A2", "b4", "A2xG2", ... and constructs the datum. Validates the
// rank ranges (A>=1, B>=2, C>=3, D>=4, E in 6..8, F4, G2).
RootSystem build_root_system(const std::string& type_spec);

// Invariant form on simple-root coordinates.
Rat inner(const RootSystem& rs, const QVector& a, const QVector& b);
Rat norm2(const RootSystem& rs, const QVector& a);

QVector to_simple(const RootSystem& rs, const Weight& w);
Weight convert(const RootSystem& rs, const Weight& w, WeightBasis target);
QVector simple_to_fundamental(const RootSystem& rs, const QVector& x);
QVector fundamental_to_simple(const RootSystem& rs, const QVector& x);
QVector simple_to_epsilon(const RootSystem& rs, const QVector& x);
QVector epsilon_to_simple(const RootSystem& rs, const QVector& x);

// All pairings with simple roots nonnegative (resp. positive).
bool is_dominant(const RootSystem& rs, const QVector& x);
bool is_strictly_dominant(const RootSystem& rs, const QVector& x);

// Abstract Cartan type of the subsystem with the given base (simple roots of
// the subsystem, in simple-root coordinates of the ambient system). Returns
// labels like "A3" or "A1+A2" (component labels sorted).
std::string identify_type(const RootSystem& rs, const std::vector<QVector>& base);

}  // namespace flagstab
