#include "flagstab/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "flagstab/cones.hpp"

namespace flagstab {
namespace {

// Order of the Weyl group, for pre-sizing and as a closure check. Returns
// 0 on overflow past the cap (callers treat that as "too large").
unsigned long long predicted_order(const std::vector<ComponentSpec>& comps,
                                   unsigned long long cap) {
  unsigned __int128 total = 1;
  auto mul = [&](unsigned long long f) {
    total *= f;
    if (total > static_cast<unsigned __int128>(cap) * 2) total = 0;
  };
  for (const ComponentSpec& c : comps) {
    if (total == 0) break;
    unsigned long long n = static_cast<unsigned long long>(c.rank);
    switch (c.family) {
      case 'A':
        for (unsigned long long k = 2; k <= n + 1; ++k) mul(k);
        break;
      case 'B':
      case 'C':
        for (unsigned long long k = 2; k <= n; ++k) mul(k);
        for (unsigned long long k = 0; k < n; ++k) mul(2);
        break;
      case 'D':
        for (unsigned long long k = 2; k <= n; ++k) mul(k);
        for (unsigned long long k = 0; k + 1 < n; ++k) mul(2);
        break;
      case 'E':
        mul(c.rank == 6 ? 51840ULL : (c.rank == 7 ? 2903040ULL
                                                  : 696729600ULL));
        break;
      case 'F': mul(1152); break;
      case 'G': mul(12); break;
      default: throw std::logic_error("predicted_order: unknown family");
    }
  }
  if (total == 0 || total > static_cast<unsigned __int128>(cap)) return 0;
  return static_cast<unsigned long long>(total);
}

bool first_nonzero_negative(const QVector& v) {
  for (const Rat& c : v) {
    if (c > 0) return false;
    if (c < 0) return true;
  }
  return false;
}

}  // namespace

QMatrix simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank)
    throw std::invalid_argument("simple_reflection: index out of range");
  QMatrix m = QMatrix::identity(rs.rank);
  for (int j = 0; j < rs.rank; ++j) m.rows[i][j] -= rs.cartan.rows[i][j];
  return m;
}

bool qmat_less(const QMatrix& a, const QMatrix& b) {
  if (a.nrows() != b.nrows()) return a.nrows() < b.nrows();
  for (std::size_t i = 0; i < a.nrows(); ++i)
    if (a.rows[i] != b.rows[i]) return qvec_less(a.rows[i], b.rows[i]);
  return false;
}

int inversion_count(const RootSystem& rs, const QMatrix& w) {
  int count = 0;
  for (int i = 0; i < rs.num_positive; ++i)
    if (first_nonzero_negative(mat_vec(w, rs.positive_root(i)))) ++count;
  return count;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
  unsigned long long expected = predicted_order(rs.components, cap);
  if (expected == 0)
    throw ScaleGuardError("Weyl group of " + rs.type_spec +
                          " exceeds the enumeration cap of " +
                          std::to_string(cap) + " elements");

  std::vector<QMatrix> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));

  WeylGroup g;
  g.rs_ = rs;
  std::set<QMatrix, QMatrixLess> seen;
  std::vector<QMatrix> frontier = {QMatrix::identity(rs.rank)};
  seen.insert(frontier[0]);
  std::vector<std::vector<QMatrix>> layers;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), qmat_less);
    layers.push_back(frontier);
    std::vector<QMatrix> next;
    for (const QMatrix& w : frontier)
      for (const QMatrix& s : gens) {
        QMatrix m = mat_mul(w, s);
        if (seen.insert(m).second) next.push_back(m);
      }
    frontier = std::move(next);
  }

  if (seen.size() != expected)
    throw std::logic_error("Weyl enumeration closed at " +
                           std::to_string(seen.size()) +
                           " elements, expected " + std::to_string(expected));

  // Spot-check that the breadth-first layer really is the Coxeter length.
  std::size_t stride = expected <= 5000 ? 1 : expected / 997 + 1;
  std::size_t running = 0;
  for (std::size_t l = 0; l < layers.size(); ++l)
    for (const QMatrix& w : layers[l]) {
      if (running % stride == 0 &&
          inversion_count(rs, w) != static_cast<int>(l))
        throw std::logic_error("layer does not match inversion count");
      ++running;
    }

  for (std::size_t l = 0; l < layers.size(); ++l)
    for (QMatrix& w : layers[l]) {
      WeylElement e;
      e.matrix = std::move(w);
      e.length = static_cast<int>(l);
      e.index = static_cast<int>(g.elements_.size());
      g.index_.emplace(e.matrix, e.index);
      g.elements_.push_back(std::move(e));
    }

  if (layers.back().size() != 1)
    throw std::logic_error("top length layer is not a single element");
  if (g.elements_.back().length != rs.num_positive)
    throw std::logic_error("longest element length is not the number of "
                           "positive roots");

  g.simple_idx_.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    int idx = g.index_of(gens[i]);
    if (idx < 0) throw std::logic_error("simple reflection missing");
    g.simple_idx_[i] = idx;
  }
  return g;
}

int WeylGroup::index_of(const QMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
  QMatrix m = mat_mul(element(a).matrix, element(b).matrix);
  int idx = index_of(m);
  if (idx < 0) throw std::logic_error("product left the group");
  return idx;
}

int WeylGroup::inverse(int a) const {
  int idx = index_of(mat_inverse(element(a).matrix));
  if (idx < 0) throw std::logic_error("inverse left the group");
  return idx;
}

std::vector<int> WeylGroup::reduced_word(int idx) const {
  const RootSystem& rs = rs_;
  QMatrix w = element(idx).matrix;
  std::vector<int> collected;
  QMatrix id = QMatrix::identity(rs.rank);
  while (!(w == id)) {
    int pick = -1;
    for (int i = 0; i < rs.rank && pick < 0; ++i)
      if (first_nonzero_negative(w.column(i))) pick = i;
    if (pick < 0) throw std::logic_error("reduced_word: no descent found");
    w = mat_mul(w, simple_reflection(rs, pick));
    collected.push_back(pick);
    if (collected.size() > static_cast<std::size_t>(rs.num_positive))
      throw std::logic_error("reduced_word: did not terminate");
  }
  std::reverse(collected.begin(), collected.end());
  if (static_cast<int>(collected.size()) != element(idx).length)
    throw std::logic_error("reduced_word: length mismatch");
  return collected;
}

DominantConjugation dominant_conjugate(const RootSystem& rs,
                                       const QVector& x) {
  if (static_cast<int>(x.size()) != rs.rank)
    throw std::invalid_argument("dominant_conjugate: dimension mismatch");
  DominantConjugation out;
  out.dominant = x;
  out.w = QMatrix::identity(rs.rank);
  int guard = rs.num_positive + 2;
  for (;;) {
    QVector gx = mat_vec(rs.gram, out.dominant);
    int pick = -1;
    for (int i = 0; i < rs.rank && pick < 0; ++i)
      if (gx[i] < 0) pick = i;
    if (pick < 0) break;
    if (--guard < 0)
      throw std::logic_error("dominant_conjugate: did not terminate");
    QMatrix s = simple_reflection(rs, pick);
    out.dominant = mat_vec(s, out.dominant);
    out.w = mat_mul(s, out.w);
    out.word.push_back(pick);
  }
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

bool weight_polytope_contains(const RootSystem& rs, const QVector& chi,
                              const QVector& lambda) {
  if (!is_strictly_dominant(rs, chi))
    throw std::invalid_argument(
        "weight_polytope_contains: chi must be strictly dominant");
  QVector plus = dominant_conjugate(rs, lambda).dominant;
  std::vector<QVector> simples;
  for (int i = 0; i < rs.rank; ++i) simples.push_back(rs.simple_root(i));
  return cone_member(qvec_sub(chi, plus), simples).inside;
}

}  // namespace flagstab
