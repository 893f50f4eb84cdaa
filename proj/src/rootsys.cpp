#include "flagstab/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace flagstab {
namespace {

int min_rank(char family) {
  switch (family) {
    case 'A': return 1;
    case 'B': return 2;
    case 'C': return 3;
    case 'D': return 4;
    case 'E': return 6;
    case 'F': return 4;
    case 'G': return 2;
    default: return -1;
  }
}

int max_rank(char family) {
  switch (family) {
    case 'E': return 8;
    case 'F': return 4;
    case 'G': return 2;
    default: return 1 << 20;
  }
}

std::vector<ComponentSpec> parse_type_spec(const std::string& spec,
                                           std::string* normalized) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : spec) {
    if (c == 'x' || c == 'X') {
      tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  tokens.push_back(cur);

  std::vector<ComponentSpec> comps;
  normalized->clear();
  int offset = 0;
  for (const std::string& tok : tokens) {
    if (tok.size() < 2)
      throw std::invalid_argument("bad type component '" + tok + "' in '" +
                                  spec + "'");
    char family =
        static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (family < 'A' || family > 'G')
      throw std::invalid_argument("unknown family letter in '" + tok + "'");
    for (size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("bad rank in type component '" + tok + "'");
    int r = std::stoi(tok.substr(1));
    if (r < min_rank(family) || r > max_rank(family))
      throw std::invalid_argument("rank " + std::to_string(r) +
                                  " out of range for family " +
                                  std::string(1, family));
    ComponentSpec cs;
    cs.family = family;
    cs.rank = r;
    cs.offset = offset;
    offset += r;
    comps.push_back(cs);
    if (!normalized->empty()) normalized->push_back('x');
    *normalized += family + std::to_string(r);
  }
  return comps;
}

// Inner products of the simple roots, long roots normalized to length^2 = 2.
QMatrix gram_block(char family, int n) {
  QMatrix g = QMatrix::zero(n, n);
  auto chain = [&](int i, int j, const Rat& v) {
    g.rows[i][j] = v;
    g.rows[j][i] = v;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i < n; ++i) g.rows[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) g.rows[i][i] = 2;
      g.rows[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) g.rows[i][i] = 1;
      g.rows[n - 1][n - 1] = 2;
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1, Rat(-1, 2));
      chain(n - 2, n - 1, -1);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g.rows[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1, -1);
      chain(n - 3, n - 1, -1);
      break;
    case 'E': {
      for (int i = 0; i < n; ++i) g.rows[i][i] = 2;
      chain(0, 2, -1);
      chain(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1, -1);
      break;
    }
    case 'F':
      g.rows[0][0] = 2;
      g.rows[1][1] = 2;
      g.rows[2][2] = 1;
      g.rows[3][3] = 1;
      chain(0, 1, -1);
      chain(1, 2, -1);
      chain(2, 3, Rat(-1, 2));
      break;
    case 'G':
      g.rows[0][0] = Rat(2, 3);
      g.rows[1][1] = 2;
      chain(0, 1, -1);
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return g;
}

int expected_root_count(char family, int n) {
  switch (family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
    default: return -1;
  }
}

Rat height_of(const QVector& v) {
  Rat h = 0;
  for (const Rat& c : v) h += c;
  return h;
}

// Columns of the map from simple-root to epsilon coordinates for one
// classical component.
QMatrix epsilon_block(char family, int n) {
  int dim = family == 'A' ? n + 1 : n;
  QMatrix e = QMatrix::zero(dim, n);
  for (int j = 0; j + 1 < n; ++j) {
    e.rows[j][j] = 1;
    e.rows[j + 1][j] = -1;
  }
  switch (family) {
    case 'A':
      e.rows[n - 1][n - 1] = 1;
      e.rows[n][n - 1] = -1;
      break;
    case 'B':
      e.rows[n - 1][n - 1] = 1;
      break;
    case 'C':
      e.rows[n - 1][n - 1] = 2;
      break;
    case 'D':
      e.rows[n - 2][n - 1] = 1;
      e.rows[n - 1][n - 1] = 1;
      break;
    default:
      throw std::logic_error("epsilon_block: not a classical family");
  }
  return e;
}

// The invariant form expressed in epsilon coordinates is the dot product
// scaled per component; C components carry 1/2.
Rat epsilon_form_scale(char family) {
  return family == 'C' ? Rat(1, 2) : Rat(1);
}

}  // namespace

std::string basis_name(WeightBasis basis) {
  switch (basis) {
    case WeightBasis::kSimpleRoot: return "simple";
    case WeightBasis::kFundamental: return "fundamental";
    case WeightBasis::kEpsilon: return "epsilon";
  }
  throw std::logic_error("basis_name: bad enum value");
}

WeightBasis basis_from_name(const std::string& name) {
  if (name == "simple") return WeightBasis::kSimpleRoot;
  if (name == "fundamental") return WeightBasis::kFundamental;
  if (name == "epsilon") return WeightBasis::kEpsilon;
  throw std::invalid_argument("unknown weight basis '" + name + "'");
}

const QVector& RootSystem::simple_root(int i) const {
  return simple_cache_.at(i);
}

int RootSystem::root_index(const QVector& v) const {
  for (size_t i = 0; i < all_roots.size(); ++i)
    if (all_roots[i] == v) return static_cast<int>(i);
  return -1;
}

RootSystem build_root_system(const std::string& type_spec) {
  RootSystem rs;
  rs.components = parse_type_spec(type_spec, &rs.type_spec);
  rs.rank = 0;
  for (const ComponentSpec& c : rs.components) rs.rank += c.rank;
  const int r = rs.rank;

  rs.gram = QMatrix::zero(r, r);
  for (const ComponentSpec& c : rs.components) {
    QMatrix blk = gram_block(c.family, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j)
        rs.gram.rows[c.offset + i][c.offset + j] = blk.rows[i][j];
  }
  rs.gram_inv = mat_inverse(rs.gram);

  rs.cartan = QMatrix::zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat c = 2 * rs.gram.rows[i][j] / rs.gram.rows[i][i];
      if (!rat_is_integer(c))
        throw std::logic_error("non-integral Cartan entry");
      rs.cartan.rows[i][j] = c;
    }

  // Close the simple roots under the simple reflections.
  std::set<QVector, QVectorLess> seen;
  std::queue<QVector> work;
  for (int i = 0; i < r; ++i) {
    QVector e = qvec_unit(r, i);
    seen.insert(e);
    work.push(e);
    rs.simple_cache_.push_back(e);
  }
  while (!work.empty()) {
    QVector v = work.front();
    work.pop();
    for (int i = 0; i < r; ++i) {
      QVector w = v;
      Rat pairing = 0;
      for (int j = 0; j < r; ++j) pairing += rs.cartan.rows[i][j] * v[j];
      w[i] -= pairing;
      if (seen.insert(w).second) work.push(w);
    }
  }

  int expected = 0;
  for (const ComponentSpec& c : rs.components)
    expected += expected_root_count(c.family, c.rank);
  if (static_cast<int>(seen.size()) != expected)
    throw std::logic_error("root closure produced wrong count for " +
                           rs.type_spec);

  std::vector<QVector> positives;
  for (const QVector& v : seen) {
    bool nonneg = true;
    for (const Rat& c : v)
      if (c < 0) nonneg = false;
    if (nonneg) positives.push_back(v);
  }
  if (static_cast<int>(positives.size()) * 2 != expected)
    throw std::logic_error("positive roots are not half of all roots");
  std::sort(positives.begin(), positives.end(),
            [](const QVector& a, const QVector& b) {
              Rat ha = height_of(a), hb = height_of(b);
              if (ha != hb) return ha < hb;
              return qvec_less(a, b);
            });
  rs.num_positive = static_cast<int>(positives.size());
  rs.all_roots = positives;
  for (const QVector& v : positives) rs.all_roots.push_back(qvec_neg(v));

  for (int i = 0; i < r; ++i) {
    QVector p = qvec_scale(rs.gram.rows[i][i] / 2, rs.gram_inv.column(i));
    rs.fundamental_weights.push_back(p);
  }

  rs.has_epsilon = true;
  for (const ComponentSpec& c : rs.components)
    if (c.family > 'D') rs.has_epsilon = false;
  if (rs.has_epsilon) {
    rs.epsilon_dim = 0;
    for (const ComponentSpec& c : rs.components)
      rs.epsilon_dim += c.family == 'A' ? c.rank + 1 : c.rank;
    rs.eps_of_simple = QMatrix::zero(rs.epsilon_dim, r);
    int row0 = 0;
    for (const ComponentSpec& c : rs.components) {
      QMatrix blk = epsilon_block(c.family, c.rank);
      for (int i = 0; i < static_cast<int>(blk.nrows()); ++i)
        for (int j = 0; j < c.rank; ++j)
          rs.eps_of_simple.rows[row0 + i][c.offset + j] = blk.rows[i][j];
      // The epsilon model must reproduce the Gram pairings.
      Rat s = epsilon_form_scale(c.family);
      for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j) {
          Rat dot = 0;
          for (int k = 0; k < static_cast<int>(blk.nrows()); ++k)
            dot += blk.rows[k][i] * blk.rows[k][j];
          Rat scaled = s * dot;
          if (scaled != rs.gram.rows[c.offset + i][c.offset + j])
            throw std::logic_error("epsilon model disagrees with Gram block");
        }
      row0 += static_cast<int>(blk.nrows());
    }
  }
  return rs;
}

Rat inner(const RootSystem& rs, const QVector& a, const QVector& b) {
  if (static_cast<int>(a.size()) != rs.rank ||
      static_cast<int>(b.size()) != rs.rank)
    throw std::invalid_argument("inner: dimension mismatch");
  return qvec_dot(a, mat_vec(rs.gram, b));
}

Rat norm2(const RootSystem& rs, const QVector& a) { return inner(rs, a, a); }

QVector fundamental_to_simple(const RootSystem& rs, const QVector& x) {
  if (static_cast<int>(x.size()) != rs.rank)
    throw std::invalid_argument("fundamental_to_simple: dimension mismatch");
  QVector out = qvec_zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    out = qvec_add(out, qvec_scale(x[i], rs.fundamental_weights[i]));
  return out;
}

QVector simple_to_fundamental(const RootSystem& rs, const QVector& x) {
  if (static_cast<int>(x.size()) != rs.rank)
    throw std::invalid_argument("simple_to_fundamental: dimension mismatch");
  QVector gx = mat_vec(rs.gram, x);
  QVector out = qvec_zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    out[i] = 2 * gx[i] / rs.gram.rows[i][i];
  return out;
}

QVector simple_to_epsilon(const RootSystem& rs, const QVector& x) {
  if (!rs.has_epsilon)
    throw std::invalid_argument(
        "epsilon coordinates are only defined for classical types");
  if (static_cast<int>(x.size()) != rs.rank)
    throw std::invalid_argument("simple_to_epsilon: dimension mismatch");
  return mat_vec(rs.eps_of_simple, x);
}

QVector epsilon_to_simple(const RootSystem& rs, const QVector& x) {
  if (!rs.has_epsilon)
    throw std::invalid_argument(
        "epsilon coordinates are only defined for classical types");
  if (static_cast<int>(x.size()) != rs.epsilon_dim)
    throw std::invalid_argument("epsilon_to_simple: expected " +
                                std::to_string(rs.epsilon_dim) +
                                " coordinates");
  QVector out = qvec_zero(rs.rank);
  int row0 = 0;
  for (const ComponentSpec& c : rs.components) {
    int dim = c.family == 'A' ? c.rank + 1 : c.rank;
    QVector y(x.begin() + row0, x.begin() + row0 + dim);
    if (c.family == 'A') {
      // Points of the A model live in the traceless hyperplane; shifts
      // along (1,...,1) represent the same weight.
      Rat mean = 0;
      for (const Rat& v : y) mean += v;
      mean /= dim;
      for (Rat& v : y) v -= mean;
    }
    QMatrix blk = epsilon_block(c.family, c.rank);
    auto sol = solve(blk, y);
    if (!sol)
      throw std::invalid_argument("epsilon coordinates do not lie in the "
                                  "weight space of component " +
                                  std::string(1, c.family) +
                                  std::to_string(c.rank));
    for (int j = 0; j < c.rank; ++j) out[c.offset + j] = (*sol)[j];
    row0 += dim;
  }
  return out;
}

QVector to_simple(const RootSystem& rs, const Weight& w) {
  switch (w.basis) {
    case WeightBasis::kSimpleRoot:
      if (static_cast<int>(w.coords.size()) != rs.rank)
        throw std::invalid_argument("weight: dimension mismatch");
      return w.coords;
    case WeightBasis::kFundamental:
      return fundamental_to_simple(rs, w.coords);
    case WeightBasis::kEpsilon:
      return epsilon_to_simple(rs, w.coords);
  }
  throw std::logic_error("to_simple: bad enum value");
}

Weight convert(const RootSystem& rs, const Weight& w, WeightBasis target) {
  QVector simple = to_simple(rs, w);
  Weight out;
  out.basis = target;
  switch (target) {
    case WeightBasis::kSimpleRoot: out.coords = simple; break;
    case WeightBasis::kFundamental:
      out.coords = simple_to_fundamental(rs, simple);
      break;
    case WeightBasis::kEpsilon:
      out.coords = simple_to_epsilon(rs, simple);
      break;
  }
  return out;
}

bool is_dominant(const RootSystem& rs, const QVector& x) {
  QVector gx = mat_vec(rs.gram, x);
  for (const Rat& v : gx)
    if (v < 0) return false;
  return true;
}

bool is_strictly_dominant(const RootSystem& rs, const QVector& x) {
  QVector gx = mat_vec(rs.gram, x);
  for (const Rat& v : gx)
    if (v <= 0) return false;
  return true;
}

std::string identify_type(const RootSystem& rs,
                          const std::vector<QVector>& base) {
  const int m = static_cast<int>(base.size());
  if (m == 0) return "0";
  QMatrix c = QMatrix::zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rat v = 2 * inner(rs, base[i], base[j]) / norm2(rs, base[i]);
      if (!rat_is_integer(v))
        throw std::invalid_argument("identify_type: base is not the simple "
                                    "system of a root subsystem");
      c.rows[i][j] = v;
    }

  // Connected components of the bond graph.
  std::vector<int> comp(m, -1);
  int num_comp = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = num_comp;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v = 0; v < m; ++v)
        if (v != u && comp[v] < 0 && c.rows[u][v] != 0) {
          comp[v] = num_comp;
          bfs.push(v);
        }
    }
    ++num_comp;
  }

  std::vector<std::pair<char, int>> labels;
  for (int k = 0; k < num_comp; ++k) {
    std::vector<int> nodes;
    for (int i = 0; i < m; ++i)
      if (comp[i] == k) nodes.push_back(i);
    const int n = static_cast<int>(nodes.size());
    if (n == 1) {
      labels.emplace_back('A', 1);
      continue;
    }
    bool triple = false, dbl = false, branch = false;
    std::vector<int> degree(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b || c.rows[nodes[a]][nodes[b]] == 0) continue;
        ++degree[a];
        Rat bond = c.rows[nodes[a]][nodes[b]] * c.rows[nodes[b]][nodes[a]];
        if (bond == 3) triple = true;
        if (bond == 2) dbl = true;
      }
      if (degree[a] > 2) branch = true;
    }
    if (triple) {
      if (n != 2) throw std::logic_error("identify_type: bad triple bond");
      labels.emplace_back('G', 2);
    } else if (dbl) {
      if (branch) throw std::logic_error("identify_type: branched double bond");
      if (n == 2) {
        labels.emplace_back('B', 2);
      } else {
        Rat minn = norm2(rs, base[nodes[0]]), maxn = minn;
        for (int a = 1; a < n; ++a) {
          Rat v = norm2(rs, base[nodes[a]]);
          if (v < minn) minn = v;
          if (v > maxn) maxn = v;
        }
        int num_short = 0, num_long = 0;
        for (int a = 0; a < n; ++a) {
          Rat v = norm2(rs, base[nodes[a]]);
          if (v == minn) ++num_short;
          if (v == maxn) ++num_long;
        }
        if (num_short == 1)
          labels.emplace_back('B', n);
        else if (num_long == 1)
          labels.emplace_back('C', n);
        else if (n == 4 && num_short == 2)
          labels.emplace_back('F', 4);
        else
          throw std::logic_error("identify_type: unrecognized doubly laced "
                                 "diagram");
      }
    } else if (!branch) {
      labels.emplace_back('A', n);
    } else {
      int center = -1;
      for (int a = 0; a < n; ++a)
        if (degree[a] == 3) {
          if (center >= 0)
            throw std::logic_error("identify_type: two branch nodes");
          center = a;
        }
      if (center < 0) throw std::logic_error("identify_type: bad branching");
      // Arm lengths away from the branch node.
      std::vector<int> arms;
      for (int b = 0; b < n; ++b) {
        if (b == center || c.rows[nodes[center]][nodes[b]] == 0) continue;
        int len = 1, prev = center, cur = b;
        for (;;) {
          int nxt = -1;
          for (int t = 0; t < n; ++t)
            if (t != prev && t != cur && c.rows[nodes[cur]][nodes[t]] != 0)
              nxt = t;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms.size() != 3)
        throw std::logic_error("identify_type: bad branch arms");
      if (arms[0] == 1 && arms[1] == 1)
        labels.emplace_back('D', n);
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        labels.emplace_back('E', n);
      else
        throw std::logic_error("identify_type: unrecognized branched diagram");
    }
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& [fam, rk] : labels) {
    if (!out.empty()) out += "+";
    out += fam + std::to_string(rk);
  }
  return out;
}

}  // namespace flagstab
