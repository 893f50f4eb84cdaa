#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "flagstab/rootsys.hpp"

using namespace flagstab;

namespace {

QVector qv(std::vector<long> v) {
  QVector out;
  for (long x : v) out.push_back(Rat(x));
  return out;
}

// Small deterministic generator for exact rational test vectors.
struct TestRng {
  unsigned long state = 12345;
  long next_int(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % (hi - lo + 1));
  }
  Rat next_rat() {
    long den = next_int(1, 3);
    Rat r(next_int(-5, 5), den);
    r.canonicalize();
    return r;
  }
  QVector next_vec(int n) {
    QVector v;
    for (int i = 0; i < n; ++i) v.push_back(next_rat());
    return v;
  }
};

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("root counts match the classification") {
  struct Row {
    const char* spec;
    int rank;
    int positives;
  };
  const Row rows[] = {
      {"A1", 1, 1},  {"A2", 2, 3},   {"A5", 5, 15},  {"B2", 2, 4},
      {"B4", 4, 16}, {"C3", 3, 9},   {"D4", 4, 12},  {"E6", 6, 36},
      {"E7", 7, 63}, {"E8", 8, 120}, {"F4", 4, 24},  {"G2", 2, 6},
      {"A2xG2", 4, 9},
  };
  for (const Row& row : rows) {
    CAPTURE(row.spec);
    RootSystem rs = build_root_system(row.spec);
    CHECK(rs.rank == row.rank);
    CHECK(rs.num_positive == row.positives);
    CHECK(rs.all_roots.size() == static_cast<size_t>(2 * row.positives));
  }
}

TEST_CASE("type spec parsing rejects invalid input") {
  CHECK_THROWS_AS(build_root_system("B1"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("C2"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("D3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("E5"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("E9"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("F3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("G3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("H3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A0"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(""), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A2x"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A2.5"), std::invalid_argument);
}

TEST_CASE("type spec is normalized") {
  CHECK(build_root_system("b4").type_spec == "B4");
  CHECK(build_root_system("a2Xg2").type_spec == "A2xG2");
  CHECK(build_root_system(" B2 ").type_spec == "B2");
  RootSystem rs = build_root_system("A1xB2xA1");
  CHECK(rs.rank == 4);
  CHECK(rs.components.size() == 3);
  CHECK(rs.components[1].offset == 1);
  CHECK(rs.components[2].offset == 3);
}

TEST_CASE("positive roots are ordered by height then lexicographically") {
  RootSystem rs = build_root_system("A2");
  CHECK(rs.positive_root(0) == qv({0, 1}));
  CHECK(rs.positive_root(1) == qv({1, 0}));
  CHECK(rs.positive_root(2) == qv({1, 1}));
  for (int i = 0; i < rs.num_positive; ++i)
    CHECK(rs.all_roots[rs.negative_of(i)] == qvec_neg(rs.positive_root(i)));
  CHECK(rs.root_index(qv({1, 1})) == 2);
  CHECK(rs.root_index(qv({-1, 0})) >= rs.num_positive);
  CHECK_FALSE(rs.is_root(qv({2, 0})));
  CHECK_FALSE(rs.is_root(qv({0, 0})));
}

TEST_CASE("root lengths follow the long-root normalization") {
  RootSystem b4 = build_root_system("B4");
  CHECK(norm2(b4, b4.simple_root(0)) == Rat(2));
  CHECK(norm2(b4, b4.simple_root(3)) == Rat(1));
  RootSystem g2 = build_root_system("G2");
  CHECK(norm2(g2, g2.simple_root(0)) == Rat(2, 3));
  CHECK(norm2(g2, g2.simple_root(1)) == Rat(2));
  CHECK(g2.cartan.rows[0][1] == Rat(-3));
  CHECK(g2.cartan.rows[1][0] == Rat(-1));
  // Highest roots are long.
  CHECK(g2.positive_root(5) == qv({3, 2}));
  CHECK(norm2(g2, g2.positive_root(5)) == Rat(2));
  CHECK(b4.positive_root(15) == qv({1, 2, 2, 2}));
  CHECK(norm2(b4, b4.positive_root(15)) == Rat(2));
}

TEST_CASE("fundamental weights pair dually with simple roots") {
  for (const char* spec : {"A2", "A5", "B4", "C3", "D4", "F4", "G2", "E6",
                           "A2xG2", "A1xB2xA1"}) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        Rat expected = i == j ? rs.gram.rows[j][j] / 2 : Rat(0);
        CHECK(inner(rs, rs.fundamental_weights[i], rs.simple_root(j)) ==
              expected);
      }
  }
}

TEST_CASE("fundamental weight norms") {
  RootSystem a2 = build_root_system("A2");
  CHECK(norm2(a2, a2.fundamental_weights[0]) == Rat(2, 3));
  CHECK(a2.fundamental_weights[0] == QVector{Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("epsilon coordinates of roots and fundamental weights") {
  RootSystem b4 = build_root_system("B4");
  CHECK(simple_to_epsilon(b4, b4.fundamental_weights[0]) == qv({1, 0, 0, 0}));
  CHECK(simple_to_epsilon(b4, b4.fundamental_weights[1]) == qv({1, 1, 0, 0}));
  CHECK(simple_to_epsilon(b4, b4.fundamental_weights[2]) == qv({1, 1, 1, 0}));
  CHECK(simple_to_epsilon(b4, b4.fundamental_weights[3]) ==
        QVector{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(simple_to_epsilon(b4, b4.positive_root(15)) == qv({1, 1, 0, 0}));

  RootSystem c3 = build_root_system("C3");
  CHECK(simple_to_epsilon(c3, c3.simple_root(2)) == qv({0, 0, 2}));
  RootSystem d4 = build_root_system("D4");
  CHECK(simple_to_epsilon(d4, d4.simple_root(3)) == qv({0, 0, 1, 1}));
  RootSystem b3 = build_root_system("B3");
  CHECK(simple_to_epsilon(b3, b3.simple_root(2)) == qv({0, 0, 1}));
  RootSystem a2 = build_root_system("A2");
  CHECK(simple_to_epsilon(a2, a2.simple_root(0)) == qv({1, -1, 0}));
  CHECK(simple_to_epsilon(a2, a2.fundamental_weights[0]) ==
        QVector{Rat(2, 3), Rat(-1, 3), Rat(-1, 3)});
}

TEST_CASE("epsilon round trips") {
  TestRng rng;
  for (const char* spec : {"A3", "B3", "C3", "D4", "A2xB2"}) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    for (int rep = 0; rep < 20; ++rep) {
      QVector x = rng.next_vec(rs.rank);
      QVector eps = simple_to_epsilon(rs, x);
      CHECK(epsilon_to_simple(rs, eps) == x);
    }
  }
  // A components identify epsilon vectors that differ by the all-ones shift.
  RootSystem a3 = build_root_system("A3");
  QVector y = {Rat(3), Rat(1), Rat(0), Rat(0)};
  QVector shifted = y;
  for (Rat& v : shifted) v += Rat(7, 2);
  CHECK(epsilon_to_simple(a3, y) == epsilon_to_simple(a3, shifted));
}

TEST_CASE("epsilon coordinates are rejected for exceptional types") {
  RootSystem g2 = build_root_system("G2");
  CHECK_THROWS_AS(simple_to_epsilon(g2, qv({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_to_simple(g2, qv({1, 0})), std::invalid_argument);
  RootSystem b2 = build_root_system("B2");
  CHECK_THROWS_AS(epsilon_to_simple(b2, qv({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("basis conversions round trip") {
  TestRng rng;
  for (const char* spec : {"A2", "B4", "G2", "A2xG2"}) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    for (int rep = 0; rep < 10; ++rep) {
      Weight w;
      w.basis = WeightBasis::kFundamental;
      w.coords = rng.next_vec(rs.rank);
      Weight s = convert(rs, w, WeightBasis::kSimpleRoot);
      Weight back = convert(rs, s, WeightBasis::kFundamental);
      CHECK(back.coords == w.coords);
    }
  }
  RootSystem a2 = build_root_system("A2");
  Weight pi1;
  pi1.basis = WeightBasis::kFundamental;
  pi1.coords = qv({1, 0});
  CHECK(to_simple(a2, pi1) == QVector{Rat(2, 3), Rat(1, 3)});
  Weight bad;
  bad.basis = WeightBasis::kFundamental;
  bad.coords = qv({1});
  CHECK_THROWS_AS(to_simple(a2, bad), std::invalid_argument);
}

TEST_CASE("dominance tests") {
  RootSystem b4 = build_root_system("B4");
  QVector rho = fundamental_to_simple(b4, qv({1, 1, 1, 1}));
  CHECK(is_dominant(b4, rho));
  CHECK(is_strictly_dominant(b4, rho));
  QVector highest = b4.positive_root(15);
  CHECK(is_dominant(b4, highest));
  CHECK_FALSE(is_strictly_dominant(b4, highest));
  CHECK_FALSE(is_dominant(b4, qvec_neg(rho)));
}

TEST_CASE("basis names round trip") {
  for (WeightBasis b : {WeightBasis::kSimpleRoot, WeightBasis::kFundamental,
                        WeightBasis::kEpsilon})
    CHECK(basis_from_name(basis_name(b)) == b);
  CHECK_THROWS_AS(basis_from_name("junk"), std::invalid_argument);
}

TEST_CASE("diagram recognition on full simple systems") {
  for (const char* spec : {"A1", "A4", "B2", "B4", "C3", "C5", "D4", "D5",
                           "E6", "E7", "E8", "F4", "G2"}) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    std::vector<QVector> base;
    for (int i = 0; i < rs.rank; ++i) base.push_back(rs.simple_root(i));
    CHECK(identify_type(rs, base) == std::string(spec));
  }
  RootSystem prod = build_root_system("A2xG2");
  std::vector<QVector> base;
  for (int i = 0; i < prod.rank; ++i) base.push_back(prod.simple_root(i));
  CHECK(identify_type(prod, base) == "A2+G2");
}

TEST_CASE("diagram recognition on subsystem bases") {
  RootSystem b4 = build_root_system("B4");
  CHECK(identify_type(b4, {b4.simple_root(0), b4.simple_root(2),
                           b4.simple_root(3)}) == "A1+B2");
  CHECK(identify_type(b4, {b4.simple_root(1), b4.simple_root(2)}) == "A2");
  CHECK(identify_type(b4, {b4.simple_root(2), b4.simple_root(3)}) == "B2");
  RootSystem c3 = build_root_system("C3");
  CHECK(identify_type(c3, {c3.simple_root(1), c3.simple_root(2)}) == "B2");
  RootSystem f4 = build_root_system("F4");
  CHECK(identify_type(f4, {f4.simple_root(1), f4.simple_root(2)}) == "B2");
  RootSystem e8 = build_root_system("E8");
  std::vector<QVector> tail;
  for (int i = 1; i < 8; ++i) tail.push_back(e8.simple_root(i));
  CHECK(identify_type(e8, tail) == "D7");
  RootSystem e7 = build_root_system("E7");
  std::vector<QVector> chain;
  for (int i : {0, 2, 3, 4, 5, 6}) chain.push_back(e7.simple_root(i));
  CHECK(identify_type(e7, chain) == "A6");
  CHECK(identify_type(b4, {}) == "0");
}

}  // TEST_SUITE
