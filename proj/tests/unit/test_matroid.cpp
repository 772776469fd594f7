#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "algmat/matroid.hpp"
#include "examples.hpp"

using namespace algmat;

namespace {

Subset set1(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int i : one_based) s |= Subset{1} << (i - 1);
  return s;
}

// Oracle: 3x3 determinant by the rule of Sarrus.
Scalar det3(const FieldMatrix& m, std::size_t a, std::size_t b, std::size_t c) {
  auto e = [&](std::size_t i, std::size_t j) { return m.rows[i][j == 0 ? a : j == 1 ? b : c]; };
  return e(0, 0) * e(1, 1) * e(2, 2) + e(0, 1) * e(1, 2) * e(2, 0) + e(0, 2) * e(1, 0) * e(2, 1) -
         e(0, 2) * e(1, 1) * e(2, 0) - e(0, 0) * e(1, 2) * e(2, 1) - e(0, 1) * e(1, 0) * e(2, 2);
}

// Oracle: minimal dependent sets by brute force over all subsets.
std::vector<Subset> brute_circuits(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 1; s < (Subset{1} << m.size()); ++s) {
    if (m.is_independent(s)) continue;
    bool minimal = true;
    for (auto i : subset_indices(s)) minimal = minimal && m.is_independent(s & ~(Subset{1} << i));
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

}  // namespace

TEST_CASE("subset ordering is size then lexicographic") {
  std::vector<Subset> v = {set1({2, 3}), set1({1}), set1({1, 4}), set1({1, 2}), 0};
  std::sort(v.begin(), v.end(), subset_less);
  CHECK(v == std::vector<Subset>{0, set1({1}), set1({1, 2}), set1({1, 4}), set1({2, 3})});
  CHECK(subset_indices(set1({1, 3})) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("matroid construction validates bases") {
  CHECK_THROWS_AS(Matroid({"a", "b"}, {}), Error);
  try {
    Matroid({"a", "b", "c"}, {set1({1}), set1({2, 3})});
    FAIL("expected NotAMatroid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAMatroid);
  }
  Matroid u = uniform_matroid(2, 3);
  CHECK(u.circuits() == std::vector<Subset>{set1({1, 2, 3})});
  CHECK(check_axioms(u));
}

TEST_CASE("algebraic independence certificates") {
  auto det = examples::det22();
  auto r1 = is_independent_algebraic(det, set1({1, 2, 3}));
  CHECK(r1.independent);
  CHECK_FALSE(r1.witness.has_value());
  auto r2 = is_independent_algebraic(det, set1({1, 2, 3, 4}));
  CHECK_FALSE(r2.independent);
  REQUIRE(r2.witness.has_value());
  CHECK(ideal_membership(*r2.witness, det));
  CHECK(support(*r2.witness).size() == 4);
  CHECK(is_independent_algebraic(examples::nonpappus(), set1({6, 7, 8})).independent);
  try {
    (void)is_independent_algebraic(det.with_primality(false), 1);
    FAIL("expected PrimalityNotAsserted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrimalityNotAsserted);
  }
}

TEST_CASE("algebraic matroids of the worked examples") {
  Matroid det = algebraic_matroid(examples::det22());
  CHECK(matroid_equal(det, uniform_matroid(3, 4)));
  CHECK(det.labels() == std::vector<std::string>{"x00", "x01", "x10", "x11"});
  CHECK(det.circuits() == std::vector<Subset>{set1({1, 2, 3, 4})});

  Ring r(Field::rationals(), {"a", "b", "c"});
  Matroid free = algebraic_matroid(IdealPresentation(r, {}, true));
  CHECK(free.bases() == std::vector<Subset>{set1({1, 2, 3})});
  CHECK(free.circuits().empty());

  // Non-Pappus: the brute-force oracle decides every triple by its own
  // elimination ideal.
  auto np = examples::nonpappus();
  std::set<Subset> lines;
  for (const auto& l : examples::nonpappus_lines()) lines.insert(set1({l[0], l[1], l[2]}));
  std::set<Subset> oracle_dependent;
  for (Subset s = 0; s < (Subset{1} << 9); ++s) {
    if (std::popcount(s) != 3) continue;
    if (!elimination_ideal(np, subset_indices(s)).generators().empty()) oracle_dependent.insert(s);
  }
  CHECK(oracle_dependent == lines);
  Matroid m = algebraic_matroid(np);
  CHECK(m.rank() == 3);
  CHECK(m.is_basis(set1({7, 8, 9})));
  std::set<Subset> triples;
  for (Subset c : m.circuits())
    if (std::popcount(c) == 3) triples.insert(c);
  CHECK(triples == lines);
  CHECK(m.circuits() == brute_circuits(m));
  CHECK(check_axioms(m));
}

TEST_CASE("linear matroids") {
  Field q = Field::rationals();
  FieldMatrix id(q, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.rows[i][i] = q.one();
  CHECK(linear_matroid(id).bases() == std::vector<Subset>{set1({1, 2, 3})});

  FieldMatrix az(q, 3, 4);
  const int vals[3][4] = {{1, 2, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) az.rows[i][j] = q.from_int(vals[i][j]);
  CHECK(matroid_equal(linear_matroid(az), uniform_matroid(3, 4)));

  FieldMatrix a = examples::perles_matrix();
  Matroid pm = linear_matroid(a);
  std::set<Subset> oracle;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j)
      for (std::size_t k = j + 1; k < 9; ++k)
        if (det3(a, i, j, k).is_zero()) oracle.insert((Subset{1} << i) | (Subset{1} << j) | (Subset{1} << k));
  std::set<Subset> dependent;
  for (Subset c : pm.circuits())
    if (std::popcount(c) <= 3) dependent.insert(c);
  CHECK(dependent == oracle);
  CHECK(pm.rank() == 3);
  CHECK(check_axioms(pm));

  // Row operations over k(P) leave the matroid unchanged.
  auto det = examples::det22();
  QContext ctx(det);
  QMatrix m(ctx, 2, 4);
  const char* e[2][4] = {{"x00", "x01", "0", "1"}, {"x10", "x11", "1", "0"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = QElem(ctx, parse_poly(e[i][j], det.ring()));
  Matroid before = linear_matroid(m);
  QMatrix m2 = m;
  for (int j = 0; j < 4; ++j) m2.at(1, j) = m.at(1, j) + m.at(0, j) * QElem(ctx, parse_poly("x11", det.ring()));
  CHECK(matroid_equal(before, linear_matroid(m2)));
  // Columns 1 and 2 are parallel modulo the determinant.
  CHECK_FALSE(before.is_independent(set1({1, 2})));
}

TEST_CASE("equality and isomorphism") {
  CHECK_FALSE(matroid_equal(uniform_matroid(3, 4), uniform_matroid(4, 4)));
  CHECK_THROWS_AS(matroid_equal(uniform_matroid(2, 3), uniform_matroid(2, 4)), Error);
  CHECK_FALSE(matroid_isomorphic(uniform_matroid(3, 4), uniform_matroid(2, 4)).has_value());
  Matroid np = algebraic_matroid(examples::nonpappus());
  auto id = matroid_isomorphic(np, np);
  REQUIRE(id.has_value());
  // Relabel by a random permutation; the search must recover a bijection.
  std::mt19937_64 rng(41);
  std::vector<std::size_t> perm(9);
  for (std::size_t i = 0; i < 9; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Subset> bases;
  for (Subset b : np.bases()) {
    Subset img = 0;
    for (auto i : subset_indices(b)) img |= Subset{1} << perm[i];
    bases.push_back(img);
  }
  Matroid shuffled(np.labels(), bases);
  auto found = matroid_isomorphic(np, shuffled);
  REQUIRE(found.has_value());
  for (Subset b : np.bases()) {
    Subset img = 0;
    for (auto i : subset_indices(b)) img |= Subset{1} << (*found)[i];
    CHECK(shuffled.is_basis(img));
  }
  // Non-Pappus and Perles share rank and size but are not isomorphic.
  CHECK_FALSE(matroid_isomorphic(np, linear_matroid(examples::perles_matrix())).has_value());
  CHECK_THROWS_AS(matroid_isomorphic(uniform_matroid(2, 13), uniform_matroid(2, 13)), Error);
}

TEST_CASE("ground-set cap") {
  Ring r(Field::rationals(), examples::xs(17));
  try {
    (void)algebraic_matroid(IdealPresentation(r, {}, true));
    FAIL("expected GroundSetTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroundSetTooLarge);
  }
}

TEST_CASE("parallel search gives the same matroid") {
  SearchOptions opts;
  opts.jobs = 4;
  CHECK(matroid_equal(algebraic_matroid(examples::perles_prime(), opts), algebraic_matroid(examples::perles_prime())));
}

TEST_CASE("random linear matroids satisfy the axioms") {
  std::mt19937_64 rng(43);
  Field f = Field::prime(3);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t rows = 1 + rng() % 3, cols = 2 + rng() % 6;
    FieldMatrix m(f, rows, cols);
    for (auto& r : m.rows)
      for (auto& x : r) x = f.from_int(static_cast<long>(rng() % 3));
    Matroid mat = linear_matroid(m);
    CHECK(mat.rank() == rank(m));
    CHECK(check_axioms(mat));
    CHECK(mat.circuits() == brute_circuits(mat));
    for (Subset s = 0; s < (Subset{1} << cols); ++s)
      CHECK(mat.rank_of(s) == rank(m.select_columns(subset_indices(s))));
  }
}
