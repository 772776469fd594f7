// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Exact checks throughout; the only tolerances are the pinned constants below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "algmat/construct.hpp"
#include "algmat/idealfile.hpp"
#include "examples.hpp"

using namespace algmat;

namespace {

// Pinned tolerances.
constexpr double kBudget1 = 1.0, kBudget2 = 60.0, kBudget3 = 60.0, kBudget4 = 120.0, kBudget5 = 60.0,
                 kBudget6 = 10.0, kBudget7 = 300.0;  // seconds
constexpr int kSpecSeeds = 20;
constexpr int kSpecRequired = 18;
constexpr std::uint64_t kSpecBound = 100;
constexpr int kPerlesCandidates = 50;
constexpr std::uint64_t kPerlesSeed = 2024;
constexpr std::size_t kBruteForceAxiomsMax = 10;

std::vector<Matroid> g_matroids;  // everything produced, for criterion 7
std::vector<IdealPresentation> g_ideals;
std::vector<DifferentialRep> g_reps;

Matroid keep(Matroid m) {
  g_matroids.push_back(m);
  return m;
}

DifferentialRep keep(DifferentialRep d) {
  g_matroids.push_back(d.diff_matroid);
  g_reps.push_back(d);
  return d;
}

IdealFile load(const std::string& rel) {
  std::ifstream in(std::filesystem::path(ALGMAT_FIXTURE_DIR) / rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

Subset set1(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int i : one_based) s |= Subset{1} << (i - 1);
  return s;
}

struct Checks {
  std::vector<std::string> failed;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

int g_failures = 0;

void criterion(int id, const char* title, double budget, const std::function<void(Checks&)>& body) {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failed.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char budget_text[64];
  std::snprintf(budget_text, sizeof budget_text, "runtime %.2fs exceeds %.0fs", secs, budget);
  c.expect(secs < budget, budget_text);
  const bool ok = c.failed.empty();
  if (!ok) ++g_failures;
  std::string detail;
  for (const auto& f : c.failed) detail += (detail.empty() ? "" : "; ") + f;
  for (const auto& n : c.notes) detail += (detail.empty() ? "" : "; ") + n;
  std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", id, ok ? "PASS" : "FAIL", title, secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
}

QMatrix qmatrix(const QContext& ctx, const std::vector<std::vector<const char*>>& rows) {
  QMatrix m(ctx, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const std::string e = rows[i][j];
      const auto slash = e.find('/');
      if (slash == std::string::npos) {
        m.at(i, j) = QElem(ctx, parse_poly(e, ctx.ring()));
      } else {
        m.at(i, j) = QElem(ctx, parse_poly(e.substr(0, slash), ctx.ring()), parse_poly(e.substr(slash + 1), ctx.ring()));
      }
    }
  return m;
}

FieldMatrix rational_matrix(const std::vector<std::vector<long>>& rows) {
  const Field q = Field::rationals();
  FieldMatrix m(q, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.rows[i][j] = q.from_int(rows[i][j]);
  return m;
}

std::vector<Scalar> rationals(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Scalar> out;
  for (auto [n, d] : v) out.push_back(Field::rationals().from_rational(mpq_class(n, d)));
  return out;
}

std::string matrix_text(const FieldMatrix& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    s += i ? ",(" : "(";
    for (std::size_t j = 0; j < m.cols; ++j) s += (j ? "," : "") + m.rows[i][j].to_string();
    s += ")";
  }
  return s + ")";
}

// Conjugation t -> -1 - t on QQ[t]/(t^2+t-1).
Scalar conjugate(const Scalar& a) {
  const auto c = a.coordinates();
  return a.field().from_coordinates({c[0] - c[1], -c[1]});
}

// ---------------------------------------------------------------------------

void determinantal(Checks& c) {
  const IdealFile f = load("det22.ideal");
  const IdealPresentation p = f.ideal();
  g_ideals.push_back(p);
  c.expect(matroid_equal(keep(algebraic_matroid(p)), uniform_matroid(3, 4)), "M(P) != U(3,4)");

  const DifferentialRep d = keep(differential_matroid(p));
  const QMatrix expected_j = qmatrix(d.ctx, {{"x11", "-x10", "-x01", "x00"}});
  bool j_ok = d.jacobian.rows() == 1;
  for (std::size_t k = 0; j_ok && k < 4; ++k) j_ok = d.jacobian.at(0, k) == expected_j.at(0, k);
  c.expect(j_ok, "Jacobian row differs from (x11, -x10, -x01, x00)");

  // The matrix A as printed.
  const QMatrix printed_a =
      qmatrix(d.ctx, {{"1", "x11/x10", "0", "0"}, {"1", "0", "x11/x10", "0"}, {"1", "0", "0", "-x11/x00"}});
  const bool printed_span = same_row_space(d.rep, printed_a);
  c.expect(printed_span, "row span of the printed A differs from the kernel of J (printed row 2 has J.a != 0)");
  // Informational: the same test against the consistent row 2 = (1, 0, x11/x01, 0).
  const QMatrix corrected_a =
      qmatrix(d.ctx, {{"1", "x11/x10", "0", "0"}, {"1", "0", "x11/x01", "0"}, {"1", "0", "0", "-x11/x00"}});
  c.notes.push_back(std::string("span test with corrected row 2: ") +
                    (same_row_space(d.rep, corrected_a) ? "equal" : "different"));

  const auto z = rationals({{1, 6}, {1, 6}, {1, 3}, {1, 3}});
  const FieldMatrix az = specialize(d, z);
  const FieldMatrix printed_az = rational_matrix({{1, 2, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, -1}});
  const FieldMatrix corrected_az = evaluate_matrix(corrected_a, z);
  c.expect(az == printed_az, "A_z = " + matrix_text(az) + " is not the printed " + matrix_text(printed_az) +
                                 " (no kernel basis of J_z can equal it)");
  c.notes.push_back("A_z spans the same space as corrected A at z: " +
                    std::string(same_row_space(az, corrected_az) ? "yes" : "no"));
  c.expect(matroid_equal(keep(linear_matroid(printed_az)), uniform_matroid(3, 4)), "M(printed A_z) != U(3,4)");
  c.expect(matroid_equal(keep(linear_matroid(az)), uniform_matroid(3, 4)), "M(A_z) != U(3,4)");
}

void perles(Checks& c) {
  const FieldMatrix a = examples::perles_matrix();
  const Field k = a.field;

  // Linear relations on the row space: the kernel of A, lifted to QQ[x, t].
  const IdealFile aux_file = load("perles_prime.ideal");
  const Ring& big = aux_file.ring;
  std::vector<Polynomial> gens;
  for (const auto& v : kernel_basis(a).rows) {
    Polynomial g = Polynomial(big);
    for (std::size_t j = 0; j < 9; ++j)
      g = g + parse_poly("(" + v[j].to_string() + ")*x" + std::to_string(j + 1), big);
    gens.push_back(g);
  }
  gens.push_back(parse_poly("t^2 + t - 1", big));
  const IdealPresentation recomputed(big, gens, true);
  c.expect(ideal_equal(recomputed, aux_file.ideal()), "recomputed P' differs from the fixture's corrected P'");

  const IdealPresentation eliminated =
      elimination_ideal(recomputed, std::vector<std::string>{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"})
          .with_primality(true);
  const IdealPresentation printed = load("perles_eliminated.ideal").ideal();
  g_ideals.push_back(eliminated);
  g_ideals.push_back(printed);
  if (!ideal_equal(eliminated, printed)) {
    auto ge = eliminated.groebner(TermOrder::grevlex(), {});
    auto gp = printed.groebner(TermOrder::grevlex(), {});
    std::string diff;
    for (const auto& f : printed.generators())
      if (!ge->contains(f)) diff += " printed " + f.to_string() + " not in elimination;";
    for (const auto& f : eliminated.generators())
      if (!gp->contains(f)) diff += " computed " + f.to_string() + " not in printed;";
    diff.pop_back();
    c.failed.push_back("eliminating t does not give the printed 8-generator ideal:" + diff);
  }

  const Matroid alg = keep(algebraic_matroid(eliminated));
  const Matroid lin = keep(linear_matroid(a));
  c.expect(alg.size() == 9 && alg.rank() == 3, "M(P) is not rank 3 on 9 elements");
  c.expect(matroid_isomorphic(alg, lin).has_value(), "M(P) not isomorphic to M(A)");

  // Rational points of V(P) lie on the row space of A and of its conjugate.
  FieldMatrix stacked(k, 9, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      stacked.rows[j][i] = a.rows[i][j];
      stacked.rows[j][i + 3] = -conjugate(a.rows[i][j]);
    }
  const auto ker = kernel_basis(stacked).rows;
  c.expect(ker.size() == 1, "row space of A meets its conjugate in dimension " + std::to_string(ker.size()));
  std::vector<Scalar> x(9, k.zero());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 9; ++j) x[j] += ker[0][i] * a.rows[i][j];
  std::size_t lead = 0;
  while (lead < 9 && x[lead].is_zero()) ++lead;
  std::vector<Scalar> rational_point;
  for (std::size_t j = 0; j < 9; ++j) {
    const Scalar v = x[j] / x[lead];
    c.expect(v.in_base_field(), "intersection point is not rational");
    rational_point.push_back(v.coordinates()[0]);
  }

  std::vector<std::vector<Scalar>> candidates;
  const Field q = Field::rationals();
  candidates.push_back(std::vector<Scalar>(9, q.zero()));
  std::mt19937_64 rng(kPerlesSeed);
  while (candidates.size() < static_cast<std::size_t>(kPerlesCandidates)) {
    const long num = static_cast<long>(rng() % 201) - 100;
    const long den = static_cast<long>(rng() % 100) + 1;
    if (num == 0) continue;
    const Scalar r = q.from_rational(mpq_class(num, den));
    std::vector<Scalar> pt;
    for (const auto& v : rational_point) pt.push_back(r * v);
    candidates.push_back(pt);
  }
  const std::pair<const char*, const IdealPresentation*> targets[] = {{"eliminated", &eliminated},
                                                                      {"printed", &printed}};
  for (const auto& [name, ideal] : targets) {
    bool all_on = true;
    for (const auto& pt : candidates)
      for (const auto& g : ideal->generators()) all_on = all_on && evaluate(g, pt).is_zero();
    c.expect(all_on, std::string("a candidate point is off V(") + name + ")");
    try {
      (void)char0_representation(*ideal, candidates);
      c.failed.push_back(std::string("char0_representation found a rational representation of ") + name);
    } catch (const Error& e) {
      c.expect(e.kind() == ErrorKind::NoValidPoint, std::string("unexpected error ") + e.what());
    }
  }
  c.notes.push_back(std::to_string(candidates.size()) + " candidates, NoValidPoint for both ideals");
  c.expect(matroid_isomorphic(keep(algebraic_matroid(printed)), lin).has_value(), "M(printed P) not isomorphic to M(A)");
}

void nonpappus(Checks& c) {
  const IdealPresentation p = load("nonpappus_gf25.ideal").ideal();
  g_ideals.push_back(p);
  const Matroid m = keep(algebraic_matroid(p));
  c.expect(m.rank() == 3, "rank != 3");
  std::set<Subset> lines;
  for (const auto& l : examples::nonpappus_lines()) lines.insert(set1({l[0], l[1], l[2]}));
  std::set<Subset> triples, oracle;
  for (Subset s : m.circuits())
    if (std::popcount(s) == 3) triples.insert(s);
  for (Subset s = 0; s < (Subset{1} << 9); ++s)
    if (std::popcount(s) == 3 && !elimination_ideal(p, subset_indices(s)).generators().empty()) oracle.insert(s);
  c.expect(triples == lines, "3-element circuits are not the 8 lines");
  c.expect(oracle == lines, "brute-force triple oracle disagrees with the 8 lines");
  c.expect(m.is_independent(set1({7, 8, 9})), "{x7,x8,x9} dependent");

  const std::vector<std::size_t> support58{4, 5, 6, 7};
  c.expect(differential_support(p, 4) == support58, "support of the x9^5 generator is not {dx5..dx8}");
  c.expect(differential_support(p, 5) == support58, "support of the x6^5 generator is not {dx5..dx8}");

  const DifferentialRep d = keep(differential_matroid(p));
  c.expect(!d.diff_matroid.is_independent(set1({6, 7, 8})), "{x6,x7,x8} independent in the differential matroid");
  c.expect(m.is_independent(set1({6, 7, 8})), "{x6,x7,x8} dependent in the algebraic matroid");
  c.expect(!matroid_equal(m, d.diff_matroid), "compare reports equality");
}

void flock(Checks& c) {
  const IdealPresentation toy = load("flock_toy_gf3.ideal").ideal();
  g_ideals.push_back(toy);
  const FlockShift s = frobenius_flock_shift(toy, {1, 0, 0}, {0, 0, 0});
  g_ideals.push_back(s.ideal);
  Ring trz(Field::prime(3), {"t", "y", "z"});
  const std::vector<std::size_t> same{0, 1, 2};
  const IdealPresentation renamed(trz, {change_ring(s.ideal.generators().at(0), trz, same)});
  c.expect(s.ideal.generators().size() == 1 &&
               ideal_equal(renamed, IdealPresentation(trz, {parse_poly("t + t^2*y - z", trz)})),
           "shift is not <t + t^2*y - z>");
  c.expect(matroid_equal(keep(differential_matroid(s.ideal)).diff_matroid, uniform_matroid(2, 3)),
           "shifted differential matroid is not U(2,3)");
  c.expect(!keep(differential_matroid(toy)).diff_matroid.is_independent(set1({2, 3})),
           "{y,z} independent before the shift");
  c.expect(matroid_isomorphic(keep(algebraic_matroid(toy)), keep(algebraic_matroid(s.ideal))).has_value(),
           "M(P) and M(P_ab) not isomorphic");

  const IdealPresentation np = load("nonpappus_gf25.ideal").ideal();
  const FlockShift ns = frobenius_flock_shift(np, {0, 0, 0, 0, 0, 2, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0});
  g_ideals.push_back(ns.ideal);
  const DifferentialRep nd = keep(differential_matroid(ns.ideal));
  bool zero_col = true;
  for (std::size_t i = 0; i < nd.rep.rows(); ++i) zero_col = zero_col && nd.rep.at(i, 5).is_zero();
  c.expect(zero_col, "column y6 of the kernel-basis matrix is nonzero");
  const auto loops = nd.diff_matroid.loops();
  c.expect(std::find(loops.begin(), loops.end(), std::size_t{5}) != loops.end(), "y6 is not a loop");
  c.expect(matroid_isomorphic(keep(algebraic_matroid(np)), keep(algebraic_matroid(ns.ideal))).has_value(),
           "non-Pappus shift changes the algebraic matroid");
}

void char0_suite(Checks& c) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(ALGMAT_FIXTURE_DIR) / "synthetic"))
    if (e.path().extension() == ".ideal") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  c.expect(files.size() == 6, "expected 6 synthetic fixtures, found " + std::to_string(files.size()));
  for (const auto& path : files) {
    const IdealFile f = load("synthetic/" + path.filename().string());
    const IdealPresentation p = f.ideal();
    g_ideals.push_back(p);
    c.expect(f.field.characteristic() == 0 && f.ring.arity() <= 8, path.filename().string() + " out of scope");
    const bool eq = matroid_equal(keep(differential_matroid(p)).diff_matroid, keep(algebraic_matroid(p)));
    c.expect(eq, path.filename().string() + ": differential != algebraic");
  }
}

void specialization_suite(Checks& c) {
  const IdealFile f = load("det22.ideal");
  const DifferentialRep d = differential_matroid(f.ideal());
  int ok = 0;
  for (int seed = 1; seed <= kSpecSeeds; ++seed) {
    const SpecializationReport r = validate_specialization(d, sample_point(*f.param, seed, kSpecBound));
    if (r.on_variety && r.matches.value_or(false)) ++ok;
    if (r.matroid_at_point) keep(*r.matroid_at_point);
  }
  c.expect(ok >= kSpecRequired, std::to_string(ok) + "/" + std::to_string(kSpecSeeds) + " matched");
  c.notes.push_back(std::to_string(ok) + "/" + std::to_string(kSpecSeeds) + " seeds matched");
}

void correctness(Checks& c) {
  std::size_t bases = 0;
  for (const auto& p : g_ideals) {
    std::vector<TermOrder> orders{TermOrder::grevlex(), TermOrder::lex()};
    for (std::size_t i = 0; i < p.ring().arity(); ++i) orders.push_back(TermOrder::elimination({i}, TermOrder::grevlex()));
    for (const auto& o : orders) {
      const auto gb = p.groebner(o);
      ++bases;
      c.expect(verify_groebner(*gb) && is_reduced(*gb), "Groebner basis check failed for " + p.to_string());
    }
  }
  for (const auto& d : g_reps) {
    c.expect(d.rep.rows() == 0 || (d.rep * d.jacobian.transpose()).is_zero(), "J.a^T != 0");
    c.expect(d.rep.rows() == d.rep.cols() - rank(d.jacobian) && rank(d.rep) == d.rep.rows(), "rank identity fails");
  }
  for (const auto& m : g_matroids) {
    c.expect(check_basis_exchange(m), "basis exchange fails");
    if (m.size() <= kBruteForceAxiomsMax) c.expect(check_axioms(m), "matroid axioms fail");
  }
  c.notes.push_back(std::to_string(bases) + " bases, " + std::to_string(g_reps.size()) + " kernels, " +
                    std::to_string(g_matroids.size()) + " matroids");
}

}  // namespace

int main() {
  criterion(1, "determinantal pipeline", kBudget1, determinantal);
  criterion(2, "Perles configuration", kBudget2, perles);
  criterion(3, "non-Pappus over GF(25)", kBudget3, nonpappus);
  criterion(4, "Frobenius flock shifts", kBudget4, flock);
  criterion(5, "char-0 differential = algebraic", kBudget5, char0_suite);
  criterion(6, "specialization at sampled points", kBudget6, specialization_suite);
  criterion(7, "Groebner, kernel and axiom checks", kBudget7, correctness);
  std::printf("%d of 7 criteria failed\n", g_failures);
  return g_failures ? 1 : 0;
}
