#ifndef ALGMAT_TEST_EXAMPLES_HPP
#define ALGMAT_TEST_EXAMPLES_HPP

#include <string>
#include <vector>

#include "algmat/groebner.hpp"
#include "algmat/quotfield.hpp"

namespace examples {

using namespace algmat;

inline Ring make_ring(const Field& f, std::vector<std::string> vars) { return Ring(f, std::move(vars)); }

inline std::vector<std::string> xs(int n, const char* prefix = "x") {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

inline IdealPresentation ideal(const Ring& r, const std::vector<std::string>& gens, const Constants* cs = nullptr,
                               bool prime = true) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, r, cs));
  return IdealPresentation(r, ps, prime);
}

inline IdealPresentation det22() {
  Ring r(Field::rationals(), {"x00", "x01", "x10", "x11"});
  return ideal(r, {"x00*x11 - x01*x10"});
}

inline Field gf25() { return parse_field("GF(5)[t]/(t^2-2)"); }

/// alpha = t + 3 satisfies 2*alpha^2 - 2*alpha - 1 = 0 and alpha^5 != alpha.
inline Constants nonpappus_constants() { return Constants{{"alpha", gf25().gen() + gf25().from_int(3)}}; }

inline IdealPresentation nonpappus() {
  Ring r(gf25(), xs(9));
  const Constants cs = nonpappus_constants();
  return ideal(r,
               {"x4 - x5 + (alpha - 1)*x6", "x3 - x5 + x9", "x2 - alpha*x6 + x9", "x1 + 2*alpha*x5 - 2*alpha*x7",
                "x9^5 + (-2*alpha - 2)*x5 + (2*alpha - 1)*x6 + (2*alpha + 1)*x7 + (-alpha + 1)*x8",
                "x6^5 + 2*alpha*x5 - x6 - 2*alpha*x7 + x8"},
               &cs);
}

/// The 8 collinear triples of the non-Pappus configuration (1-based labels).
inline std::vector<std::vector<int>> nonpappus_lines() {
  return {{1, 2, 3}, {4, 5, 6}, {1, 5, 7}, {2, 4, 7}, {1, 6, 8}, {3, 4, 8}, {2, 6, 9}, {3, 5, 9}};
}

inline Field perles_field() { return parse_field("QQ[t]/(t^2+t-1)"); }

/// The 3x9 Perles matrix over QQ[t]/(t^2+t-1).
inline FieldMatrix perles_matrix() {
  Field k = perles_field();
  const std::vector<std::vector<const char*>> rows = {{"1", "1", "1", "0", "0", "0", "1", "1", "1+t"},
                                                      {"t", "0", "-1", "1", "0", "1", "1+t", "0", "1"},
                                                      {"0", "0", "0", "0", "1", "1", "1", "1", "1"}};
  std::vector<std::vector<Scalar>> m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const char* e : r) m.back().push_back(parse_scalar(e, k));
  }
  return FieldMatrix::from_rows(k, m, 9);
}

/// The 8-generator eliminated Perles ideal over QQ.
inline IdealPresentation perles_prime() {
  Ring r(Field::rationals(), xs(9));
  return ideal(r, {"x4+x5-x6", "x3+x6-x8", "x2+x5-x8", "x1+x5-x9",
                   "x5*x7-x7^2-x6*x8+x8^2-x5*x9+x6*x9+x7*x9-x8*x9",
                   "x6^2-x6*x7-x7^2-2*x6*x8+x7*x8+x8^2+x6*x9+2*x7*x9-x8*x9-x9^2",
                   "x5*x6-x6*x7-x5*x8-x6*x8+x8^2+x6*x9+x7*x9-x9^2",
                   "x5^2-x7^2-x5*x8-2*x6*x8+x7*x8+x8^2-x5*x9+2*x6*x9+x7*x9-x9^2"});
}

/// Auxiliary ideal in x1..x9, t with the linear generator typo corrected.
inline IdealPresentation perles_auxiliary() {
  auto vars = xs(9);
  vars.push_back("t");
  Ring r(Field::rationals(), vars);
  return ideal(r, {"-x2+x3+x4", "-x2+x3-x5+x6", "-x2-x5+x8", "-t*x2+t*x3+x1-x2", "-t*x2+t*x3-2*x2+x3-x5+x7",
                   "-t*x2-2*x2+x3-x5+x9", "t^2+t-1"});
}

inline IdealPresentation flock_toy() {
  Ring r(Field::prime(3), {"x", "y", "z"});
  return ideal(r, {"x^3 + x^6*y - z"});
}

/// Small prime ideals over QQ used for the characteristic-zero property suite.
inline std::vector<IdealPresentation> synthetic_char0() {
  const Field q = Field::rationals();
  std::vector<IdealPresentation> out;
  {
    Ring r(q, {"x", "y", "z"});
    out.push_back(ideal(r, {"y - x^2", "z - x*y", "x*z - y^2"}));
  }
  {
    Ring r(q, {"a1", "a2", "a3", "b1", "b2", "b3"});
    out.push_back(ideal(r, {"a1*b2 - a2*b1", "a1*b3 - a3*b1", "a2*b3 - a3*b2"}));
  }
  {
    Ring r(q, xs(4));
    out.push_back(ideal(r, {"x1*x2 - x3^2"}));
  }
  {
    Ring r(q, xs(4));
    out.push_back(ideal(r, {"x1 + x2 + x3", "x4 - x1*x2"}));
  }
  {
    Ring r(q, xs(6));
    out.push_back(ideal(r, {"x4 - x1*x2", "x5 - x2*x3", "x6 - x1*x3"}));
  }
  {
    Ring r(q, {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"});
    std::vector<std::string> g;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        g.push_back("a" + std::to_string(i) + "*b" + std::to_string(j) + " - a" + std::to_string(j) + "*b" + std::to_string(i));
    out.push_back(ideal(r, g));
  }
  return out;
}

}  // namespace examples

#endif
