#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "doctest.h"

#include "algmat/idealfile.hpp"
#include "algmat/report.hpp"
#include "examples.hpp"

using namespace algmat;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path fixtures() { return ALGMAT_FIXTURE_DIR; }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Internal;
}

// Oracle: 64-bit FNV-1a reference values.
struct FnvCase {
  const char* text;
  const char* hex;
};

}  // namespace

TEST_CASE("fnv1a digest") {
  const FnvCase cases[] = {{"", "cbf29ce484222325"}, {"a", "af63dc4c8601ec8c"}, {"foobar", "85944171f73967e8"}};
  for (const auto& c : cases) CHECK(fnv1a_hex(c.text) == c.hex);
}

TEST_CASE("the determinantal fixture") {
  IdealFile f = parse_ideal_file(slurp(fixtures() / "det22.ideal"));
  CHECK(f.field == Field::rationals());
  CHECK(f.ring.vars() == std::vector<std::string>{"x00", "x01", "x10", "x11"});
  CHECK(f.prime);
  REQUIRE(f.gens.size() == 1);
  CHECK(f.gens[0] == examples::det22().generators()[0]);
  REQUIRE(f.param.has_value());
  CHECK(ideal_equal(implicitize(*f.param), f.ideal()));
  CHECK(f.assertions.size() == 5);
}

TEST_CASE("directives and blocks") {
  const char* text =
      "# leading comment\n"
      "field GF(5)[t]/(t^2-2)\n"
      "\n"
      "vars a b   c   # trailing comment\n"
      "let k = t + 3\n"
      "let m = 2*k\n"
      "gens\n"
      "  a - k*b,\n"
      "  c^5 - m\n"
      "end\n"
      "assert diff dependent a b\n"
      "assert rank 2\n";
  IdealFile f = parse_ideal_file(text);
  CHECK_FALSE(f.prime);
  CHECK(f.constants.size() == 2);
  CHECK(f.constants[1].second == f.field.from_int(2) * (f.field.gen() + f.field.from_int(3)));
  CHECK(f.gens.size() == 2);
  CHECK(f.assertions[0].target == FileAssertion::Target::Differential);
  CHECK(f.assertions[0].to_string() == "diff dependent a b");
  CHECK(f.assertions[1].line == 12);
  CHECK_FALSE(f.ideal().primality_asserted());

  // A file with only a map is the implicitized ideal, marked prime.
  IdealFile g = parse_ideal_file("field QQ\nvars x y\nparam u\nmap\nu\nu^2\nend\n");
  CHECK_FALSE(g.has_gens);
  const IdealPresentation gi = g.ideal();
  CHECK(gi.primality_asserted());
  CHECK(ideal_equal(gi, IdealPresentation(g.ring, {parse_poly("y - x^2", g.ring)})));
}

TEST_CASE("diagnostics carry positions") {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  const Case cases[] = {
      {"field QQ\nvars x\ngens\n  x +* 1\nend\n", 4, 6},
      {"field QQ\nvars x\nfrobnicate\n", 3, 1},
      {"vars x\n", 1, 1},
      {"field QQ\nvars x\ngens\nx\n", 4, 1},
      {"field QQ\nvars x 1y\n", 2, 8},
      {"field QQ\nvars x\nassert rank many\n", 3, 13},
      {"field QQ\nvars x\nend\n", 3, 1},
      {"field QQ\n", 1, 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      (void)parse_ideal_file(c.text);
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == c.line);
      CHECK(e.column() == c.column);
    }
  }
}

TEST_CASE("semantic errors") {
  CHECK(kind_of([] { parse_ideal_file("field GF(4)[t]/(t^2+t+1)\nvars x\n"); }) == ErrorKind::UnknownField);
  CHECK(kind_of([] { parse_ideal_file("field GF(6)\nvars x\n"); }) == ErrorKind::UnknownField);
  CHECK(kind_of([] { parse_ideal_file("field QQ\nvars x y x\n"); }) == ErrorKind::DuplicateVariable);
  CHECK(kind_of([] { parse_ideal_file("field QQ\nvars x\nlet x = 2\n"); }) == ErrorKind::DuplicateVariable);
  CHECK(kind_of([] { parse_ideal_file("field QQ\nvars x\ngens\ny\nend\n"); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_ideal_file("field QQ\nvars x\nassert dependent z\n"); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_ideal_file("field QQ\nvars x y\nparam x\nmap\nx\nx\nend\n"); }) == ErrorKind::NameCollision);
  CHECK(kind_of([] { parse_ideal_file("field QQ\nvars x y\nparam u\nmap\nu\nend\n"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("every fixture round-trips through the normalized printer") {
  for (const auto& entry : std::filesystem::recursive_directory_iterator(fixtures())) {
    if (entry.path().extension() != ".ideal") continue;
    CAPTURE(entry.path().string());
    IdealFile f = parse_ideal_file(slurp(entry.path()));
    const std::string norm = print_ideal_file(f);
    IdealFile g = parse_ideal_file(norm);
    CHECK(print_ideal_file(g) == norm);
    CHECK(g.gens == f.gens);
    CHECK(g.ring == f.ring);
  }
}

TEST_CASE("normalization is idempotent on random files") {
  std::mt19937_64 rng(61);
  const char* fields[] = {"QQ", "GF(7)", "GF(3)[s]/(s^2+1)", "QQ[s]/(s^2-3)"};
  for (int rep = 0; rep < 25; ++rep) {
    std::string text = std::string("field ") + fields[rng() % 4] + "\nvars u v w\n";
    if (rng() % 2) text += "prime\n";
    text += "gens\n";
    const int ng = 1 + static_cast<int>(rng() % 3);
    const char* atoms[] = {"u", "v", "w", "2", "1/3", "u^2", "v*w"};
    for (int g = 0; g < ng; ++g) {
      std::string line = "   ";
      const int nt = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < nt; ++t) {
        if (t) line += (rng() % 2) ? " + " : " - ";
        line += atoms[rng() % 7];
        if (rng() % 3 == 0) line += std::string("*") + atoms[rng() % 7];
      }
      text += line + "\n";
    }
    text += "end\n# done\n";
    CAPTURE(text);
    std::optional<IdealFile> f;
    try {
      f = parse_ideal_file(text);
    } catch (const Error& e) {
      // 1/3 has no meaning in characteristic 3; the parser reports the position.
      CHECK(e.kind() == ErrorKind::SyntaxError);
      continue;
    }
    const std::string once = print_ideal_file(*f);
    CHECK(print_ideal_file(parse_ideal_file(once)) == once);
    CHECK(fnv1a_hex(once) == fnv1a_hex(print_ideal_file(parse_ideal_file(once))));
  }
}

TEST_CASE("assertion checking") {
  IdealFile f = parse_ideal_file(
      "field QQ\nvars x00 x01 x10 x11\nprime\ngens\nx00*x11 - x01*x10\nend\n"
      "assert rank 3\nassert bases 5\nassert independent x00 x01 x10\nassert diff dependent x00 x01 x10 x11\n"
      "assert loop x00\n");
  auto out = check_assertions(f);
  REQUIRE(out.size() == 5);
  CHECK(out[0].passed);
  CHECK_FALSE(out[1].passed);
  CHECK(out[1].observed == "4");
  CHECK(out[2].passed);
  CHECK(out[3].passed);
  CHECK_FALSE(out[4].passed);
  CHECK(out[4].observed == "no loops");
}

TEST_CASE("matroid JSON") {
  const auto j = matroid_json(uniform_matroid(2, 3, {"a", "b", "c"}));
  CHECK(j.dump() ==
        R"({"bases":[[0,1],[0,2],[1,2]],"circuits":[[0,1,2]],"labels":["a","b","c"],"n":3,"rank":2,"schema":1})");
}
