#ifndef ALGMAT_IDEALFILE_HPP
#define ALGMAT_IDEALFILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algmat/construct.hpp"

namespace algmat {

struct FileAssertion {
  enum class Target { Algebraic, Differential };
  enum class Kind { Rank, Bases, Circuits, Independent, Dependent, Loop };
  Target target = Target::Algebraic;
  Kind kind = Kind::Rank;
  std::size_t count = 0;
  std::vector<std::string> vars;
  std::size_t line = 0;

  /// The directive as it appears in a normalized file, without "assert ".
  std::string to_string() const;
};

/// Line-oriented ideal description:
///
///   # comment
///   field QQ[t]/(t^2+t-1)
///   vars x1 x2 x3
///   let alpha = t + 3
///   prime
///   gens
///     x1*x2 - x3^2
///   end
///   param u v
///   map
///     u^2
///     u*v
///     v^2
///   end
///   assert rank 2
///   assert diff dependent x1 x2
///
/// `vars` must come before `gens`, `map` and `let` lines that use variables.
/// Without a `gens` block the ideal is the implicitization of the map.
struct IdealFile {
  Field field;
  Ring ring;
  std::vector<std::pair<std::string, Scalar>> constants;
  bool prime = false;
  bool has_gens = false;
  std::vector<Polynomial> gens;
  std::optional<Parameterization> param;
  std::vector<FileAssertion> assertions;

  /// The generators as given, or the implicitized map. Marked prime when the
  /// file says so or when it comes from a map.
  IdealPresentation ideal(const GbLimits& limits = {}) const;
};

/// Throws SyntaxError (with line and column), UnknownField, DuplicateVariable,
/// UnknownVariable and the construction errors of Parameterization.
IdealFile parse_ideal_file(std::string_view text);

/// Canonical text: comments and blank lines dropped, single spaces, and
/// polynomials and scalars in the printer's normal form.
std::string print_ideal_file(const IdealFile& f);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

struct AssertionOutcome {
  FileAssertion assertion;
  bool passed = false;
  std::string observed;
};

/// Evaluates each assertion against the algebraic or differential matroid.
std::vector<AssertionOutcome> check_assertions(const IdealFile& f, const SearchOptions& opts = {});

}  // namespace algmat

#endif
