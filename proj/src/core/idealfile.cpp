#include "algmat/idealfile.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>

namespace algmat {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

// Adds the line to messages of non-syntax errors so diagnostics stay located.
[[noreturn]] void relocate(const Error& e, std::size_t line, std::size_t column0) {
  if (auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    const std::size_t col = se->column() ? column0 + se->column() - 1 : column0;
    throw SyntaxError(se->message(), line, col);
  }
  throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.what());
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IdealFile run() {
    std::size_t pos = 0;
    while (pos < text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      std::string_view line = text_.substr(pos, nl - pos);
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      handle(line);
      pos = nl + 1;
    }
    if (line_no_ == 0) line_no_ = 1;
    if (block_ != Block::None) throw SyntaxError("unterminated block, expected 'end'", line_no_, 1);
    if (!field_) throw SyntaxError("missing 'field' line", line_no_, 1);
    if (!ring_) throw SyntaxError("missing 'vars' line", line_no_, 1);
    if (param_ring_ && !have_map_) throw SyntaxError("'param' without a 'map' block", param_line_, 1);
    if (have_map_ && map_.size() != ring_->arity())
      throw SyntaxError("map block needs one component per variable (" + std::to_string(ring_->arity()) + ")",
                        map_end_line_, 1);

    IdealFile f{*field_, *ring_, constants_, prime_, has_gens_, gens_, std::nullopt, assertions_};
    if (param_ring_) {
      try {
        f.param.emplace(*param_ring_, *ring_, map_);
      } catch (const Error& e) {
        relocate(e, param_line_, 1);
      }
    }
    return f;
  }

 private:
  enum class Block { None, Gens, Map };

  void handle(std::string_view line) {
    auto toks = split(line);
    if (toks.empty()) return;
    if (block_ != Block::None) {
      if (toks.size() == 1 && toks[0].text == "end") {
        if (block_ == Block::Map) map_end_line_ = line_no_;
        block_ = Block::None;
        return;
      }
      const std::size_t col = toks[0].column;
      std::string_view expr = line.substr(col - 1);
      while (!expr.empty() && std::isspace(static_cast<unsigned char>(expr.back()))) expr.remove_suffix(1);
      if (!expr.empty() && expr.back() == ',') expr.remove_suffix(1);
      try {
        if (block_ == Block::Gens) {
          gens_.push_back(parse_poly(expr, *ring_, &constant_map_));
        } else {
          map_.push_back(parse_poly(expr, *param_ring_, &constant_map_));
        }
      } catch (const Error& e) {
        relocate(e, line_no_, col);
      }
      return;
    }

    const std::string& kw = toks[0].text;
    if (kw == "field") {
      if (field_) fail("duplicate 'field' line", toks[0]);
      if (toks.size() < 2) fail("expected a field after 'field'", toks[0]);
      const std::size_t col = toks[1].column;
      std::string_view spec = line.substr(col - 1);
      while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.remove_suffix(1);
      try {
        field_ = parse_field(spec);
      } catch (const Error& e) {
        relocate(e, line_no_, col);
      }
    } else if (kw == "vars") {
      need_field(toks[0]);
      if (ring_) fail("duplicate 'vars' line", toks[0]);
      std::vector<std::string> names;
      std::set<std::string> seen;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        check_name(toks[i]);
        if (!seen.insert(toks[i].text).second)
          throw Error(ErrorKind::DuplicateVariable, at(toks[i]) + "duplicate variable '" + toks[i].text + "'");
        names.push_back(toks[i].text);
      }
      try {
        ring_.emplace(*field_, names);
      } catch (const Error& e) {
        relocate(e, line_no_, toks[0].column);
      }
    } else if (kw == "let") {
      need_field(toks[0]);
      if (toks.size() < 4 || toks[2].text != "=") fail("expected 'let <name> = <scalar>'", toks[0]);
      check_name(toks[1]);
      if (constant_map_.count(toks[1].text) || (ring_ && ring_->index_of(toks[1].text)) ||
          toks[1].text == field_->generator())
        throw Error(ErrorKind::DuplicateVariable, at(toks[1]) + "name '" + toks[1].text + "' already defined");
      const std::size_t col = toks[3].column;
      std::string_view expr = line.substr(col - 1);
      try {
        Scalar v = parse_scalar(expr, *field_, &constant_map_);
        constant_map_.emplace(toks[1].text, v);
        constants_.emplace_back(toks[1].text, v);
      } catch (const Error& e) {
        relocate(e, line_no_, col);
      }
    } else if (kw == "prime") {
      if (toks.size() != 1) fail("unexpected text after 'prime'", toks[1]);
      prime_ = true;
    } else if (kw == "gens") {
      need_ring(toks[0]);
      if (toks.size() != 1) fail("unexpected text after 'gens'", toks[1]);
      if (has_gens_) fail("duplicate 'gens' block", toks[0]);
      has_gens_ = true;
      block_ = Block::Gens;
    } else if (kw == "param") {
      need_ring(toks[0]);
      if (param_ring_) fail("duplicate 'param' line", toks[0]);
      std::vector<std::string> names;
      std::set<std::string> seen;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        check_name(toks[i]);
        if (!seen.insert(toks[i].text).second)
          throw Error(ErrorKind::DuplicateVariable, at(toks[i]) + "duplicate parameter '" + toks[i].text + "'");
        names.push_back(toks[i].text);
      }
      param_line_ = line_no_;
      try {
        param_ring_.emplace(*field_, names);
      } catch (const Error& e) {
        relocate(e, line_no_, toks[0].column);
      }
    } else if (kw == "map") {
      if (!param_ring_) fail("'map' needs a preceding 'param' line", toks[0]);
      if (toks.size() != 1) fail("unexpected text after 'map'", toks[1]);
      if (have_map_) fail("duplicate 'map' block", toks[0]);
      have_map_ = true;
      block_ = Block::Map;
    } else if (kw == "assert") {
      need_ring(toks[0]);
      parse_assert(toks);
    } else if (kw == "end") {
      fail("'end' outside a block", toks[0]);
    } else {
      fail("unknown directive '" + kw + "'", toks[0]);
    }
  }

  void parse_assert(const std::vector<Token>& toks) {
    FileAssertion a;
    a.line = line_no_;
    std::size_t i = 1;
    if (i < toks.size() && toks[i].text == "diff") {
      a.target = FileAssertion::Target::Differential;
      ++i;
    }
    if (i >= toks.size()) fail("expected an assertion kind", toks.back());
    const Token& kind = toks[i++];
    if (kind.text == "rank" || kind.text == "bases" || kind.text == "circuits") {
      a.kind = kind.text == "rank" ? FileAssertion::Kind::Rank
               : kind.text == "bases" ? FileAssertion::Kind::Bases
                                      : FileAssertion::Kind::Circuits;
      if (i + 1 != toks.size()) fail("expected exactly one count", kind);
      const std::string& n = toks[i].text;
      if (n.empty() || n.size() > 9 || !std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail("expected a non-negative integer", toks[i]);
      a.count = std::stoul(n);
    } else if (kind.text == "independent" || kind.text == "dependent" || kind.text == "loop") {
      a.kind = kind.text == "independent" ? FileAssertion::Kind::Independent
               : kind.text == "dependent" ? FileAssertion::Kind::Dependent
                                          : FileAssertion::Kind::Loop;
      if (i >= toks.size()) fail("expected variable names", kind);
      for (; i < toks.size(); ++i) {
        if (!ring_->index_of(toks[i].text))
          throw Error(ErrorKind::UnknownVariable, at(toks[i]) + "unknown variable '" + toks[i].text + "'");
        a.vars.push_back(toks[i].text);
      }
    } else {
      fail("unknown assertion '" + kind.text + "'", kind);
    }
    assertions_.push_back(std::move(a));
  }

  std::string at(const Token& t) const {
    return "line " + std::to_string(line_no_) + ", column " + std::to_string(t.column) + ": ";
  }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw SyntaxError(msg, line_no_, t.column); }
  void need_field(const Token& t) const {
    if (!field_) fail("'" + t.text + "' before 'field'", t);
  }
  void need_ring(const Token& t) const {
    if (!ring_) fail("'" + t.text + "' before 'vars'", t);
  }
  void check_name(const Token& t) const {
    if (!is_identifier(t.text)) fail("invalid name '" + t.text + "'", t);
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  Block block_ = Block::None;
  std::optional<Field> field_;
  std::optional<Ring> ring_;
  std::optional<Ring> param_ring_;
  std::size_t param_line_ = 0;
  std::size_t map_end_line_ = 0;
  Constants constant_map_;
  std::vector<std::pair<std::string, Scalar>> constants_;
  bool prime_ = false;
  bool has_gens_ = false;
  bool have_map_ = false;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> map_;
  std::vector<FileAssertion> assertions_;
};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += " " + s;
  return out;
}

}  // namespace

std::string FileAssertion::to_string() const {
  std::string out = target == Target::Differential ? "diff " : "";
  switch (kind) {
    case Kind::Rank: return out + "rank " + std::to_string(count);
    case Kind::Bases: return out + "bases " + std::to_string(count);
    case Kind::Circuits: return out + "circuits " + std::to_string(count);
    case Kind::Independent: return out + "independent" + join(vars);
    case Kind::Dependent: return out + "dependent" + join(vars);
    case Kind::Loop: return out + "loop" + join(vars);
  }
  return out;
}

IdealPresentation IdealFile::ideal(const GbLimits& limits) const {
  if (has_gens || !param) return IdealPresentation(ring, gens, prime);
  return implicitize(*param, limits);
}

IdealFile parse_ideal_file(std::string_view text) { return Parser(text).run(); }

std::string print_ideal_file(const IdealFile& f) {
  std::string out = "field " + f.field.to_string() + "\n";
  out += "vars" + join(f.ring.vars()) + "\n";
  for (const auto& [name, value] : f.constants) out += "let " + name + " = " + value.to_string() + "\n";
  if (f.prime) out += "prime\n";
  if (f.has_gens) {
    out += "gens\n";
    for (const auto& g : f.gens) out += "  " + g.to_string() + "\n";
    out += "end\n";
  }
  if (f.param) {
    out += "param" + join(f.param->params.vars()) + "\n";
    out += "map\n";
    for (const auto& c : f.param->components) out += "  " + c.to_string() + "\n";
    out += "end\n";
  }
  for (const auto& a : f.assertions) out += "assert " + a.to_string() + "\n";
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<AssertionOutcome> check_assertions(const IdealFile& f, const SearchOptions& opts) {
  std::optional<Matroid> alg, dif;
  const IdealPresentation ideal = f.ideal(opts.limits);
  std::vector<AssertionOutcome> out;
  for (const auto& a : f.assertions) {
    const Matroid* m = nullptr;
    if (a.target == FileAssertion::Target::Algebraic) {
      if (!alg) alg = algebraic_matroid(ideal, opts);
      m = &*alg;
    } else {
      if (!dif) {
        DiffOptions d;
        d.search = opts;
        dif = differential_matroid(ideal, d).diff_matroid;
      }
      m = &*dif;
    }
    Subset s = 0;
    for (const auto& v : a.vars) s |= Subset{1} << f.ring.require_index(v);
    AssertionOutcome o{a, false, ""};
    switch (a.kind) {
      case FileAssertion::Kind::Rank:
        o.observed = std::to_string(m->rank());
        o.passed = m->rank() == a.count;
        break;
      case FileAssertion::Kind::Bases:
        o.observed = std::to_string(m->bases().size());
        o.passed = m->bases().size() == a.count;
        break;
      case FileAssertion::Kind::Circuits: {
        const std::size_t c = m->circuits().size();
        o.observed = std::to_string(c);
        o.passed = c == a.count;
        break;
      }
      case FileAssertion::Kind::Independent:
      case FileAssertion::Kind::Dependent: {
        const bool ind = m->is_independent(s);
        o.observed = ind ? "independent" : "dependent";
        o.passed = ind == (a.kind == FileAssertion::Kind::Independent);
        break;
      }
      case FileAssertion::Kind::Loop: {
        const auto loops = m->loops();
        o.passed = std::all_of(a.vars.begin(), a.vars.end(), [&](const std::string& v) {
          return std::find(loops.begin(), loops.end(), f.ring.require_index(v)) != loops.end();
        });
        std::vector<std::string> names;
        for (auto i : loops) names.push_back(f.ring.var(i));
        o.observed = names.empty() ? "no loops" : "loops" + join(names);
        break;
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace algmat
