#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>

#include "algmat/algmat.h"
#include "algmat/report.hpp"

using namespace algmat;
using nlohmann::json;

struct algmat_options {
  SearchOptions search;
  bool reduced_gb_check = false;
  std::uint64_t seed = 1;
  std::uint64_t bound = 100;
  std::unique_ptr<GbCounters> counters = std::make_unique<GbCounters>();

  SearchOptions resolved() const {
    SearchOptions s = search;
    s.limits.counters = counters.get();
    return s;
  }
  DiffOptions diff() const {
    DiffOptions d;
    d.search = resolved();
    d.check_reduced_gb = reduced_gb_check;
    return d;
  }
};

struct algmat_problem {
  IdealFile file;
  std::string normalized;
};

struct algmat_matroid {
  Matroid m;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_line = 0, g_column = 0;

algmat_status from_kind(ErrorKind k) { return static_cast<algmat_status>(static_cast<int>(k) + 1); }

algmat_status fail(algmat_status s, std::string msg) {
  g_error = std::move(msg);
  return s;
}

template <class F>
algmat_status guard(F&& f) {
  g_error.clear();
  g_line = g_column = 0;
  try {
    return f();
  } catch (const SyntaxError& e) {
    g_line = e.line();
    g_column = e.column();
    return fail(ALGMAT_E_SYNTAX, e.what());
  } catch (const Error& e) {
    return fail(from_kind(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ALGMAT_E_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ALGMAT_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

algmat_status emit(const json& j, char** out) {
  *out = dup(j.dump(2));
  return ALGMAT_OK;
}

const algmat_options& defaults() {
  static const algmat_options d;
  return d;
}

const algmat_options& opts_or_default(const algmat_options* o) { return o ? *o : defaults(); }

std::vector<Scalar> parse_point(const char* text, const Field& f) {
  std::vector<Scalar> out;
  std::string_view s(text);
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      try {
        out.push_back(parse_scalar(s.substr(start, i - start), f));
      } catch (const SyntaxError& e) {
        throw SyntaxError("point coordinate " + std::to_string(out.size() + 1) + ": " + e.message(), 0, 0);
      }
      start = i + 1;
    }
  }
  return out;
}

json scalars_json(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json labels_json(Subset s, const std::vector<std::string>& labels) {
  json a = json::array();
  for (auto i : subset_indices(s)) a.push_back(labels[i]);
  return a;
}

json loops_json(const Matroid& m) {
  json a = json::array();
  for (auto i : m.loops()) a.push_back(m.labels()[i]);
  return a;
}

const Parameterization& require_param(const algmat_problem* p) {
  if (!p->file.param) throw Error(ErrorKind::InvalidArgument, "the file has no param/map block");
  return *p->file.param;
}

std::vector<std::uint64_t> broadcast(const std::uint64_t* v, std::size_t len, std::size_t n, const char* what) {
  if (len == 1) return std::vector<std::uint64_t>(n, v[0]);
  if (len != n)
    throw Error(ErrorKind::InvalidArgument, std::string("shift vector ") + what + " needs 1 or " + std::to_string(n) +
                                                " entries, got " + std::to_string(len));
  return std::vector<std::uint64_t>(v, v + len);
}

}  // namespace

#define ALGMAT_REQUIRE(x) \
  if (!(x)) return fail(ALGMAT_E_NULL_ARGUMENT, "null argument: " #x)

extern "C" {

const char* algmat_version(void) { return "1.0.0"; }

const char* algmat_status_name(algmat_status s) {
  if (s == ALGMAT_OK) return "Ok";
  if (s == ALGMAT_E_NULL_ARGUMENT) return "NullArgument";
  if (s == ALGMAT_E_IO) return "IoError";
  if (s == ALGMAT_E_OUT_OF_MEMORY) return "OutOfMemory";
  if (s >= ALGMAT_E_DIVISION_BY_ZERO && s <= ALGMAT_E_INTERNAL)
    return error_kind_name(static_cast<ErrorKind>(static_cast<int>(s) - 1));
  return "Unknown";
}

const char* algmat_last_error(void) { return g_error.c_str(); }
size_t algmat_last_error_line(void) { return g_line; }
size_t algmat_last_error_column(void) { return g_column; }

int algmat_status_is_math_failure(algmat_status s) {
  switch (s) {
    case ALGMAT_E_DIVISION_BY_ZERO:
    case ALGMAT_E_CHAR_ZERO_FIELD:
    case ALGMAT_E_EXPONENT_OVERFLOW:
    case ALGMAT_E_RESOURCE_LIMIT:
    case ALGMAT_E_DENOMINATOR_VANISHES:
    case ALGMAT_E_NOT_ON_VARIETY:
    case ALGMAT_E_NO_VALID_POINT:
    case ALGMAT_E_GROUND_SET_TOO_LARGE:
    case ALGMAT_E_GROUND_SET_MISMATCH:
    case ALGMAT_E_SHIFT_PAIR_NONZERO:
    case ALGMAT_E_PRIMALITY_NOT_ASSERTED:
    case ALGMAT_E_NOT_A_MATROID:
    case ALGMAT_E_INTERNAL:
    case ALGMAT_E_OUT_OF_MEMORY: return 1;
    default: return 0;
  }
}

void algmat_string_free(char* s) { std::free(s); }

algmat_status algmat_options_new(algmat_options** out) {
  ALGMAT_REQUIRE(out);
  return guard([&] {
    *out = new algmat_options();
    return ALGMAT_OK;
  });
}

void algmat_options_free(algmat_options* o) { delete o; }

algmat_status algmat_options_set_jobs(algmat_options* o, unsigned jobs) {
  ALGMAT_REQUIRE(o);
  if (jobs == 0) return fail(ALGMAT_E_INVALID_ARGUMENT, "jobs must be positive");
  o->search.jobs = jobs;
  return ALGMAT_OK;
}

algmat_status algmat_options_set_max_pairs(algmat_options* o, uint64_t max_pairs) {
  ALGMAT_REQUIRE(o);
  o->search.limits.max_pairs = max_pairs;
  return ALGMAT_OK;
}

algmat_status algmat_options_set_max_exponent(algmat_options* o, uint64_t max_exponent) {
  ALGMAT_REQUIRE(o);
  if (max_exponent == 0 || max_exponent > UINT32_MAX)
    return fail(ALGMAT_E_INVALID_ARGUMENT, "max exponent must lie in [1, 2^32)");
  o->search.limits.max_exponent = static_cast<Exponent>(max_exponent);
  return ALGMAT_OK;
}

algmat_status algmat_options_set_order(algmat_options* o, const char* order) {
  ALGMAT_REQUIRE(o);
  ALGMAT_REQUIRE(order);
  const std::string s(order);
  if (s == "lex") {
    o->search.order = TermOrder::lex();
  } else if (s == "grevlex") {
    o->search.order = TermOrder::grevlex();
  } else {
    return fail(ALGMAT_E_INVALID_ARGUMENT, "unknown term order '" + s + "' (expected lex or grevlex)");
  }
  return ALGMAT_OK;
}

algmat_status algmat_options_set_seed(algmat_options* o, uint64_t seed) {
  ALGMAT_REQUIRE(o);
  o->seed = seed;
  return ALGMAT_OK;
}

algmat_status algmat_options_set_bound(algmat_options* o, uint64_t bound) {
  ALGMAT_REQUIRE(o);
  if (bound == 0) return fail(ALGMAT_E_INVALID_ARGUMENT, "bound must be positive");
  o->bound = bound;
  return ALGMAT_OK;
}

algmat_status algmat_options_set_reduced_gb_check(algmat_options* o, int enabled) {
  ALGMAT_REQUIRE(o);
  o->reduced_gb_check = enabled != 0;
  return ALGMAT_OK;
}

algmat_status algmat_options_set_max_ground(algmat_options* o, size_t max_ground) {
  ALGMAT_REQUIRE(o);
  if (max_ground > kMaxGround)
    return fail(ALGMAT_E_INVALID_ARGUMENT, "ground cap above " + std::to_string(kMaxGround));
  o->search.max_ground = max_ground;
  return ALGMAT_OK;
}

algmat_status algmat_options_counters_json(const algmat_options* o, char** out) {
  ALGMAT_REQUIRE(o);
  ALGMAT_REQUIRE(out);
  return guard([&] { return emit(counters_json(*o->counters), out); });
}

algmat_status algmat_problem_parse(const char* text, algmat_problem** out) {
  ALGMAT_REQUIRE(text);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    IdealFile f = parse_ideal_file(text);
    std::string norm = print_ideal_file(f);
    *out = new algmat_problem{std::move(f), std::move(norm)};
    return ALGMAT_OK;
  });
}

algmat_status algmat_problem_load(const char* path, algmat_problem** out) {
  ALGMAT_REQUIRE(path);
  ALGMAT_REQUIRE(out);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    g_line = g_column = 0;
    return fail(ALGMAT_E_IO, std::string("cannot open '") + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return algmat_problem_parse(ss.str().c_str(), out);
}

void algmat_problem_free(algmat_problem* p) { delete p; }

algmat_status algmat_problem_normalized(const algmat_problem* p, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    *out = dup(p->normalized);
    return ALGMAT_OK;
  });
}

algmat_status algmat_problem_digest(const algmat_problem* p, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    *out = dup(fnv1a_hex(p->normalized));
    return ALGMAT_OK;
  });
}

algmat_status algmat_problem_has_param(const algmat_problem* p, int* out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  *out = p->file.param.has_value();
  return ALGMAT_OK;
}

algmat_status algmat_problem_ideal_json(const algmat_problem* p, const algmat_options* o, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const IdealPresentation ideal = p->file.ideal(opts_or_default(o).resolved().limits);
    json j = ideal_json(ideal);
    j["schema"] = kJsonSchema;
    j["prime"] = ideal.primality_asserted();
    return emit(j, out);
  });
}

algmat_status algmat_problem_check_json(const algmat_problem* p, const algmat_options* o, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const auto results = check_assertions(p->file, opts_or_default(o).resolved());
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed;
      arr.push_back(json{{"assertion", r.assertion.to_string()},
                         {"line", r.assertion.line},
                         {"passed", r.passed},
                         {"observed", r.observed}});
    }
    return emit(json{{"schema", kJsonSchema}, {"passed", all}, {"results", std::move(arr)}}, out);
  });
}

algmat_status algmat_algebraic_matroid(const algmat_problem* p, const algmat_options* o, algmat_matroid** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const SearchOptions s = opts_or_default(o).resolved();
    *out = new algmat_matroid{algebraic_matroid(p->file.ideal(s.limits), s)};
    return ALGMAT_OK;
  });
}

algmat_status algmat_differential_matroid(const algmat_problem* p, const algmat_options* o, algmat_matroid** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const DiffOptions d = opts_or_default(o).diff();
    *out = new algmat_matroid{differential_matroid(p->file.ideal(d.search.limits), d).diff_matroid};
    return ALGMAT_OK;
  });
}

void algmat_matroid_free(algmat_matroid* m) { delete m; }

algmat_status algmat_matroid_size(const algmat_matroid* m, size_t* out) {
  ALGMAT_REQUIRE(m);
  ALGMAT_REQUIRE(out);
  *out = m->m.size();
  return ALGMAT_OK;
}

algmat_status algmat_matroid_rank(const algmat_matroid* m, size_t* out) {
  ALGMAT_REQUIRE(m);
  ALGMAT_REQUIRE(out);
  *out = m->m.rank();
  return ALGMAT_OK;
}

algmat_status algmat_matroid_is_independent(const algmat_matroid* m, const size_t* idx, size_t count, int* out) {
  ALGMAT_REQUIRE(m);
  ALGMAT_REQUIRE(out);
  ALGMAT_REQUIRE(idx || count == 0);
  return guard([&] {
    Subset s = 0;
    for (size_t i = 0; i < count; ++i) {
      if (idx[i] >= m->m.size()) throw Error(ErrorKind::IndexOutOfRange, "element index out of range");
      s |= Subset{1} << idx[i];
    }
    *out = m->m.is_independent(s);
    return ALGMAT_OK;
  });
}

algmat_status algmat_matroid_json(const algmat_matroid* m, char** out) {
  ALGMAT_REQUIRE(m);
  ALGMAT_REQUIRE(out);
  return guard([&] { return emit(matroid_json(m->m), out); });
}

algmat_status algmat_matroid_equal(const algmat_matroid* a, const algmat_matroid* b, int* out) {
  ALGMAT_REQUIRE(a);
  ALGMAT_REQUIRE(b);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    *out = matroid_equal(a->m, b->m);
    return ALGMAT_OK;
  });
}

algmat_status algmat_matroid_isomorphic(const algmat_matroid* a, const algmat_matroid* b, int* out,
                                        char** perm_json) {
  ALGMAT_REQUIRE(a);
  ALGMAT_REQUIRE(b);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    auto perm = matroid_isomorphic(a->m, b->m);
    *out = perm.has_value();
    if (perm_json) *perm_json = perm ? dup(json(*perm).dump()) : nullptr;
    return ALGMAT_OK;
  });
}

algmat_status algmat_matroid_compare_json(const algmat_matroid* a, const algmat_matroid* b, char** out) {
  ALGMAT_REQUIRE(a);
  ALGMAT_REQUIRE(b);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const Matroid& x = a->m;
    const Matroid& y = b->m;
    json j{{"schema", kJsonSchema}};
    if (x.size() != y.size()) {
      j["equal"] = false;
      j["isomorphic"] = false;
      j["distinguishing_sets"] = json::array();
      j["distinguishing_bases"] = json::array();
      return emit(j, out);
    }
    j["equal"] = matroid_equal(x, y);
    j["isomorphic"] = x.size() <= 12 ? json(matroid_isomorphic(x, y).has_value()) : json(nullptr);
    json sets = json::array();
    for (Subset s : distinguishing_sets(x, y)) sets.push_back(labels_json(s, x.labels()));
    j["distinguishing_sets"] = std::move(sets);
    std::vector<Subset> only;
    for (Subset s : x.bases())
      if (!y.is_basis(s)) only.push_back(s);
    for (Subset s : y.bases())
      if (!x.is_basis(s)) only.push_back(s);
    std::sort(only.begin(), only.end(), subset_less);
    json bases = json::array();
    for (Subset s : only) bases.push_back(labels_json(s, x.labels()));
    j["distinguishing_bases"] = std::move(bases);
    return emit(j, out);
  });
}

algmat_status algmat_jacobian_json(const algmat_problem* p, const algmat_options* o, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const SearchOptions s = opts_or_default(o).resolved();
    const IdealPresentation ideal = p->file.ideal(s.limits);
    QContext ctx(ideal, s.limits);
    return emit(json{{"schema", kJsonSchema},
                     {"vars", ideal.ring().vars()},
                     {"generators", polys_json(ideal.generators())},
                     {"jacobian", matrix_json(jacobian_matrix(ideal, ctx))}},
                out);
  });
}

algmat_status algmat_differential_json(const algmat_problem* p, const algmat_options* o, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const DiffOptions d = opts_or_default(o).diff();
    const DifferentialRep rep = differential_matroid(p->file.ideal(d.search.limits), d);
    json minors = json::array();
    for (const auto& m : rep.minors)
      minors.push_back(json{{"basis", subset_json(m.basis)}, {"value", m.value.to_string()}});
    return emit(json{{"schema", kJsonSchema},
                     {"vars", rep.ctx.ring().vars()},
                     {"jacobian", matrix_json(rep.jacobian)},
                     {"rep", matrix_json(rep.rep)},
                     {"matroid", matroid_json(rep.diff_matroid)},
                     {"loops", loops_json(rep.diff_matroid)},
                     {"minors", std::move(minors)}},
                out);
  });
}

algmat_status algmat_specialize_json(const algmat_problem* p, const algmat_options* o, const char* point, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const algmat_options& opt = opts_or_default(o);
    const DiffOptions d = opt.diff();
    const IdealPresentation ideal = p->file.ideal(d.search.limits);
    const std::vector<Scalar> z = point ? parse_point(point, ideal.ring().field())
                                        : sample_point(require_param(p), opt.seed, opt.bound);
    const DifferentialRep rep = differential_matroid(ideal, d);
    const SpecializationReport r = validate_specialization(rep, z, d.search);
    json j = specialization_json(r);
    j["schema"] = kJsonSchema;
    j["vars"] = ideal.ring().vars();
    j["diff_matroid"] = matroid_json(rep.diff_matroid);
    return emit(j, out);
  });
}

algmat_status algmat_represent_json(const algmat_problem* p, const algmat_options* o, const char* point, size_t count,
                                    char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const algmat_options& opt = opts_or_default(o);
    const SearchOptions s = opt.resolved();
    const IdealPresentation ideal = p->file.ideal(s.limits);
    std::vector<std::vector<Scalar>> points;
    if (point) {
      points.push_back(parse_point(point, ideal.ring().field()));
    } else {
      const Parameterization& f = require_param(p);
      if (count == 0) throw Error(ErrorKind::InvalidArgument, "candidate count must be positive");
      for (size_t i = 0; i < count; ++i) points.push_back(sample_point(f, opt.seed + i, opt.bound));
    }
    const Char0Representation rep = char0_representation(ideal, points, s);
    json j = specialization_json(rep.report);
    j["schema"] = kJsonSchema;
    j["vars"] = ideal.ring().vars();
    j["candidate_index"] = rep.point_index;
    j["candidates"] = points.size();
    j["algebraic_matroid"] = matroid_json(rep.algebraic);
    return emit(j, out);
  });
}

algmat_status algmat_sample_json(const algmat_problem* p, const algmat_options* o, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const algmat_options& opt = opts_or_default(o);
    const Parameterization& f = require_param(p);
    const auto params = sample_parameters(f, opt.seed, opt.bound);
    const auto pt = evaluate_parameterization(f, params);
    const IdealPresentation ideal = p->file.ideal(opt.resolved().limits);
    bool on = true;
    for (const auto& g : ideal.generators()) on = on && evaluate(g, pt).is_zero();
    return emit(json{{"schema", kJsonSchema},
                     {"seed", opt.seed},
                     {"bound", opt.bound},
                     {"params", f.params.vars()},
                     {"parameters", scalars_json(params)},
                     {"vars", f.target.vars()},
                     {"point", scalars_json(pt)},
                     {"on_variety", on}},
                out);
  });
}

algmat_status algmat_implicitize_json(const algmat_problem* p, const algmat_options* o, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  return guard([&] {
    const SearchOptions s = opts_or_default(o).resolved();
    const IdealPresentation imp = implicitize(require_param(p), s.limits);
    json j = ideal_json(imp);
    j["schema"] = kJsonSchema;
    if (p->file.has_gens)
      j["equals_gens"] = ideal_equal(imp, IdealPresentation(p->file.ring, p->file.gens), s.limits);
    else
      j["equals_gens"] = nullptr;
    return emit(j, out);
  });
}

algmat_status algmat_flock_json(const algmat_problem* p, const algmat_options* o, const uint64_t* a, size_t a_len,
                                const uint64_t* b, size_t b_len, char** out) {
  ALGMAT_REQUIRE(p);
  ALGMAT_REQUIRE(out);
  ALGMAT_REQUIRE(a);
  ALGMAT_REQUIRE(b);
  return guard([&] {
    const DiffOptions d = opts_or_default(o).diff();
    const IdealPresentation ideal = p->file.ideal(d.search.limits);
    const std::size_t n = ideal.ring().arity();
    const auto av = broadcast(a, a_len, n, "a");
    const auto bv = broadcast(b, b_len, n, "b");
    const FlockShift shift = frobenius_flock_shift(ideal, av, bv, d.search.limits);
    const DifferentialRep rep = differential_matroid(shift.ideal, d);
    const Matroid before = algebraic_matroid(ideal, d.search);
    const Matroid after = algebraic_matroid(shift.ideal, d.search);
    json names = json::array();
    for (const auto& [fresh, orig] : shift.name_map) names.push_back(json::array({fresh, orig}));
    json zero_cols = json::array();
    for (std::size_t j = 0; j < rep.rep.cols(); ++j) {
      bool zero = true;
      for (std::size_t i = 0; i < rep.rep.rows(); ++i) zero = zero && rep.rep.at(i, j).is_zero();
      if (zero) zero_cols.push_back(ideal.ring().var(j));
    }
    json ideal_out = ideal_json(shift.ideal);
    ideal_out["prime"] = shift.ideal.primality_asserted();
    return emit(json{{"schema", kJsonSchema},
                     {"a", av},
                     {"b", bv},
                     {"ideal", std::move(ideal_out)},
                     {"name_map", std::move(names)},
                     {"rep", matrix_json(rep.rep)},
                     {"diff_matroid", matroid_json(rep.diff_matroid)},
                     {"loops", loops_json(rep.diff_matroid)},
                     {"zero_columns", std::move(zero_cols)},
                     {"algebraic_isomorphic", n <= 12 ? json(matroid_isomorphic(before, after).has_value())
                                                      : json(nullptr)}},
                out);
  });
}

}  // extern "C"
