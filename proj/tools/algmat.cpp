// Command-line front end. Talks to the library only through algmat.h.

#include <chrono>
#include <functional>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "algmat/algmat.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Failure {
  algmat_status status;
  std::string message;
  std::size_t line = 0, column = 0;
};

void check(algmat_status s) {
  if (s != ALGMAT_OK) throw Failure{s, algmat_last_error(), algmat_last_error_line(), algmat_last_error_column()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  algmat_string_free(s);
  return out;
}

using Options = std::unique_ptr<algmat_options, decltype(&algmat_options_free)>;
using Problem = std::unique_ptr<algmat_problem, decltype(&algmat_problem_free)>;
using MatroidH = std::unique_ptr<algmat_matroid, decltype(&algmat_matroid_free)>;

struct Common {
  std::string order = "grevlex";
  bool json_out = false;
  std::uint64_t seed = 1;
  std::uint64_t bound = 100;
  unsigned jobs = 1;
  std::uint64_t max_pairs = 100000;
  bool reduced_gb = false;
  bool timing = false;
};

struct Context {
  Common common;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::chrono::steady_clock::time_point start;
};

Options make_options(const Common& c) {
  algmat_options* raw = nullptr;
  check(algmat_options_new(&raw));
  Options o(raw, &algmat_options_free);
  check(algmat_options_set_order(o.get(), c.order.c_str()));
  check(algmat_options_set_seed(o.get(), c.seed));
  check(algmat_options_set_bound(o.get(), c.bound));
  check(algmat_options_set_jobs(o.get(), c.jobs));
  check(algmat_options_set_max_pairs(o.get(), c.max_pairs));
  check(algmat_options_set_reduced_gb_check(o.get(), c.reduced_gb));
  return o;
}

Problem load(Context& ctx, const std::string& path) {
  algmat_problem* raw = nullptr;
  check(algmat_problem_load(path.c_str(), &raw));
  Problem p(raw, &algmat_problem_free);
  char* d = nullptr;
  check(algmat_problem_digest(p.get(), &d));
  ctx.inputs.emplace_back(path, take(d));
  return p;
}

json call(algmat_status (*fn)(const algmat_problem*, const algmat_options*, char**), const algmat_problem* p,
          const algmat_options* o) {
  char* out = nullptr;
  check(fn(p, o, &out));
  return json::parse(take(out));
}

MatroidH matroid_of(const algmat_problem* p, const algmat_options* o, bool differential) {
  algmat_matroid* raw = nullptr;
  check(differential ? algmat_differential_matroid(p, o, &raw) : algmat_algebraic_matroid(p, o, &raw));
  return MatroidH(raw, &algmat_matroid_free);
}

json matroid_doc(const algmat_matroid* m) {
  char* out = nullptr;
  check(algmat_matroid_json(m, &out));
  return json::parse(take(out));
}

std::vector<std::uint64_t> parse_vector(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18)
      throw Failure{ALGMAT_E_INVALID_ARGUMENT, std::string(flag) + ": expected comma-separated non-negative integers"};
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw Failure{ALGMAT_E_INVALID_ARGUMENT, std::string(flag) + ": empty vector"};
  return out;
}

// Text rendering ------------------------------------------------------------

std::string set_text(const json& idx, const json& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += idx[i].is_string() ? idx[i].get<std::string>() : labels[idx[i].get<std::size_t>()].get<std::string>();
  }
  return s + "}";
}

void print_sets(std::ostream& os, const char* title, const json& sets, const json& labels) {
  os << title << " (" << sets.size() << "):\n";
  for (const auto& s : sets) os << "  " << set_text(s, labels) << "\n";
}

void print_matrix(std::ostream& os, const char* title, const json& rows) {
  os << title << ":\n";
  if (rows.is_null()) {
    os << "  (none)\n";
    return;
  }
  if (rows.empty()) os << "  (no rows)\n";
  for (const auto& r : rows) {
    os << "  [";
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? ", " : "") << r[j].get<std::string>();
    os << "]\n";
  }
}

std::string labels_line(const json& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : " ") + l.get<std::string>();
  return s;
}

void print_matroid_summary(std::ostream& os, const json& m, bool bases, bool circuits) {
  os << "ground set: " << labels_line(m["labels"]) << "\n";
  os << "rank: " << m["rank"].get<std::size_t>() << "\n";
  if (bases) print_sets(os, "bases", m["bases"], m["labels"]);
  if (circuits) print_sets(os, "circuits", m["circuits"], m["labels"]);
}

std::string point_text(const json& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + pt[i].get<std::string>();
  return s + ")";
}

void print_specialization(std::ostream& os, const json& r) {
  os << "point: " << point_text(r["point"]) << "\n";
  os << "on variety: " << (r["on_variety"].get<bool>() ? "yes" : "no") << "\n";
  if (!r["denominator_failures"].empty()) {
    os << "vanishing denominators at entries:";
    for (const auto& e : r["denominator_failures"]) os << " (" << e[0] << "," << e[1] << ")";
    os << "\n";
  }
  if (!r["basis_minor_failures"].empty())
    print_sets(os, "bases whose certifying minor vanishes", r["basis_minor_failures"], r["vars"]);
  print_matrix(os, "specialized matrix", r["matrix"]);
  if (!r["matroid_at_point"].is_null()) os << "rank at point: " << r["matroid_at_point"]["rank"] << "\n";
  os << "matroid preserved: "
     << (r["matches"].is_null() ? "undetermined" : r["matches"].get<bool>() ? "yes" : "no") << "\n";
}

// Output ---------------------------------------------------------------------

void emit(Context& ctx, json result, const std::function<void(std::ostream&)>& text) {
  if (ctx.common.json_out) {
    json inputs = json::array();
    for (const auto& [path, digest] : ctx.inputs) inputs.push_back(json{{"path", path}, {"digest", digest}});
    json doc{{"schema", 1}, {"command", ctx.command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
    if (ctx.common.timing)
      doc["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ctx.start).count();
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& [path, digest] : ctx.inputs) std::cout << "input: " << path << " (digest " << digest << ")\n";
    text(std::cout);
    if (ctx.common.timing)
      std::cout << "time: "
                << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ctx.start).count()
                << " ms\n";
  }
}

int report_failure(const Context& ctx, const Failure& f) {
  const bool math = algmat_status_is_math_failure(f.status);
  if (ctx.common.json_out) {
    json err{{"kind", algmat_status_name(f.status)}, {"message", f.message}};
    if (f.line) {
      err["line"] = f.line;
      err["column"] = f.column;
    }
    std::cout << json{{"schema", 1}, {"command", ctx.command}, {"error", std::move(err)}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << algmat_status_name(f.status) << ": " << f.message << "\n";
  }
  return math ? 2 : 1;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--order", c.order, "Term order on elimination blocks")->check(CLI::IsMember({"lex", "grevlex"}));
  sub->add_flag("--json", c.json_out, "Print a JSON report");
  sub->add_option("--seed", c.seed, "Seed for sampled points");
  sub->add_option("--bound", c.bound, "Sampled parameters lie in [-bound, bound]")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", c.jobs, "Worker threads for independence tests")->check(CLI::PositiveNumber);
  sub->add_option("--max-pairs", c.max_pairs, "Cap on Buchberger S-pairs per basis");
  sub->add_flag("--reduced-gb-generators", c.reduced_gb,
                "Recompute the differential matroid from the reduced Groebner basis and require equality");
  sub->add_flag("--timing", c.timing, "Include wall-clock time (breaks byte-identical output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic matroids of prime ideals: independence, differential representations, "
               "specialization, implicitization and Frobenius flock shifts."};
  app.require_subcommand(1);
  app.set_version_flag("--version", algmat_version());

  Context ctx;
  Common& c = ctx.common;
  std::string file, point, a_text, b_text;
  std::uint64_t p_flag = 0;
  std::size_t candidates = 20;
  bool differential = false;
  std::vector<std::string> alg_files, diff_files;

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Ideal file")->required();
    add_common(sub, c);
    return sub;
  };
  CLI::App* matroid = file_cmd("matroid", "Algebraic matroid of the ideal");
  CLI::App* diff = file_cmd("diff-matroid", "Differential matroid with the Jacobian and kernel-basis matrix");
  CLI::App* circuits = file_cmd("circuits", "Circuits of the algebraic (or differential) matroid");
  circuits->add_flag("--differential", differential, "Use the differential matroid");
  CLI::App* bases = file_cmd("bases", "Bases of the algebraic (or differential) matroid");
  bases->add_flag("--differential", differential, "Use the differential matroid");
  CLI::App* jacobian = file_cmd("jacobian", "Jacobian matrix over the fraction field");
  CLI::App* represent = file_cmd("represent", "Characteristic-zero linear representation over the ground field");
  represent->add_option("--point", point, "Candidate point v1,v2,... (default: sampled from the map)");
  represent->add_option("--candidates", candidates, "Number of sampled candidates")->check(CLI::PositiveNumber);
  CLI::App* specialize = file_cmd("specialize", "Evaluate the differential representation at a point");
  specialize->add_option("--point", point, "Point v1,v2,... (default: sampled from the map)");
  CLI::App* implicitize = file_cmd("implicitize", "Vanishing ideal of the map's image");
  CLI::App* sample = file_cmd("sample", "Sample a point of the variety from the map");
  CLI::App* flock = file_cmd("flock", "Frobenius flock shift");
  flock->add_option("--p", p_flag, "Characteristic (must match the file's field)")->required();
  flock->add_option("--a", a_text, "Exponents a_i (one value or one per variable)")->required();
  flock->add_option("--b", b_text, "Exponents b_i (one value or one per variable)")->required();
  CLI::App* check_cmd = file_cmd("check", "Evaluate the file's assert lines");

  CLI::App* compare = app.add_subcommand("compare", "Compare two matroids for equality and isomorphism");
  compare->add_option("--algebraic", alg_files, "Ideal file whose algebraic matroid is compared")->take_all();
  compare->add_option("--differential", diff_files, "Ideal file whose differential matroid is compared")->take_all();
  add_common(compare, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  ctx.command = app.get_subcommands().front()->get_name();
  ctx.start = std::chrono::steady_clock::now();
  try {
    Options opts = make_options(c);
    const algmat_options* o = opts.get();

    if (compare->parsed()) {
      if (alg_files.size() + diff_files.size() != 2)
        throw Failure{ALGMAT_E_INVALID_ARGUMENT, "compare needs exactly two matroids (--algebraic/--differential)"};
      std::vector<std::pair<std::string, bool>> sides;
      for (const auto& f : alg_files) sides.emplace_back(f, false);
      for (const auto& f : diff_files) sides.emplace_back(f, true);
      Problem p0 = load(ctx, sides[0].first);
      Problem p1 = load(ctx, sides[1].first);
      MatroidH m0 = matroid_of(p0.get(), o, sides[0].second);
      MatroidH m1 = matroid_of(p1.get(), o, sides[1].second);
      char* out = nullptr;
      check(algmat_matroid_compare_json(m0.get(), m1.get(), &out));
      json r = json::parse(take(out));
      r["left"] = json{{"path", sides[0].first}, {"kind", sides[0].second ? "differential" : "algebraic"},
                       {"matroid", matroid_doc(m0.get())}};
      r["right"] = json{{"path", sides[1].first}, {"kind", sides[1].second ? "differential" : "algebraic"},
                        {"matroid", matroid_doc(m1.get())}};
      emit(ctx, r, [&](std::ostream& os) {
        os << "left:  " << r["left"]["kind"].get<std::string>() << " matroid of " << sides[0].first << " (rank "
           << r["left"]["matroid"]["rank"] << ")\n";
        os << "right: " << r["right"]["kind"].get<std::string>() << " matroid of " << sides[1].first << " (rank "
           << r["right"]["matroid"]["rank"] << ")\n";
        os << (r["equal"].get<bool>() ? "equal" : "not equal") << "\n";
        os << "isomorphic: "
           << (r["isomorphic"].is_null() ? "not checked (ground set too large)"
                                         : r["isomorphic"].get<bool>() ? "yes" : "no")
           << "\n";
        if (!r["equal"].get<bool>()) {
          print_sets(os, "minimal distinguishing sets", r["distinguishing_sets"], json::array());
          print_sets(os, "bases of exactly one matroid", r["distinguishing_bases"], json::array());
        }
      });
      return 0;
    }

    Problem prob = load(ctx, file);
    const algmat_problem* p = prob.get();

    if (matroid->parsed() || circuits->parsed() || bases->parsed()) {
      const bool dif = differential && !matroid->parsed();
      MatroidH m = matroid_of(p, o, dif);
      json r = matroid_doc(m.get());
      r["kind"] = dif ? "differential" : "algebraic";
      emit(ctx, r, [&](std::ostream& os) {
        os << (dif ? "differential" : "algebraic") << " matroid\n";
        print_matroid_summary(os, r, !circuits->parsed(), !bases->parsed());
      });
    } else if (diff->parsed()) {
      json r = call(algmat_differential_json, p, o);
      emit(ctx, r, [&](std::ostream& os) {
        print_matrix(os, "Jacobian", r["jacobian"]);
        print_matrix(os, "kernel basis", r["rep"]);
        os << "differential matroid\n";
        print_matroid_summary(os, r["matroid"], true, true);
        os << "loops: " << (r["loops"].empty() ? "none" : labels_line(r["loops"])) << "\n";
      });
    } else if (jacobian->parsed()) {
      json r = call(algmat_jacobian_json, p, o);
      emit(ctx, r, [&](std::ostream& os) {
        os << "columns: " << labels_line(r["vars"]) << "\n";
        print_matrix(os, "Jacobian", r["jacobian"]);
      });
    } else if (specialize->parsed()) {
      char* out = nullptr;
      check(algmat_specialize_json(p, o, point.empty() ? nullptr : point.c_str(), &out));
      json r = json::parse(take(out));
      emit(ctx, r, [&](std::ostream& os) { print_specialization(os, r); });
    } else if (represent->parsed()) {
      char* out = nullptr;
      check(algmat_represent_json(p, o, point.empty() ? nullptr : point.c_str(), candidates, &out));
      json r = json::parse(take(out));
      emit(ctx, r, [&](std::ostream& os) {
        os << "accepted candidate " << r["candidate_index"].get<std::size_t>() + 1 << " of " << r["candidates"]
           << "\n";
        print_specialization(os, r);
      });
    } else if (implicitize->parsed()) {
      json r = call(algmat_implicitize_json, p, o);
      emit(ctx, r, [&](std::ostream& os) {
        os << "field " << r["field"].get<std::string>() << "\nvars " << labels_line(r["vars"]) << "\ngens\n";
        for (const auto& g : r["generators"]) os << "  " << g.get<std::string>() << "\n";
        os << "end\n";
        if (!r["equals_gens"].is_null())
          os << "# equal to the file's gens: " << (r["equals_gens"].get<bool>() ? "yes" : "no") << "\n";
      });
    } else if (sample->parsed()) {
      json r = call(algmat_sample_json, p, o);
      emit(ctx, r, [&](std::ostream& os) {
        os << "parameters " << labels_line(r["params"]) << " = " << point_text(r["parameters"]) << "\n";
        os << "point " << labels_line(r["vars"]) << " = " << point_text(r["point"]) << "\n";
        os << "on variety: " << (r["on_variety"].get<bool>() ? "yes" : "no") << "\n";
      });
    } else if (flock->parsed()) {
      json ideal = call(algmat_problem_ideal_json, p, o);
      const std::string field = ideal["field"].get<std::string>();
      const std::string expected = "GF(" + std::to_string(p_flag) + ")";
      // Over QQ the library reports CharZeroField itself.
      if (field.rfind("QQ", 0) != 0 && field.rfind(expected, 0) != 0)
        throw Failure{ALGMAT_E_INVALID_ARGUMENT, "--p " + std::to_string(p_flag) + " does not match field " + field};
      const auto av = parse_vector(a_text, "--a");
      const auto bv = parse_vector(b_text, "--b");
      char* out = nullptr;
      check(algmat_flock_json(p, o, av.data(), av.size(), bv.data(), bv.size(), &out));
      json r = json::parse(take(out));
      emit(ctx, r, [&](std::ostream& os) {
        os << "shifted ideal\ngens\n";
        for (const auto& g : r["ideal"]["generators"]) os << "  " << g.get<std::string>() << "\n";
        os << "end\n";
        print_matrix(os, "kernel basis", r["rep"]);
        os << "differential matroid\n";
        print_matroid_summary(os, r["diff_matroid"], true, true);
        os << "loops: " << (r["loops"].empty() ? "none" : labels_line(r["loops"])) << "\n";
        os << "algebraic matroid isomorphic to the unshifted one: "
           << (r["algebraic_isomorphic"].is_null() ? "not checked"
                                                   : r["algebraic_isomorphic"].get<bool>() ? "yes" : "no")
           << "\n";
      });
    } else if (check_cmd->parsed()) {
      json r = call(algmat_problem_check_json, p, o);
      emit(ctx, r, [&](std::ostream& os) {
        for (const auto& x : r["results"])
          os << (x["passed"].get<bool>() ? "PASS" : "FAIL") << " line " << x["line"] << ": assert "
             << x["assertion"].get<std::string>() << " (observed " << x["observed"].get<std::string>() << ")\n";
        os << (r["passed"].get<bool>() ? "all assertions passed" : "assertions failed") << "\n";
      });
      return r["passed"].get<bool>() ? 0 : 2;
    }
    return 0;
  } catch (const Failure& f) {
    return report_failure(ctx, f);
  } catch (const std::exception& e) {
    return report_failure(ctx, Failure{ALGMAT_E_INTERNAL, e.what()});
  }
}
