#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lievf/algstruct.hpp"
#include "lievf/catalog.hpp"
#include "lievf/cohomology.hpp"
#include "lievf/dsl.hpp"
#include "lievf/verify.hpp"

using json = nlohmann::ordered_json;
using namespace lievf;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"kind", "verification"}, {"tool", tool_version()}, {"entry", r.entry},  {"params", r.params},
          {"verbatim", r.verbatim}, {"pass", r.pass()},       {"checks", checks}};
}

std::string human(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.pass() ? "PASS" : "FAIL") << ' ' << r.entry;
  if (!r.params.empty()) os << " [" << r.params << ']';
  if (r.verbatim) os << " (verbatim)";
  os << '\n';
  for (const auto& c : r.checks) os << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name << ": " << c.detail << '\n';
  return os.str();
}

json to_json(const CohomologyReport& r) {
  json dims = json::array();
  for (int d : r.dims) dims.push_back(d);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json out = {{"kind", "cohomology"}, {"tool", tool_version()}, {"case", r.case_id}, {"params", r.params},
              {"dims", dims}};
  out["expected"] = r.expected ? json(*r.expected) : json(nullptr);
  out["match"] = r.match();
  out["pass"] = r.pass();
  out["checks"] = checks;
  return out;
}

std::string human(const CohomologyReport& r) {
  std::ostringstream os;
  os << (r.pass() ? "PASS" : "FAIL") << ' ' << r.case_id << " [" << r.params << "] dims (";
  for (std::size_t i = 0; i < r.dims.size(); ++i) os << (i ? ", " : "") << r.dims[i];
  os << ")";
  if (r.expected) os << ", expected h2 = " << *r.expected << (r.match() ? ", match" : ", MISMATCH");
  os << '\n';
  for (const auto& c : r.checks) os << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name << ": " << c.detail << '\n';
  return os.str();
}

/// Report directory from the flag, then LIEVF_REPORT_DIR; empty means no files.
std::string report_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LIEVF_REPORT_DIR")) return env;
  return "";
}

std::string file_safe(std::string s) {
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_' && ch != '.') ch = '_';
  return s;
}

void write_report(const std::string& dir, const std::string& name, const json& j) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / (file_safe(name) + ".json")) << j.dump(2) << '\n';
}

json field_json(const VectorField& v) { return print(v); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-dimensional Lie algebras of vector fields"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string report_flag;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--report-dir", report_flag, "write per-report JSON files here (default: $LIEVF_REPORT_DIR)");

  std::vector<std::string> bracket_args;
  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two fields or lifted operators");
  bracket_cmd->add_option("exprs", bracket_args, "two expressions")->required()->expected(2);

  std::vector<std::string> closure_args;
  bool saturate = false;
  int closure_dim = 3;
  auto* closure_cmd = app.add_subcommand("closure", "closure check of a generator list (file or expressions)");
  closure_cmd->add_option("inputs", closure_args, "a file with one field per line, or field expressions")->required();
  closure_cmd->add_flag("--saturate", saturate, "bracket to a fixpoint instead of checking closure");
  closure_cmd->add_option("--dim", closure_dim, "space dimension")->check(CLI::Range(1, 3));

  std::string entry_id, param_text;
  bool verbatim = false;
  auto* verify_cmd = app.add_subcommand("verify", "verify one catalog entry");
  verify_cmd->add_option("entry", entry_id)->required();
  verify_cmd->add_option("-P,--params", param_text, "k=v,... (ms=0;2, pt=t(t-1))");
  verify_cmd->add_flag("--verbatim", verbatim, "use the printed form of an erratum");

  std::string grid_text = "small";
  int jobs = 1;
  auto* all_cmd = app.add_subcommand("verify-all", "verify every entry over a parameter grid");
  all_cmd->add_option("--grid", grid_text)->check(CLI::IsMember({"small", "full"}));
  all_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  std::string case_id;
  auto* coh_cmd = app.add_subcommand("cohomology", "relative cohomology of a case with a module");
  coh_cmd->add_option("case", case_id)->required();
  coh_cmd->add_option("-P,--params", param_text);

  auto* classify_cmd = app.add_subcommand("classify", "isotropy and foliation report of an entry");
  classify_cmd->add_option("entry", entry_id)->required();
  classify_cmd->add_option("-P,--params", param_text);

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog queries");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
  catalog_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  const std::string rdir = report_dir(report_flag);

  try {
    if (bracket_cmd->parsed()) {
      ParsedValue a = parse(bracket_args[0], 3), b = parse(bracket_args[1], 3);
      std::string out;
      if (std::holds_alternative<VectorField>(a) && std::holds_alternative<VectorField>(b)) {
        const auto& fa = std::get<VectorField>(a);
        const auto& fb = std::get<VectorField>(b);
        const int d = std::max(fa.dim(), fb.dim());
        out = print(bracket(fa.embedded(d), fb.embedded(d)));
      } else {
        auto lift = [](const ParsedValue& v) {
          if (const auto* f = std::get_if<VectorField>(&v)) return LiftedOperator(*f);
          if (const auto* o = std::get_if<LiftedOperator>(&v)) return *o;
          throw SemanticError(0, "a bare function has no bracket");
        };
        LiftedOperator oa = lift(a), ob = lift(b);
        const int d = std::max(oa.dim(), ob.dim());
        oa.field = oa.field.embedded(d);
        ob.field = ob.field.embedded(d);
        out = print(op_bracket(oa, ob));
      }
      if (as_json)
        std::cout << json{{"kind", "bracket"}, {"result", out}}.dump(2) << '\n';
      else
        std::cout << out << '\n';
      return kPass;
    }

    if (closure_cmd->parsed()) {
      std::vector<std::string> texts;
      if (closure_args.size() == 1 && std::filesystem::is_regular_file(closure_args[0])) {
        std::ifstream in(closure_args[0]);
        for (std::string line; std::getline(in, line);)
          if (!line.empty() && line[0] != '#') texts.push_back(line);
      } else {
        texts = closure_args;
      }
      std::vector<VectorField> gens;
      for (const auto& t : texts) gens.push_back(parse_field(t, closure_dim));
      json out = {{"kind", "closure"}};
      int rc = kPass;
      if (saturate) {
        SpannedAlgebra a = lie_saturate(gens);
        json basis = json::array();
        for (const auto& v : a.basis()) basis.push_back(field_json(v));
        out["dim"] = a.dim();
        out["basis"] = basis;
        out["pass"] = true;
      } else {
        ClosureOutcome co = try_closure(gens);
        out["pass"] = co.algebra.has_value();
        if (co.algebra) {
          out["dim"] = co.algebra->dim();
          json sc = json::array();
          const auto& c = co.algebra->structure();
          for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
              for (std::size_t k = 0; k < c[i][j].size(); ++k)
                if (c[i][j][k] != 0) sc.push_back({i, j, k, to_string(c[i][j][k])});
          out["structure"] = sc;
        } else {
          out["witness"] = co.witness;
          rc = kFail;
        }
      }
      if (as_json)
        std::cout << out.dump(2) << '\n';
      else if (out["pass"].get<bool>())
        std::cout << "PASS closure dim " << out["dim"].get<int>() << '\n';
      else
        std::cout << "FAIL closure: " << out["witness"].get<std::string>() << '\n';
      return rc;
    }

    if (verify_cmd->parsed()) {
      const CatalogEntry& e = find_entry(entry_id);
      Params p = Params::parse(param_text);
      const auto start = std::chrono::steady_clock::now();
      VerificationReport r = verify_entry(e, p, verbatim);
      json j = to_json(r);
      j["timing_ms"] = elapsed_ms(start);
      write_report(rdir, r.entry + (r.params.empty() ? "" : "_" + r.params) + (verbatim ? "_verbatim" : ""), j);
      std::cout << (as_json ? j.dump(2) + "\n" : human(r));
      return r.pass() ? kPass : kFail;
    }

    if (all_cmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      auto reports = verify_all(grid_text == "full" ? Grid::Full : Grid::Small, jobs);
      const double total_ms = elapsed_ms(start);
      bool ok = true;
      int passed = 0;
      json arr = json::array();
      for (const auto& r : reports) {
        ok = ok && r.pass();
        passed += r.pass() ? 1 : 0;
        json j = to_json(r);
        write_report(rdir, r.entry + (r.params.empty() ? "" : "_" + r.params), j);
        if (as_json)
          arr.push_back(std::move(j));
        else if (!r.pass())
          std::cout << human(r);
      }
      if (as_json)
        std::cout << json{{"kind", "verify-all"}, {"grid", grid_text}, {"total", reports.size()}, {"passed", passed},
                          {"pass", ok}, {"timing_ms", total_ms}, {"reports", arr}}
                         .dump(2)
                  << '\n';
      else
        std::cout << (ok ? "PASS" : "FAIL") << " verify-all --grid " << grid_text << ": " << passed << "/"
                  << reports.size() << " passed\n";
      return ok ? kPass : kFail;
    }

    if (coh_cmd->parsed()) {
      Params p = Params::parse(param_text);
      const auto start = std::chrono::steady_clock::now();
      CohomologyReport r = run_case(find_case(case_id), p);
      json j = to_json(r);
      j["timing_ms"] = elapsed_ms(start);
      write_report(rdir, r.case_id + "_" + r.params, j);
      std::cout << (as_json ? j.dump(2) + "\n" : human(r));
      return r.pass() ? kPass : kFail;
    }

    if (classify_cmd->parsed()) {
      const CatalogEntry& e = find_entry(entry_id);
      Params p = Params::parse(param_text);
      ClosureOutcome co = try_closure(construct_entry(entry_id, p));
      if (!co.algebra) {
        std::cout << (as_json ? json{{"kind", "classify"}, {"pass", false}, {"witness", co.witness}}.dump(2)
                              : "FAIL closure: " + co.witness)
                  << '\n';
        return kFail;
      }
      ClassifyResult cr = classify_entry(*co.algebra, e.shape);
      json j = {{"kind", "classify"}, {"entry", e.id}, {"params", p.to_string()}, {"dim", co.algebra->dim()},
                {"rank", cr.isotropy.rank}, {"isotropy_dim", cr.isotropy.isotropy.dim()}};
      bool ok = true;
      if (cr.foliation) {
        const auto& f = *cr.foliation;
        json line = json::array();
        for (const auto& v : f.line) line.push_back(to_string(v));
        j["tag"] = to_string(f.tag);
        j["ideal_dim"] = f.ideal.dim();
        j["line"] = line;
        ok = to_string(f.tag) == to_string(e.shape);
      }
      if (cr.lines) {
        j["invariant_lines"] = cr.lines->rational_lines.size() + cr.lines->quadratic_lines.size() +
                               cr.lines->families.size();
        j["complete"] = cr.lines->complete();
        j["certificate"] = cr.lines->certificate;
        ok = !cr.lines->has_lines() && cr.lines->complete();
      }
      j["expected"] = to_string(e.shape);
      j["pass"] = ok;
      if (as_json) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (ok ? "PASS" : "FAIL") << ' ' << e.id << ": dim " << co.algebra->dim() << ", rank "
                  << cr.isotropy.rank;
        if (cr.foliation) std::cout << ", tag " << j["tag"].get<std::string>();
        if (cr.lines) std::cout << ", invariant lines " << j["invariant_lines"].get<std::size_t>();
        std::cout << ", expected " << to_string(e.shape) << '\n';
      }
      return ok ? kPass : kFail;
    }

    if (list_cmd->parsed()) {
      json arr = json::array();
      for (const auto& e : catalog()) {
        json j = {{"id", e.id},           {"series", to_string(e.series)}, {"space_dim", e.space_dim},
                  {"params", e.params_doc}, {"solvable", e.solvable},      {"shape", to_string(e.shape)}};
        if (e.erratum)
          j["erratum"] = {{"verbatim", e.erratum->verbatim},
                          {"corrected", e.erratum->corrected},
                          {"notation_only", e.erratum->notation_only},
                          {"witness", e.erratum->witness}};
        arr.push_back(std::move(j));
        if (!as_json)
          std::cout << e.id << '\t' << to_string(e.series) << '\t' << to_string(e.shape) << '\t'
                    << (e.params_doc.empty() ? "-" : e.params_doc) << (e.erratum ? "\t[erratum]" : "") << '\n';
      }
      if (as_json) std::cout << json{{"kind", "catalog"}, {"entries", arr}}.dump(2) << '\n';
      return kPass;
    }
  } catch (const BadParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownEntry& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
