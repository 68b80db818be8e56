#include "grouplab/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "grouplab/arith.hpp"
#include "grouplab/char_table.hpp"
#include "grouplab/corpus.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/report.hpp"
#include "grouplab/theory.hpp"
#include "grouplab/verify.hpp"

namespace grouplab {

namespace {

std::uint64_t parse_parameter(const std::string& predicate, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("predicate '" + predicate + "' needs a positive integer parameter");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw InputError("predicate parameter out of range: " + text);
  }
}

int print_bool(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << "\n";
  return value ? kExitPass : kExitViolation;
}

int run_check(const std::string& spec, const std::string& predicate, std::ostream& out) {
  const auto colon = predicate.find(':');
  const std::string name = predicate.substr(0, colon);
  const std::string param = colon == std::string::npos ? std::string() : predicate.substr(colon + 1);
  const bool wants_param = name == "qp" || name == "cm";
  if (wants_param != (colon != std::string::npos)) {
    throw InputError("unknown predicate '" + predicate + "'");
  }
  if (name != "gvz" && name != "flat" && name != "rational" && name != "qp" && name != "cm" && name != "class" &&
      name != "cd") {
    throw InputError("unknown predicate '" + predicate + "'");
  }
  std::uint64_t n = 0;
  if (wants_param) {
    n = parse_parameter(predicate, param);
    if (name == "qp" && !is_prime(n)) throw InputError("qp:<p> needs a prime p");
    if (name == "cm" && n == 0) throw InputError("cm:<n> needs n >= 1");
  }

  const auto g = build_named_group(spec);
  if (name == "class") {
    const auto c = nilpotence_class(g);
    if (!c) {
      out << "not nilpotent\n";
      return kExitViolation;
    }
    out << *c << "\n";
    return kExitPass;
  }
  const auto t = character_table(g);
  if (name == "gvz") return print_bool(out, is_gvz_group(t));
  if (name == "flat") return print_bool(out, is_flat_group(t));
  if (name == "rational") return print_bool(out, is_rational_group(t));
  if (name == "qp") return print_bool(out, values_in_qp_group(t, n));
  if (name == "cm") return print_bool(out, min_cm_index(t) <= n);
  const auto cd = degree_set(t);
  for (std::size_t i = 0; i < cd.size(); ++i) out << (i ? "," : "") << cd[i];
  out << "\n";
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character tables and character-theoretic checks for finite groups", "grouplab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  std::string group;
  bool as_json = false;
  bool pretty = false;
  auto* table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("--group", group, "Group spec, e.g. quaternion:8")->required();
  auto* json_flag = table->add_flag("--json", as_json, "Compact JSON");
  table->add_flag("--pretty", pretty, "Indented JSON")->excludes(json_flag);

  std::string predicate;
  auto* check = app.add_subcommand("check", "Evaluate one predicate; exit 0 when it holds");
  check->add_option("--group", group, "Group spec")->required();
  check->add_option("--predicate", predicate, "gvz|flat|rational|qp:<p>|cm:<n>|class|cd")->required();

  VerifyOptions vopt;
  std::string suite = "all";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run theorem checks over a corpus and emit a JSON report");
  verify->add_option("--suite", suite, "orthogonality|flat-gvz|basics|taketa|cm|squaring|all")
      ->check(CLI::IsMember({"orthogonality", "flat-gvz", "basics", "taketa", "cm", "squaring", "all"}));
  verify->add_option("--family", vopt.families, "Family name or explicit group spec (repeatable)");
  verify->add_option("--max-order", vopt.max_order, "Largest built-in corpus order")->check(CLI::PositiveNumber);
  std::string file;
  auto* file_opt = verify->add_option("--file", file, "Corpus JSON file");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--basics-max-order", vopt.suite.basics_max_order, "Largest order for the basics sweep");
  verify->add_option("--product-max-order", vopt.product_max_order, "Largest order for product checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*table) {
      const auto t = character_table(build_named_group(group));
      if (as_json || pretty) {
        out << table_json(t, pretty) << "\n";
      } else {
        out << table_text(t);
      }
      return kExitPass;
    }
    if (*check) return run_check(group, predicate, out);

    vopt.suite_name = suite;
    vopt.suite.selection = SuiteSelection::only(suite);
    vopt.order_cap = configured_order_cap();
    if (*file_opt) vopt.file = file;
    const auto groups = verify_corpus(vopt);
    const auto records = run_verification(groups, vopt);
    ReportMeta meta;
    meta.suite = suite;
    meta.order_cap = vopt.order_cap;
    meta.normal_subgroup_cap = kDefaultNormalSubgroupCap;
    meta.basics_max_order = vopt.suite.basics_max_order;
    meta.product_max_order = vopt.product_max_order;
    const auto report = write_report(records, meta);
    std::size_t violations = 0;
    for (const auto& r : records) violations += r.violations.size();
    if (out_path.empty()) {
      out << report;
    } else {
      write_text_file(out_path, report);
      out << records.size() << " groups, " << violations << " violations\n";
    }
    for (const auto& r : records) {
      for (const auto& v : r.violations) err << r.group << ": " << v << "\n";
    }
    return violations == 0 ? kExitPass : kExitViolation;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace grouplab
