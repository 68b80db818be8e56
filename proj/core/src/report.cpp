#include "grouplab/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "grouplab/errors.hpp"

#ifndef GROUPLAB_VERSION
#define GROUPLAB_VERSION "0.0.0"
#endif

namespace grouplab {

namespace {

using ojson = nlohmann::ordered_json;

ojson cyclotomic_value(const Cyclotomic& c) {
  ojson out;
  out["conductor"] = c.conductor();
  auto coeffs = ojson::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_string(q));
  out["coeffs"] = std::move(coeffs);
  return out;
}

ojson outcome_value(const TheoremOutcome& o) {
  if (!o) return nullptr;
  return *o;
}

ojson record_value(const VerificationRecord& r) {
  ojson out;
  out["group"] = r.group;
  out["order"] = r.order;
  out["gvz"] = r.gvz;
  out["flat"] = r.flat;
  out["rational"] = r.rational;
  out["cm_index"] = r.cm_index;
  out["class"] = r.nilpotence_class ? ojson(*r.nilpotence_class) : ojson(nullptr);
  out["cd"] = r.cd;
  auto qp = ojson::object();
  for (const auto& [p, v] : r.qp) qp[std::to_string(p)] = v;
  out["qp"] = std::move(qp);
  out["squares_are_classes"] = outcome_value(r.squares_are_classes);
  auto theorems = ojson::object();
  for (const auto& [name, o] : r.theorems) theorems[name] = outcome_value(o);
  out["theorems"] = std::move(theorems);
  out["violations"] = r.violations;
  return out;
}

std::string dump(const ojson& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

const char* version() { return GROUPLAB_VERSION; }

std::string cyclotomic_json(const Cyclotomic& c) { return cyclotomic_value(c).dump(); }

Cyclotomic parse_cyclotomic_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw InputError(std::string("cyclotomic value is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("conductor") || !j["conductor"].is_number_unsigned() ||
      !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw InputError("cyclotomic value needs \"conductor\" and \"coeffs\"");
  }
  const auto m = j["conductor"].get<std::uint64_t>();
  if (m == 0) throw InputError("conductor must be positive");
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw InputError("coefficients must be \"num/den\" strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Cyclotomic::from_coeffs(m, std::move(coeffs));
}

std::string table_json(const CharacterTable& t, bool pretty) {
  const auto& g = t.group();
  ojson out;
  out["group"] = g.name();
  out["order"] = g.order();
  out["exponent"] = g.exponent();
  auto classes = ojson::array();
  for (const auto& c : t.classes().classes) {
    ojson entry;
    entry["rep"] = c.rep;
    entry["size"] = c.size();
    entry["element_order"] = g.element_order(c.rep);
    entry["centralizer_order"] = c.centralizer_order;
    classes.push_back(std::move(entry));
  }
  out["classes"] = std::move(classes);
  auto degrees = ojson::array();
  auto characters = ojson::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    degrees.push_back(t.degree(i));
    auto row = ojson::array();
    for (const auto& v : t.row(i)) row.push_back(cyclotomic_value(v));
    characters.push_back(std::move(row));
  }
  out["degrees"] = std::move(degrees);
  out["characters"] = std::move(characters);
  return dump(out, pretty);
}

std::string table_text(const CharacterTable& t) {
  const auto& g = t.group();
  const auto& classes = t.classes().classes;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""}, sizes{"size"}, orders{"order"};
  for (std::size_t j = 0; j < classes.size(); ++j) {
    header.push_back("c" + std::to_string(j));
    sizes.push_back(std::to_string(classes[j].size()));
    orders.push_back(std::to_string(g.element_order(classes[j].rep)));
  }
  cells.push_back(header);
  cells.push_back(sizes);
  cells.push_back(orders);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1)};
    for (const auto& v : t.row(i)) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream os;
  os << g.name() << "  order " << g.order() << "  classes " << classes.size() << "\n";
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << (j == 0 ? "" : "  ") << std::setw(static_cast<int>(width[j])) << row[j];
    }
    os << "\n";
  }
  return os.str();
}

std::string record_json(const VerificationRecord& record, bool pretty) {
  return dump(record_value(record), pretty);
}

std::string write_report(std::vector<VerificationRecord> records, const ReportMeta& meta) {
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& a, const auto& b) { return a.group < b.group; });
  ojson out;
  out["tool"] = "grouplab";
  out["version"] = version();
  out["suite"] = meta.suite;
  ojson caps;
  caps["order_cap"] = meta.order_cap;
  caps["normal_subgroup_cap"] = meta.normal_subgroup_cap;
  caps["basics_max_order"] = meta.basics_max_order;
  caps["product_max_order"] = meta.product_max_order;
  out["caps"] = std::move(caps);
  auto list = ojson::array();
  std::size_t violations = 0;
  for (const auto& r : records) {
    violations += r.violations.size();
    list.push_back(record_value(r));
  }
  out["records"] = std::move(list);
  out["violations"] = violations;
  return out.dump(2) + "\n";
}

std::string write_report(std::vector<VerificationRecord> records) {
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.group < b.group; });
  ojson out;
  auto list = ojson::array();
  std::size_t violations = 0;
  for (const auto& r : records) {
    violations += r.violations.size();
    list.push_back(record_value(r));
  }
  out["records"] = std::move(list);
  out["violations"] = violations;
  return out.dump();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace grouplab
