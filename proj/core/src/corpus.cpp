#include "grouplab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "grouplab/arith.hpp"
#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

using json = nlohmann::json;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

class SpecParser {
 public:
  explicit SpecParser(std::string text) : text_(std::move(text)) {}

  GroupSpec parse() {
    auto spec = parse_spec();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad group spec '" + text_ + "': " + why);
  }

  GroupSpec parse_spec() {
    static constexpr std::string_view kProduct = "product(";
    if (text_.compare(pos_, kProduct.size(), kProduct) == 0) {
      pos_ += kProduct.size();
      GroupSpec spec;
      spec.family = "product";
      spec.factors.push_back(parse_spec());
      expect(',');
      spec.factors.push_back(parse_spec());
      expect(')');
      return spec;
    }
    const auto end = text_.find_first_of(",()", pos_);
    const std::string atom = text_.substr(pos_, end == std::string::npos ? std::string::npos : end - pos_);
    pos_ = end == std::string::npos ? text_.size() : end;
    return parse_atom(atom);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number(const std::string& token) const {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail("'" + token + "' is not a non-negative integer");
    }
    try {
      return std::stoull(token);
    } catch (const std::exception&) {
      fail("'" + token + "' is out of range");
    }
  }

  GroupSpec parse_atom(const std::string& atom) const {
    std::vector<std::string> parts;
    std::stringstream ss(atom);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (!atom.empty() && atom.back() == ':') parts.emplace_back();
    if (parts.empty() || parts[0].empty()) fail("missing family name");

    GroupSpec spec;
    spec.family = parts[0];
    const auto& f = spec.family;
    auto want = [&](std::size_t count) {
      if (parts.size() != count + 1) {
        fail(f + " takes " + std::to_string(count) + " parameter(s)");
      }
    };

    if (f == "frobenius21") {
      want(0);
    } else if (f == "cyclic" || f == "dihedral" || f == "quaternion" || f == "semidihedral" ||
               f == "symmetric" || f == "alternating") {
      want(1);
      const auto n = number(parts[1]);
      spec.params = {n};
      if (n == 0) fail("order must be positive");
      if (f == "dihedral" && (n < 4 || n % 2 != 0)) fail("dihedral:n needs an even group order n >= 4");
      if (f == "quaternion" && (n < 8 || !is_power_of_two(n))) fail("quaternion:n needs n = 2^k >= 8");
      if (f == "semidihedral" && (n < 16 || !is_power_of_two(n))) fail("semidihedral:n needs n = 2^k >= 16");
      if ((f == "symmetric" || f == "alternating") && n > 20) fail("degree too large");
    } else if (f == "elemabelian" || f == "heisenberg") {
      want(2);
      const auto p = number(parts[1]);
      const auto k = number(parts[2]);
      spec.params = {p, k};
      if (!is_prime(p)) fail("p must be prime");
      if (k == 0) fail("rank must be positive");
      if (f == "heisenberg" && p == 2) fail("heisenberg:p:n needs an odd prime p");
    } else if (f == "extraspecial") {
      want(3);
      const auto p = number(parts[1]);
      const auto k = number(parts[2]);
      spec.params = {p, k};
      if (!is_prime(p)) fail("p must be prime");
      if (k == 0) fail("n must be positive");
      if (parts[3] != "+" && parts[3] != "-") fail("extraspecial type must be + or -");
      spec.sign = parts[3][0];
    } else {
      fail("unknown family '" + f + "'");
    }
    return spec;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

Group from_rule(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                const std::vector<std::size_t>& gens, std::string name, std::size_t cap) {
  if (n > cap) throw CapExceeded("group order exceeds the configured cap of " + std::to_string(cap));
  std::vector<Permutation> perms;
  for (auto s : gens) {
    Permutation p(n);
    for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<std::uint32_t>(mul(x, s));
    perms.push_back(std::move(p));
  }
  return Group::from_permutations(n, perms, std::move(name), cap);
}

// <r, s | r^m, s r s^-1 = r^t, s^2 = r^c>, elements r^i s^j indexed i + m j.
Group metacyclic(std::uint64_t m, std::uint64_t t, std::uint64_t c, std::string name, std::size_t cap) {
  auto mul = [=](std::size_t x, std::size_t y) -> std::size_t {
    const std::uint64_t i = x % m, j = x / m, i2 = y % m, j2 = y / m;
    const std::uint64_t twisted = j == 1 ? (t * i2) % m : i2;
    std::uint64_t exp = (i + twisted) % m;
    std::uint64_t sj = j + j2;
    if (sj == 2) {
      exp = (exp + c) % m;
      sj = 0;
    }
    return exp + m * sj;
  };
  return from_rule(2 * m, mul, {1, static_cast<std::size_t>(m)}, std::move(name), cap);
}

// Heisenberg group over F_p of dimension 2n+1: (a, b, c)(a', b', c') =
// (a + a', b + b', c + c' + a.b').
Group heisenberg(std::uint64_t p, std::uint64_t n, std::string name, std::size_t cap) {
  const std::uint64_t order = checked_pow(p, 2 * n + 1);
  if (order > cap) throw CapExceeded("group order exceeds the configured cap of " + std::to_string(cap));
  const std::size_t dim = 2 * n + 1;
  auto decode = [=](std::size_t x) {
    std::vector<std::uint64_t> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = x % p;
      x /= p;
    }
    return v;
  };
  auto encode = [=](const std::vector<std::uint64_t>& v) {
    std::size_t x = 0;
    for (std::size_t i = dim; i-- > 0;) x = x * p + v[i];
    return x;
  };
  // Layout: v[0] = c, v[1..n] = a, v[n+1..2n] = b.
  auto mul = [=](std::size_t x, std::size_t y) {
    auto u = decode(x);
    auto w = decode(y);
    std::vector<std::uint64_t> out(dim);
    std::uint64_t dot = 0;
    for (std::size_t i = 1; i <= n; ++i) dot += u[i] * w[n + i];
    out[0] = (u[0] + w[0] + dot) % p;
    for (std::size_t i = 1; i < dim; ++i) out[i] = (u[i] + w[i]) % p;
    return encode(out);
  };
  std::vector<std::size_t> gens;
  for (std::size_t i = 1; i < dim; ++i) {
    std::vector<std::uint64_t> v(dim, 0);
    v[i] = 1;
    gens.push_back(encode(v));
  }
  return from_rule(order, mul, gens, std::move(name), cap);
}

// C_{p^2} x| C_p with the generator acting by x -> x^(1+p).
Group exponent_p2_extraspecial(std::uint64_t p, std::string name, std::size_t cap) {
  const std::uint64_t m = p * p;
  auto mul = [=](std::size_t x, std::size_t y) {
    const std::uint64_t a = x % m, b = x / m, a2 = y % m, b2 = y / m;
    const std::uint64_t twisted = a2 * pow_mod(1 + p, b, m) % m;
    return static_cast<std::size_t>((a + twisted) % m + m * ((b + b2) % p));
  };
  return from_rule(m * p, mul, {1, static_cast<std::size_t>(m)}, std::move(name), cap);
}

Element center_generator(const Group& g) {
  const auto z = center(g);
  for (auto x : z.members()) {
    if (g.element_order(x) == z.size()) return x;
  }
  throw InternalError("center is not cyclic");
}

// (A x B) / <(z_A, z_B^-1)> for central elements of equal order.
Group central_product(const Group& a, const Group& b, std::string name, std::size_t cap) {
  auto prod = direct_product(a, b, std::max<std::size_t>(cap, a.order() * b.order()));
  const Element za = center_generator(a);
  const Element zb = b.inv(center_generator(b));
  const auto glue = static_cast<Element>(za * b.order() + zb);
  std::vector<Element> gen{glue};
  auto q = quotient(prod, subgroup_closure(prod, gen));
  return q.group.renamed(std::move(name));
}

Group build_extraspecial(std::uint64_t p, std::uint64_t n, char sign, const std::string& name, std::size_t cap) {
  const std::uint64_t order = checked_pow(p, 2 * n + 1);
  if (order > cap) throw CapExceeded("group order exceeds the configured cap of " + std::to_string(cap));
  if (p != 2 && sign == '+') return heisenberg(p, n, name, cap);
  auto plus_block = [&] {
    return p == 2 ? metacyclic(4, 3, 0, "dihedral:8", cap) : heisenberg(p, 1, "heisenberg", cap);
  };
  Group acc = sign == '+' ? plus_block()
                          : (p == 2 ? metacyclic(4, 3, 2, "quaternion:8", cap)
                                    : exponent_p2_extraspecial(p, "m(p)", cap));
  for (std::uint64_t i = 1; i < n; ++i) acc = central_product(acc, plus_block(), name, cap);
  return acc.renamed(name);
}

}  // namespace

std::string GroupSpec::text() const {
  if (family == "product") return "product(" + factors[0].text() + "," + factors[1].text() + ")";
  std::string out = family;
  for (auto v : params) out += ":" + std::to_string(v);
  if (sign != 0) out += std::string(":") + sign;
  return out;
}

std::uint64_t GroupSpec::order() const {
  if (family == "product") return checked_mul(factors[0].order(), factors[1].order());
  if (family == "frobenius21") return 21;
  if (family == "symmetric" || family == "alternating") {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= params[0]; ++i) f = checked_mul(f, i);
    return family == "alternating" && params[0] >= 2 ? f / 2 : f;
  }
  if (family == "elemabelian") return checked_pow(params[0], params[1]);
  if (family == "heisenberg" || family == "extraspecial") return checked_pow(params[0], 2 * params[1] + 1);
  return params[0];
}

GroupSpec parse_group_spec(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n') compact.push_back(c);
  }
  return SpecParser(compact).parse();
}

Group build_named_group(const GroupSpec& spec, std::size_t cap) {
  const auto order = spec.order();
  if (order > cap) {
    throw CapExceeded(spec.text() + " has order " + std::to_string(order) +
                      ", above the configured cap of " + std::to_string(cap));
  }
  const std::string name = spec.text();
  const auto& f = spec.family;
  if (f == "product") {
    auto a = build_named_group(spec.factors[0], cap);
    auto b = build_named_group(spec.factors[1], cap);
    return direct_product(a, b, cap).renamed(name);
  }
  if (f == "frobenius21") {
    Permutation shift(7), scale(7);
    for (std::uint32_t x = 0; x < 7; ++x) {
      shift[x] = (x + 1) % 7;
      scale[x] = (2 * x) % 7;
    }
    return Group::from_permutations(7, {shift, scale}, name, cap);
  }
  const auto n = spec.params[0];
  if (f == "cyclic") {
    Permutation cycle(n);
    for (std::uint64_t x = 0; x < n; ++x) cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
    return Group::from_permutations(n, {cycle}, name, cap);
  }
  if (f == "dihedral") return metacyclic(n / 2, n / 2 - 1, 0, name, cap);
  if (f == "quaternion") return metacyclic(n / 2, n / 2 - 1, n / 4, name, cap);
  if (f == "semidihedral") return metacyclic(n / 2, n / 4 - 1, 0, name, cap);
  if (f == "symmetric") {
    std::vector<Permutation> gens;
    if (n >= 2) {
      Permutation swap(n), cycle(n);
      for (std::uint64_t x = 0; x < n; ++x) {
        swap[x] = static_cast<std::uint32_t>(x);
        cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
      }
      std::swap(swap[0], swap[1]);
      gens = {swap, cycle};
    }
    return Group::from_permutations(n, gens, name, cap);
  }
  if (f == "alternating") {
    std::vector<Permutation> gens;
    for (std::uint64_t i = 2; i < n; ++i) {
      Permutation p(n);
      for (std::uint64_t x = 0; x < n; ++x) p[x] = static_cast<std::uint32_t>(x);
      p[0] = 1;
      p[1] = static_cast<std::uint32_t>(i);
      p[i] = 0;
      gens.push_back(std::move(p));
    }
    return Group::from_permutations(n, gens, name, cap);
  }
  if (f == "elemabelian") {
    const auto p = spec.params[0];
    const auto k = spec.params[1];
    std::vector<Permutation> gens;
    for (std::uint64_t b = 0; b < k; ++b) {
      Permutation perm(p * k);
      for (std::uint64_t x = 0; x < p * k; ++x) perm[x] = static_cast<std::uint32_t>(x);
      for (std::uint64_t x = 0; x < p; ++x) perm[b * p + x] = static_cast<std::uint32_t>(b * p + (x + 1) % p);
      gens.push_back(std::move(perm));
    }
    return Group::from_permutations(p * k, gens, name, cap);
  }
  if (f == "heisenberg") return heisenberg(spec.params[0], spec.params[1], name, cap);
  if (f == "extraspecial") return build_extraspecial(spec.params[0], spec.params[1], spec.sign, name, cap);
  throw InputError("unknown family '" + f + "'");
}

Group build_named_group(std::string_view spec, std::size_t cap) {
  return build_named_group(parse_group_spec(spec), cap);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "cyclic",      "dihedral",  "quaternion",   "semidihedral", "symmetric", "alternating",
      "elemabelian", "heisenberg", "extraspecial", "frobenius21",  "product"};
  return names;
}

std::vector<std::string> default_corpus(std::size_t max_order, const std::vector<std::string>& families) {
  std::vector<std::string> specs;
  for (std::uint64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 24, 25, 27, 32,
                          49, 64, 81, 125}) {
    specs.push_back("cyclic:" + std::to_string(n));
  }
  for (std::uint64_t n = 4; n <= 32; n += 2) specs.push_back("dihedral:" + std::to_string(n));
  for (std::uint64_t n : {36, 40, 48, 64, 96, 128, 192}) specs.push_back("dihedral:" + std::to_string(n));
  for (std::uint64_t n : {8, 16, 32, 64, 128}) specs.push_back("quaternion:" + std::to_string(n));
  for (std::uint64_t n : {16, 32, 64, 128}) specs.push_back("semidihedral:" + std::to_string(n));
  for (std::uint64_t n = 1; n <= 5; ++n) specs.push_back("symmetric:" + std::to_string(n));
  for (std::uint64_t n = 3; n <= 5; ++n) specs.push_back("alternating:" + std::to_string(n));
  for (auto [p, kmax] : {std::pair{2, 6}, {3, 4}, {5, 3}, {7, 2}}) {
    for (int k = 1; k <= kmax; ++k) specs.push_back("elemabelian:" + std::to_string(p) + ":" + std::to_string(k));
  }
  specs.push_back("heisenberg:3:1");
  specs.push_back("heisenberg:5:1");
  for (const char* s : {"extraspecial:2:1:+", "extraspecial:2:1:-", "extraspecial:2:2:+", "extraspecial:2:2:-",
                        "extraspecial:2:3:+", "extraspecial:2:3:-", "extraspecial:3:1:+", "extraspecial:3:1:-",
                        "extraspecial:5:1:+", "extraspecial:5:1:-"}) {
    specs.emplace_back(s);
  }
  specs.emplace_back("frobenius21");
  for (const char* s : {"product(quaternion:8,quaternion:8)", "product(heisenberg:3:1,cyclic:3)",
                        "product(quaternion:8,cyclic:2)", "product(dihedral:8,cyclic:2)",
                        "product(dihedral:8,quaternion:8)", "product(symmetric:3,cyclic:3)",
                        "product(frobenius21,cyclic:3)", "product(cyclic:3,cyclic:9)",
                        "product(heisenberg:3:1,cyclic:9)", "product(symmetric:4,cyclic:2)"}) {
    specs.emplace_back(s);
  }

  std::vector<std::string> out;
  for (const auto& s : specs) {
    const auto spec = parse_group_spec(s);
    if (spec.order() > max_order) continue;
    if (!families.empty() && std::find(families.begin(), families.end(), spec.family) == families.end()) continue;
    out.push_back(s);
  }
  return out;
}

std::vector<Group> ingest_groups_json(std::string_view json_text, std::size_t cap) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("corpus file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array()) {
    throw InputError("corpus file must be an object with a \"groups\" array");
  }
  std::vector<Group> out;
  std::size_t index = 0;
  for (const auto& entry : doc["groups"]) {
    std::string name = "#" + std::to_string(index++);
    try {
      if (!entry.is_object()) throw InputError("entry is not an object");
      if (!entry.contains("name") || !entry["name"].is_string()) throw InputError("missing string field \"name\"");
      name = entry["name"].get<std::string>();
      if (!entry.contains("kind") || !entry["kind"].is_string()) throw InputError("missing string field \"kind\"");
      const auto kind = entry["kind"].get<std::string>();
      if (kind == "permutation") {
        if (!entry.contains("degree") || !entry["degree"].is_number_unsigned()) {
          throw InputError("permutation entry needs an unsigned \"degree\"");
        }
        if (!entry.contains("generators") || !entry["generators"].is_array()) {
          throw InputError("permutation entry needs a \"generators\" array");
        }
        std::vector<Permutation> gens;
        for (const auto& g : entry["generators"]) {
          if (!g.is_array() || !std::all_of(g.begin(), g.end(), [](const json& v) { return v.is_number_unsigned(); })) {
            throw InputError("generators must be arrays of unsigned integers");
          }
          gens.push_back(g.get<Permutation>());
        }
        out.push_back(Group::from_permutations(entry["degree"].get<std::size_t>(), gens, name, cap));
      } else if (kind == "cayley") {
        if (!entry.contains("table") || !entry["table"].is_array()) {
          throw InputError("cayley entry needs a \"table\" array");
        }
        std::vector<std::vector<Element>> table;
        for (const auto& row : entry["table"]) {
          if (!row.is_array() || !std::all_of(row.begin(), row.end(), [](const json& v) { return v.is_number_unsigned(); })) {
            throw InputError("table rows must be arrays of unsigned integers");
          }
          table.push_back(row.get<std::vector<Element>>());
        }
        out.push_back(Group::from_cayley_table(table, name, cap));
      } else {
        throw InputError("unknown kind '" + kind + "'");
      }
    } catch (const CapExceeded& e) {
      throw CapExceeded("corpus entry '" + name + "': " + e.what());
    } catch (const Error& e) {
      throw InputError("corpus entry '" + name + "': " + e.what());
    }
  }
  return out;
}

std::vector<Group> ingest_groups_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read corpus file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ingest_groups_json(buffer.str(), cap);
}

std::string corpus_json(const std::vector<Group>& groups) {
  nlohmann::ordered_json doc;
  doc["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : groups) {
    nlohmann::ordered_json entry;
    entry["name"] = g.name();
    entry["kind"] = "cayley";
    entry["table"] = g.cayley_table();
    doc["groups"].push_back(std::move(entry));
  }
  return doc.dump();
}

}  // namespace grouplab
