#include "grouplab/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <set>
#include <unordered_map>

#include "grouplab/arith.hpp"
#include "grouplab/errors.hpp"
#include "subgroup_builder.hpp"

namespace grouplab {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

void check_bijection(const Permutation& p, std::size_t degree, std::size_t which) {
  if (p.size() != degree) {
    throw InputError("generator " + std::to_string(which) + " has " + std::to_string(p.size()) +
                     " images, expected degree " + std::to_string(degree));
  }
  std::vector<std::uint8_t> seen(degree, 0);
  for (auto v : p) {
    if (v >= degree || seen[v]) {
      throw InputError("generator " + std::to_string(which) + " is not a bijection on 0.." +
                       std::to_string(degree ? degree - 1 : 0));
    }
    seen[v] = 1;
  }
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap) {
    throw CapExceeded("group order exceeds the configured cap of " + std::to_string(cap));
  }
}

}  // namespace

std::size_t configured_order_cap() {
  const char* env = std::getenv("GROUPLAB_ORDER_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOrderCap;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw InputError(std::string("GROUPLAB_ORDER_CAP is not a positive integer: ") + env);
  }
  return value;
}

Group::Group(std::size_t order, std::vector<Element> table, std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
  inverse_.assign(order_, kIdentity);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == kIdentity) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  element_order_.assign(order_, 1);
  exponent_ = 1;
  for (std::size_t a = 0; a < order_; ++a) {
    Element x = static_cast<Element>(a);
    std::uint32_t k = 1;
    while (x != kIdentity) {
      x = mul(x, static_cast<Element>(a));
      ++k;
    }
    element_order_[a] = k;
    exponent_ = lcm_u64(exponent_, k);
  }
  detail::SubgroupBuilder builder(*this);
  for (std::size_t a = 1; a < order_ && builder.size() < order_; ++a) {
    builder.add(static_cast<Element>(a));
  }
  generators_ = builder.generators();
}

Group Group::from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                               std::string name, std::size_t order_cap) {
  for (std::size_t i = 0; i < generators.size(); ++i) check_bijection(generators[i], degree, i);

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0U);

  std::vector<Permutation> elements{identity};
  std::unordered_map<Permutation, Element, PermutationHash> index{{identity, kIdentity}};
  std::vector<Element> parent{kIdentity};
  std::vector<std::uint32_t> via{0};
  const std::size_t ngens = generators.size();
  std::vector<Element> right;  // right[x * ngens + j] = x * s_j

  Permutation product(degree);
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t j = 0; j < ngens; ++j) {
      const auto& a = elements[x];
      const auto& s = generators[j];
      for (std::size_t i = 0; i < degree; ++i) product[i] = s[a[i]];
      auto it = index.find(product);
      Element y;
      if (it == index.end()) {
        y = static_cast<Element>(elements.size());
        check_cap(elements.size() + 1, order_cap);
        index.emplace(product, y);
        elements.push_back(product);
        parent.push_back(static_cast<Element>(x));
        via.push_back(static_cast<std::uint32_t>(j));
      } else {
        y = it->second;
      }
      right.push_back(y);
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) table[x * n] = static_cast<Element>(x);
  // Elements are discovered in BFS order, so parent[y] < y.
  for (std::size_t y = 1; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      Element xp = table[x * n + parent[y]];
      table[x * n + y] = right[static_cast<std::size_t>(xp) * ngens + via[y]];
    }
  }
  return Group(n, std::move(table), std::move(name));
}

Group Group::from_cayley_table(const std::vector<std::vector<Element>>& rows, std::string name,
                               std::size_t order_cap) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("cayley table is empty");
  check_cap(n, order_cap);
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("cayley table is not square");
    for (auto v : row) {
      if (v >= n) throw InputError("cayley table entry out of range");
    }
  }
  std::vector<std::uint8_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[rows[a][b]]++) throw InputError("cayley table is not a Latin square (row " + std::to_string(a) + ")");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[rows[b][a]]++) throw InputError("cayley table is not a Latin square (column " + std::to_string(a) + ")");
    }
  }
  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw InputError("cayley table has no identity element");

  // Relabel so that the identity becomes element 0.
  std::vector<Element> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0U);
  std::swap(relabel[0], relabel[*identity]);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(relabel[a]) * n + relabel[b]] = relabel[rows[a][b]];
    }
  }

  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = table[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
            throw InputError("cayley table is not associative");
          }
        }
      }
    }
  }
  return Group(n, std::move(table), std::move(name));
}

Group Group::from_trusted_table(std::size_t order, std::vector<Element> flat_table, std::string name) {
  if (order == 0 || flat_table.size() != order * order) {
    throw InternalError("trusted table has inconsistent shape");
  }
  return Group(order, std::move(flat_table), std::move(name));
}

Group Group::renamed(std::string name) const {
  Group copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Element Group::pow(Element a, std::uint64_t k) const {
  k %= element_order_[a];
  Element x = kIdentity;
  for (std::uint64_t i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

bool Group::is_abelian() const {
  for (auto a : generators_) {
    for (auto b : generators_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> Group::cayley_table() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                   table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  }
  return rows;
}

// ---------------------------------------------------------------------------

ElementSet ElementSet::from_members(std::vector<Element> members, bool is_subgroup) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ElementSet s;
  s.members_ = std::move(members);
  s.is_subgroup_ = is_subgroup;
  return s;
}

ElementSet ElementSet::whole(const Group& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), 0U);
  return from_members(std::move(all), true);
}

bool ElementSet::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::vector<std::uint8_t> ElementSet::mask(std::size_t order) const {
  std::vector<std::uint8_t> m(order, 0);
  for (auto x : members_) m[x] = 1;
  return m;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

// ---------------------------------------------------------------------------

bool is_subgroup(const Group& g, std::span<const Element> members) {
  if (members.empty()) return false;
  std::vector<std::uint8_t> in(g.order(), 0);
  for (auto x : members) in[x] = 1;
  if (!in[kIdentity]) return false;
  // Finite and closed under multiplication implies closed under inverses.
  for (auto a : members) {
    for (auto b : members) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

ClassList conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnassigned = ~0U;
  std::vector<std::uint32_t> label(n, kUnassigned);
  std::vector<ConjugacyClass> classes;
  for (std::size_t a = 0; a < n; ++a) {
    if (label[a] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(classes.size());
    std::vector<Element> members;
    std::size_t centralizer = 0;
    for (std::size_t x = 0; x < n; ++x) {
      Element c = g.conjugate(static_cast<Element>(a), static_cast<Element>(x));
      if (c == a) ++centralizer;
      if (label[c] == kUnassigned) {
        label[c] = id;
        members.push_back(c);
      }
    }
    ConjugacyClass cls;
    cls.rep = static_cast<Element>(a);
    cls.members = ElementSet::from_members(std::move(members));
    cls.centralizer_order = centralizer;
    classes.push_back(std::move(cls));
  }

  std::vector<std::uint32_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    if (classes[i].size() != classes[j].size()) return classes[i].size() < classes[j].size();
    return classes[i].rep < classes[j].rep;
  });
  std::vector<std::uint32_t> position(classes.size());
  ClassList out;
  out.classes.reserve(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<std::uint32_t>(i);
    out.classes.push_back(std::move(classes[order[i]]));
  }
  out.class_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.class_of[x] = position[label[x]];
  return out;
}

Subgroup center(const Group& g) {
  std::vector<Element> members;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) {
      central = g.mul(static_cast<Element>(a), static_cast<Element>(x)) ==
                g.mul(static_cast<Element>(x), static_cast<Element>(a));
    }
    if (central) members.push_back(static_cast<Element>(a));
  }
  return Subgroup::from_members(std::move(members), true);
}

Element commutator(const Group& g, Element a, Element x) {
  return g.mul(g.mul(g.inv(a), g.inv(x)), g.mul(a, x));
}

ElementSet gamma_set(const Group& g, Element a) {
  std::vector<Element> members;
  members.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    members.push_back(commutator(g, a, static_cast<Element>(x)));
  }
  auto s = ElementSet::from_members(std::move(members));
  return ElementSet::from_members({s.members().begin(), s.members().end()},
                                  is_subgroup(g, s.members()));
}

bool is_normal_subset(const Group& g, const ElementSet& s) {
  auto in = s.mask(g.order());
  // Conjugation by a generating set suffices: each generator permutes s.
  for (auto t : g.generators()) {
    for (auto x : s.members()) {
      if (!in[g.conjugate(x, t)]) return false;
    }
  }
  return true;
}

Subgroup subgroup_closure(const Group& g, std::span<const Element> generators) {
  detail::SubgroupBuilder builder(g);
  for (auto x : generators) builder.add(x);
  return builder.result();
}

Subgroup element_commutator_subgroup(const Group& g, Element a) {
  detail::SubgroupBuilder builder(g);
  for (std::size_t x = 0; x < g.order(); ++x) {
    builder.add(commutator(g, a, static_cast<Element>(x)));
  }
  return builder.result();
}

Subgroup normal_closure(const Group& g, const ElementSet& s) {
  detail::SubgroupBuilder builder(g);
  for (auto x : s.members()) builder.add(x);
  // builder.generators() grows while we iterate; index access is deliberate.
  for (std::size_t i = 0; i < builder.generators().size(); ++i) {
    const Element h = builder.generators()[i];
    for (auto t : g.generators()) builder.add(g.conjugate(h, t));
  }
  return builder.result();
}

Subgroup commutator_subgroup(const Group& g, const ElementSet& a_set, const ElementSet& b_set) {
  detail::SubgroupBuilder builder(g);
  for (auto a : a_set.members()) {
    for (auto b : b_set.members()) builder.add(commutator(g, a, b));
  }
  return builder.result();
}

std::vector<Subgroup> normal_subgroups(const Group& g, std::size_t cap) {
  const auto classes = conjugacy_classes(g);
  struct Entry {
    Subgroup group;
    std::vector<Element> gens;
  };
  std::vector<Entry> found{{Subgroup::trivial(), {}}};
  std::set<std::vector<Element>> seen{{kIdentity}};

  // Every normal subgroup is the join of the classes it contains, so
  // closing {1} under "join with one class" reaches all of them.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 1; c < classes.size(); ++c) {
      if (found[i].group.contains(classes[c].rep)) continue;
      detail::SubgroupBuilder builder(g, found[i].group, found[i].gens);
      for (auto x : classes[c].members.members()) builder.add(x);
      auto joined = builder.result();
      std::vector<Element> key(joined.members().begin(), joined.members().end());
      if (seen.insert(key).second) {
        if (found.size() >= cap) {
          throw CapExceeded("normal subgroup count exceeds the configured cap of " +
                            std::to_string(cap));
        }
        found.push_back({std::move(joined), builder.generators()});
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.group));
  std::sort(out.begin(), out.end());
  return out;
}

Series lower_central_series(const Group& g) {
  Series s;
  s.kind = Series::Kind::lower_central;
  const auto whole = ElementSet::whole(g);
  s.terms.push_back(whole);
  while (true) {
    auto next = commutator_subgroup(g, s.terms.back(), whole);
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

std::optional<std::size_t> nilpotence_class(const Group& g) {
  auto s = lower_central_series(g);
  if (s.terms.back().size() != 1) return std::nullopt;
  return s.terms.size() - 1;
}

Series derived_series(const Group& g) {
  Series s;
  s.kind = Series::Kind::derived;
  s.terms.push_back(ElementSet::whole(g));
  while (true) {
    auto next = commutator_subgroup(g, s.terms.back(), s.terms.back());
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

std::optional<std::size_t> derived_length(const Group& g) {
  auto s = derived_series(g);
  if (s.terms.back().size() != 1) return std::nullopt;
  return s.terms.size() - 1;
}

Quotient quotient(const Group& g, const Subgroup& n) {
  if (n.empty() || !is_subgroup(g, n.members())) {
    throw InputError("quotient: argument is not a subgroup");
  }
  if (!is_normal_subset(g, n)) throw InputError("quotient: subgroup is not normal");

  constexpr Element kUnassigned = ~0U;
  std::vector<Element> coset(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset[a] != kUnassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(a));
    for (auto h : n.members()) coset[g.mul(static_cast<Element>(a), h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset[g.mul(reps[i], reps[j])];
  }
  return {Group::from_trusted_table(m, std::move(table), g.name() + "/N"), std::move(coset)};
}

PowerMap power_class_map(const Group& g, const ClassList& classes) {
  PowerMap pm;
  pm.exponent = g.exponent();
  pm.table.resize(classes.size());
  pm.inverse_class.resize(classes.size());
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const Element rep = classes[j].rep;
    auto& row = pm.table[j];
    row.resize(pm.exponent);
    Element x = kIdentity;
    for (std::uint64_t l = 0; l < pm.exponent; ++l) {
      row[l] = classes.class_of[x];
      x = g.mul(x, rep);
    }
    pm.inverse_class[j] = classes.class_of[g.inv(rep)];
  }
  return pm;
}

Group direct_product(const Group& a, const Group& b, std::size_t order_cap) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  check_cap(na * nb, order_cap);
  const std::size_t n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb);
    const auto xb = static_cast<Element>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb);
      const auto yb = static_cast<Element>(y % nb);
      table[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return Group::from_trusted_table(n, std::move(table),
                                   "product(" + a.name() + "," + b.name() + ")");
}

std::optional<std::uint64_t> p_group_prime(const Group& g) {
  auto p = prime_power_base(g.order());
  if (p == 0) return std::nullopt;
  return p;
}

bool is_cyclic(const Group& g, const Subgroup& h) {
  for (auto x : h.members()) {
    if (g.element_order(x) == h.size()) return true;
  }
  return false;
}

}  // namespace grouplab
