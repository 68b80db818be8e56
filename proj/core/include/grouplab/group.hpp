#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grouplab {

/// Index of a group element. The identity is always 0.
using Element = std::uint32_t;

/// Image array of a permutation on 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultOrderCap = 5000;
inline constexpr std::size_t kDefaultNormalSubgroupCap = 100000;

/// Order cap honouring the GROUPLAB_ORDER_CAP environment variable.
std::size_t configured_order_cap();

// A finite group held as a full Cayley table. Elements are 0..order-1 with
// 0 the identity. Instances are immutable once built.
class Group {
 public:
  /// Closure of the generators under composition, enumerated breadth-first
  /// from the identity. Product a*b applies a first, then b.
  static Group from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                 std::string name = {},
                                 std::size_t order_cap = configured_order_cap());

  /// Validates the table (square, in range, Latin, identity, associativity
  /// for order <= 512). If the identity is not element 0 it is swapped there.
  static Group from_cayley_table(const std::vector<std::vector<Element>>& table,
                                 std::string name = {},
                                 std::size_t order_cap = configured_order_cap());

  /// Trusted constructor for tables produced by group operations
  /// (products, quotients); only cheap shape checks are done.
  static Group from_trusted_table(std::size_t order, std::vector<Element> flat_table,
                                  std::string name);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  Group renamed(std::string name) const;

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, std::uint64_t k) const;
  /// a^x = x^-1 a x
  Element conjugate(Element a, Element x) const { return mul(mul(inv(x), a), x); }

  std::uint32_t element_order(Element a) const { return element_order_[a]; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_abelian() const;

  /// Small generating set, chosen greedily in index order.
  const std::vector<Element>& generators() const { return generators_; }

  std::vector<std::vector<Element>> cayley_table() const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  Group(std::size_t order, std::vector<Element> table, std::string name);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::uint64_t exponent_ = 1;
  std::vector<Element> generators_;
  std::string name_;
};

// Sorted, duplicate-free set of element indices. is_subgroup records that
// the set was verified (or constructed) to be closed under mul and inv.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet from_members(std::vector<Element> members, bool is_subgroup = false);
  static ElementSet trivial() { return from_members({kIdentity}, true); }
  static ElementSet whole(const Group& g);

  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element x) const;
  bool is_subgroup() const { return is_subgroup_; }
  bool is_subset_of(const ElementSet& other) const;

  /// Dense 0/1 membership mask over 0..order-1.
  std::vector<std::uint8_t> mask(std::size_t order) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.members_ == b.members_; }
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  std::vector<Element> members_;
  bool is_subgroup_ = false;
};

using Subgroup = ElementSet;

struct ConjugacyClass {
  Element rep = kIdentity;
  ElementSet members;
  std::size_t centralizer_order = 0;
  std::size_t size() const { return members.size(); }
};

// Classes in canonical order: identity first, then ascending
// (class size, representative).
struct ClassList {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;

  std::size_t size() const { return classes.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes[i]; }
};

struct Series {
  enum class Kind { lower_central, derived };
  Kind kind = Kind::lower_central;
  std::vector<Subgroup> terms;
};

struct Quotient {
  Group group;
  /// element index of G -> coset index (element of group)
  std::vector<Element> projection;
};

struct PowerMap {
  std::uint64_t exponent = 1;
  /// table[j][l] = class of rep_j^l for 0 <= l < exponent
  std::vector<std::vector<std::uint32_t>> table;
  /// class of rep_j^-1
  std::vector<std::uint32_t> inverse_class;

  std::uint32_t operator()(std::size_t cls, std::uint64_t l) const {
    return table[cls][l % exponent];
  }
};

bool is_subgroup(const Group& g, std::span<const Element> members);

ClassList conjugacy_classes(const Group& g);
Subgroup center(const Group& g);
/// [g,x] = g^-1 x^-1 g x
Element commutator(const Group& g, Element a, Element x);
/// gamma_G(a) = { [a,x] : x in G }; is_subgroup set by an explicit closure test.
ElementSet gamma_set(const Group& g, Element a);
bool is_normal_subset(const Group& g, const ElementSet& s);

Subgroup subgroup_closure(const Group& g, std::span<const Element> generators);
/// [a,G], the subgroup generated by gamma_G(a).
Subgroup element_commutator_subgroup(const Group& g, Element a);
Subgroup normal_closure(const Group& g, const ElementSet& s);
/// Subgroup generated by { [a,x] : a in a_set, x in b_set }.
Subgroup commutator_subgroup(const Group& g, const ElementSet& a_set, const ElementSet& b_set);

/// All normal subgroups, sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const Group& g,
                                       std::size_t cap = kDefaultNormalSubgroupCap);

Series lower_central_series(const Group& g);
/// nullopt means "not nilpotent". The trivial group has class 0.
std::optional<std::size_t> nilpotence_class(const Group& g);
Series derived_series(const Group& g);
/// nullopt means "not solvable". The trivial group has length 0.
std::optional<std::size_t> derived_length(const Group& g);

Quotient quotient(const Group& g, const Subgroup& n);
PowerMap power_class_map(const Group& g, const ClassList& classes);

Group direct_product(const Group& a, const Group& b, std::size_t order_cap = configured_order_cap());

/// If |G| = p^k (k >= 1), returns p.
std::optional<std::uint64_t> p_group_prime(const Group& g);

bool is_cyclic(const Group& g, const Subgroup& h);

}  // namespace grouplab
