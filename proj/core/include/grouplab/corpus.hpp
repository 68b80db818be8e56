#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

// Parsed group spec:
//   spec := atom | "product(" spec "," spec ")"
//   atom := cyclic:n | dihedral:n | quaternion:n | semidihedral:n
//         | symmetric:n | alternating:n | elemabelian:p:k | heisenberg:p:n
//         | extraspecial:p:n:(+|-) | frobenius21
// dihedral:n, quaternion:n and semidihedral:n take the group order.
struct GroupSpec {
  std::string family;                 // "product" for products
  std::vector<std::uint64_t> params;  // numeric parameters in order
  char sign = 0;                      // '+' or '-' for extraspecial
  std::vector<GroupSpec> factors;     // two entries for products

  /// Canonical text, e.g. "product(quaternion:8,cyclic:2)".
  std::string text() const;
  /// Order of the group the spec describes (parameters are validated).
  std::uint64_t order() const;
};

/// Parses and validates; InputError on bad syntax, unknown family or
/// parameter constraint violations.
GroupSpec parse_group_spec(std::string_view text);

Group build_named_group(const GroupSpec& spec, std::size_t order_cap = configured_order_cap());
Group build_named_group(std::string_view spec, std::size_t order_cap = configured_order_cap());

/// Built-in families, as accepted by `verify --family`.
const std::vector<std::string>& family_names();

/// Built-in corpus members of order at most max_order, optionally limited
/// to the named families ("product" selects the product members).
std::vector<std::string> default_corpus(std::size_t max_order,
                                        const std::vector<std::string>& families = {});

/// Reads a corpus file: {"groups":[{"name","kind":"permutation"|"cayley",
/// "degree"?,"generators"?,"table"?}]}. Schema violations raise InputError;
/// construction errors are rethrown with the entry name prepended.
std::vector<Group> ingest_groups_file(const std::string& path,
                                      std::size_t order_cap = configured_order_cap());
std::vector<Group> ingest_groups_json(std::string_view json_text,
                                      std::size_t order_cap = configured_order_cap());

/// Serializes groups as cayley-kind corpus entries.
std::string corpus_json(const std::vector<Group>& groups);

}  // namespace grouplab
