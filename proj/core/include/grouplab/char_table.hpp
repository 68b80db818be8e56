#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouplab/cyclotomic.hpp"
#include "grouplab/group.hpp"

namespace grouplab {

// Structure constants of the class algebra:
// a(i, j, l) = #{ (x, y) in C_i x C_j : x y = rep(C_l) }.
struct ClassMatrices {
  std::size_t k = 0;
  std::vector<std::uint32_t> data;

  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t l) const {
    return data[(i * k + j) * k + l];
  }
};

ClassMatrices class_matrices(const Group& g, const ClassList& classes);

inline constexpr std::uint64_t kDixonPrimeSearchCap = 10'000'000;

/// Smallest prime p = 1 (mod exponent) with p > 2 sqrt(|G|).
std::uint64_t dixon_prime(const Group& g, std::uint64_t search_cap = kDixonPrimeSearchCap);

using CharacterRow = std::vector<Cyclotomic>;

struct RowStructure {
  Subgroup kernel;
  Subgroup center;
};

// Irreducible characters of a group, one row per character and one column
// per conjugacy class (in the ClassList's canonical order). Values have
// conductor exponent(G).
class CharacterTable {
 public:
  /// Wraps rows as given; nothing is verified. character_table() is the
  /// verified constructor.
  CharacterTable(Group group, ClassList classes, std::vector<CharacterRow> rows);

  const Group& group() const { return group_; }
  const ClassList& classes() const { return classes_; }
  const PowerMap& power_map() const { return power_map_; }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t size() const { return rows_.size(); }

  const std::vector<CharacterRow>& rows() const { return rows_; }
  const CharacterRow& row(std::size_t i) const { return rows_[i]; }
  const Cyclotomic& value(std::size_t row, std::size_t cls) const { return rows_[row][cls]; }
  /// Value at an arbitrary element.
  const Cyclotomic& value_at(std::size_t row, Element x) const {
    return rows_[row][classes_.class_of[x]];
  }

  /// chi(1); throws InternalError if the identity column is not a positive integer.
  std::uint64_t degree(std::size_t row) const;

  /// Kernel and center of a row. Cached for verified tables.
  RowStructure structure(std::size_t row) const;

  /// Index of the trivial character.
  std::size_t principal_row() const;

 private:
  friend CharacterTable character_table(const Group& g);

  Group group_;
  ClassList classes_;
  PowerMap power_map_;
  std::vector<CharacterRow> rows_;
  std::vector<RowStructure> structure_;
};

/// Dixon-Schneider. The result is checked against both orthogonality
/// relations before it is returned; failure raises InternalError.
CharacterTable character_table(const Group& g);

/// ker = { g : chi(g) = chi(1) }, Z = { g : |chi(g)| = chi(1) }; both are
/// verified to be subgroups.
RowStructure kernel_and_center(const CharacterTable& t, std::size_t row);

/// cd(G), ascending.
std::vector<std::uint64_t> degree_set(const CharacterTable& t);

/// Indices of rows whose kernel does not contain M. M must be normal.
std::vector<std::size_t> irr_over(const CharacterTable& t, const Subgroup& m);

/// Number of rows whose kernel is exactly N.
std::size_t kernel_multiplicity(const CharacterTable& t, const Subgroup& n);
std::size_t faithful_count(const CharacterTable& t);

struct OrthogonalityReport {
  bool shape = false;      // k rows, k columns
  bool rows = false;       // first relation
  bool columns = false;    // second relation
  bool degree_sum = false; // sum of squared degrees equals |G|
  bool degrees_divide = false;

  bool all() const { return shape && rows && columns && degree_sum && degrees_divide; }
};

OrthogonalityReport check_orthogonality(const CharacterTable& t);

}  // namespace grouplab
