#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/char_table.hpp"
#include "grouplab/group.hpp"

namespace grouplab {

// Three independent characterizations of a flat element g:
//   by_subgroup   gamma_G(g) is closed under multiplication
//   by_coset      cl(g) = g[g,G]
//   by_characters chi(g) = 0 for every chi with g outside Z(chi)
// Central elements are flat by convention.
struct FlatnessVerdict {
  Element element = kIdentity;
  bool by_subgroup = false;
  bool by_coset = false;
  bool by_characters = false;

  bool agree() const { return by_subgroup == by_coset && by_coset == by_characters; }
};

FlatnessVerdict flat_element(const CharacterTable& t, Element g);

enum class FlatMode { representatives, all_elements };

/// Every element (or class representative) has an agreeing, positive verdict.
bool is_flat_group(const CharacterTable& t, FlatMode mode = FlatMode::representatives);

/// chi(1)^2 = |G : Z(chi)| for every row.
bool gvz_by_degrees(const CharacterTable& t);
/// Every row vanishes outside its center.
bool gvz_by_vanishing(const CharacterTable& t);
/// Both methods; disagreement raises InternalError.
bool is_gvz_group(const CharacterTable& t);

struct BasicsConditions {
  bool conjugate_to_coset = false;     // g ~ gz for every z in M
  bool commutators_cover_m = false;    // every z in M is some [g, x]
  bool centralizers_match = false;     // |C_G(g)| = |C_{G/M}(gM)|
  bool vanishes_over_m = false;        // chi(g) = 0 for chi in Irr(G | M)

  bool all_equal() const {
    return conjugate_to_coset == commutators_cover_m && commutators_cover_m == centralizers_match &&
           centralizers_match == vanishes_over_m;
  }
};

/// M must be normal and g must lie outside M (InputError otherwise).
BasicsConditions lemma_basics_conditions(const CharacterTable& t, const Subgroup& m, Element g);

/// cl(g)^2 (the product set) is exactly one conjugacy class.
bool class_square_test(const Group& g, const ClassList& classes, std::size_t cls);

struct SquaringResult {
  bool gvz = false;
  bool all_squares_are_classes = false;
  /// The equivalence is only claimed for odd |G|.
  bool asserted = false;
  bool consistent = true;
};

SquaringResult odd_squaring_equivalence(const CharacterTable& t);

/// Every value rational.
bool rational_by_values(const CharacterTable& t);
/// g ~ g^r for every r coprime to |G|.
bool rational_by_classes(const CharacterTable& t);
/// Both methods; disagreement raises InternalError.
bool is_rational_group(const CharacterTable& t);

bool values_in_qp_group(const CharacterTable& t, std::uint64_t p);

/// |Z(chi)/ker(chi)| for every nonprincipal row, in row order.
std::vector<std::size_t> center_over_kernel_orders(const CharacterTable& t);

/// Smallest n such that G is CM_n: the largest number of rows sharing one
/// kernel. The trivial group gives 1.
std::size_t min_cm_index(const CharacterTable& t);

struct CmpEquivalence {
  std::uint64_t p = 0;
  bool cm = false;              // CM_{p-1}
  bool gvz_center_kernel = false;  // GVZ and |Z(chi)/ker(chi)| = p for chi != 1
  bool gvz_qp_values = false;   // GVZ and values in Q(zeta_p)

  bool consistent() const { return cm == gvz_center_kernel && gvz_center_kernel == gvz_qp_values; }
};

/// G must be a p-group (InputError otherwise).
CmpEquivalence cmp1_equivalence(const CharacterTable& t, std::uint64_t p);

// Outcome of one theorem check: nullopt when the hypothesis does not apply
// or the check was not requested.
using TheoremOutcome = std::optional<bool>;

struct SuiteSelection {
  bool orthogonality = true;
  bool flat_gvz = true;
  bool basics = true;
  bool taketa = true;
  bool cm = true;
  bool squaring = true;

  static SuiteSelection all() { return {}; }
  static SuiteSelection only(const std::string& name);
};

struct SuiteOptions {
  SuiteSelection selection;
  /// The four-way sweep over (M, g) runs only for |G| at most this.
  std::size_t basics_max_order = 48;
  FlatMode flat_mode = FlatMode::representatives;
};

struct VerificationRecord {
  std::string group;
  std::size_t order = 0;
  bool gvz = false;
  bool flat = false;
  bool rational = false;
  std::size_t cm_index = 1;
  std::optional<std::size_t> nilpotence_class;
  std::vector<std::uint64_t> cd;
  std::map<std::uint64_t, bool> qp;
  /// Every class square is a class; set when the squaring suite runs.
  std::optional<bool> squares_are_classes;
  /// Keyed by theorem name; insertion order is fixed by theorem_suite.
  std::vector<std::pair<std::string, TheoremOutcome>> theorems;
  std::vector<std::string> violations;

  TheoremOutcome theorem(const std::string& name) const;
  void record(const std::string& name, TheoremOutcome outcome, const std::string& detail = {});
  bool passed() const { return violations.empty(); }
};

/// Evaluates the predicates and the selected theorem checks. Failures are
/// collected as violations rather than thrown.
VerificationRecord theorem_suite(const CharacterTable& t, const SuiteOptions& options = {});

}  // namespace grouplab
