#include "grouplab/theory.hpp"

#include <algorithm>
#include <numeric>

#include "grouplab/arith.hpp"
#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

// Per-table data shared by the checks: membership masks for every row's
// kernel and center.
struct RowMasks {
  std::vector<std::vector<std::uint8_t>> kernel;
  std::vector<std::vector<std::uint8_t>> center;
  std::vector<std::size_t> kernel_size;
  std::vector<std::size_t> center_size;

  explicit RowMasks(const CharacterTable& t) {
    const auto n = t.group().order();
    for (std::size_t r = 0; r < t.size(); ++r) {
      auto s = t.structure(r);
      kernel.push_back(s.kernel.mask(n));
      center.push_back(s.center.mask(n));
      kernel_size.push_back(s.kernel.size());
      center_size.push_back(s.center.size());
    }
  }
};

FlatnessVerdict flat_verdict(const CharacterTable& t, const RowMasks& masks, Element g) {
  const auto& grp = t.group();
  const auto& classes = t.classes();
  FlatnessVerdict v;
  v.element = g;
  const auto& cls = classes[classes.class_of[g]];
  if (cls.size() == 1) {
    v.by_subgroup = v.by_coset = v.by_characters = true;
    return v;
  }
  v.by_subgroup = gamma_set(grp, g).is_subgroup();

  const auto commutators = element_commutator_subgroup(grp, g);
  std::vector<Element> coset;
  coset.reserve(commutators.size());
  for (auto h : commutators.members()) coset.push_back(grp.mul(g, h));
  v.by_coset = ElementSet::from_members(std::move(coset)) == cls.members;

  v.by_characters = true;
  for (std::size_t r = 0; r < t.size() && v.by_characters; ++r) {
    if (!masks.center[r][g]) v.by_characters = t.value_at(r, g).is_zero();
  }
  return v;
}

bool gvz_by_degrees_impl(const CharacterTable& t, const RowMasks& masks) {
  const auto n = t.group().order();
  for (std::size_t r = 0; r < t.size(); ++r) {
    const auto d = t.degree(r);
    if (d * d * masks.center_size[r] != n) return false;
  }
  return true;
}

bool gvz_by_vanishing_impl(const CharacterTable& t, const RowMasks& masks) {
  const auto& classes = t.classes();
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (!masks.center[r][classes[j].rep] && !t.value(r, j).is_zero()) return false;
    }
  }
  return true;
}

void require_normal_subgroup(const Group& g, const Subgroup& m, const char* who) {
  if (m.empty() || !is_subgroup(g, m.members()) || !is_normal_subset(g, m)) {
    throw InputError(std::string(who) + ": M is not a normal subgroup");
  }
}

BasicsConditions basics_impl(const CharacterTable& t, const RowMasks& masks, const Subgroup& m,
                             const Quotient& q, Element g) {
  const auto& grp = t.group();
  const auto& classes = t.classes();
  BasicsConditions c;

  const auto g_class = classes.class_of[g];
  c.conjugate_to_coset = std::all_of(m.members().begin(), m.members().end(), [&](Element z) {
    return classes.class_of[grp.mul(g, z)] == g_class;
  });

  std::vector<std::uint8_t> hit(grp.order(), 0);
  for (std::size_t x = 0; x < grp.order(); ++x) hit[commutator(grp, g, static_cast<Element>(x))] = 1;
  c.commutators_cover_m =
      std::all_of(m.members().begin(), m.members().end(), [&](Element z) { return hit[z] != 0; });

  const Element gm = q.projection[g];
  std::size_t centralizer_in_quotient = 0;
  for (std::size_t y = 0; y < q.group.order(); ++y) {
    if (q.group.mul(gm, static_cast<Element>(y)) == q.group.mul(static_cast<Element>(y), gm)) {
      ++centralizer_in_quotient;
    }
  }
  c.centralizers_match = classes[g_class].centralizer_order == centralizer_in_quotient;

  // Irr(G | M): rows whose kernel does not contain M.
  c.vanishes_over_m = true;
  for (std::size_t r = 0; r < t.size() && c.vanishes_over_m; ++r) {
    const bool contains_m = std::all_of(m.members().begin(), m.members().end(),
                                        [&](Element z) { return masks.kernel[r][z] != 0; });
    if (!contains_m) c.vanishes_over_m = t.value_at(r, g).is_zero();
  }
  return c;
}

std::size_t min_cm_index_impl(const CharacterTable& t) {
  std::map<std::vector<Element>, std::size_t> counts;
  std::size_t best = 1;
  for (std::size_t r = 0; r < t.size(); ++r) {
    auto ker = t.structure(r).kernel;
    auto& c = counts[std::vector<Element>(ker.members().begin(), ker.members().end())];
    best = std::max(best, ++c);
  }
  return best;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

FlatnessVerdict flat_element(const CharacterTable& t, Element g) {
  return flat_verdict(t, RowMasks(t), g);
}

bool is_flat_group(const CharacterTable& t, FlatMode mode) {
  const RowMasks masks(t);
  const auto& classes = t.classes();
  if (mode == FlatMode::representatives) {
    return std::all_of(classes.classes.begin(), classes.classes.end(), [&](const ConjugacyClass& c) {
      return flat_verdict(t, masks, c.rep).by_coset;
    });
  }
  for (std::size_t x = 0; x < t.group().order(); ++x) {
    if (!flat_verdict(t, masks, static_cast<Element>(x)).by_coset) return false;
  }
  return true;
}

bool gvz_by_degrees(const CharacterTable& t) { return gvz_by_degrees_impl(t, RowMasks(t)); }
bool gvz_by_vanishing(const CharacterTable& t) { return gvz_by_vanishing_impl(t, RowMasks(t)); }

bool is_gvz_group(const CharacterTable& t) {
  const RowMasks masks(t);
  const bool a = gvz_by_degrees_impl(t, masks);
  const bool b = gvz_by_vanishing_impl(t, masks);
  if (a != b) throw InternalError("GVZ degree test and vanishing test disagree");
  return a;
}

BasicsConditions lemma_basics_conditions(const CharacterTable& t, const Subgroup& m, Element g) {
  require_normal_subgroup(t.group(), m, "lemma_basics_conditions");
  if (m.contains(g)) throw InputError("lemma_basics_conditions: g must lie outside M");
  const auto q = quotient(t.group(), m);
  return basics_impl(t, RowMasks(t), m, q, g);
}

bool class_square_test(const Group& g, const ClassList& classes, std::size_t cls) {
  const auto& members = classes[cls].members.members();
  std::vector<std::uint8_t> in(g.order(), 0);
  std::size_t count = 0;
  for (auto a : members) {
    for (auto b : members) {
      const Element ab = g.mul(a, b);
      if (!in[ab]) {
        in[ab] = 1;
        ++count;
      }
    }
  }
  const Element any = g.mul(members.front(), members.front());
  const auto& target = classes[classes.class_of[any]];
  if (target.size() != count) return false;
  return std::all_of(target.members.members().begin(), target.members.members().end(),
                     [&](Element x) { return in[x] != 0; });
}

SquaringResult odd_squaring_equivalence(const CharacterTable& t) {
  SquaringResult s;
  s.gvz = is_gvz_group(t);
  s.all_squares_are_classes = true;
  for (std::size_t j = 0; j < t.class_count() && s.all_squares_are_classes; ++j) {
    s.all_squares_are_classes = class_square_test(t.group(), t.classes(), j);
  }
  s.asserted = t.group().order() % 2 == 1;
  s.consistent = !s.asserted || s.gvz == s.all_squares_are_classes;
  return s;
}

bool rational_by_values(const CharacterTable& t) {
  for (const auto& row : t.rows()) {
    for (const auto& v : row) {
      if (!v.is_rational()) return false;
    }
  }
  return true;
}

bool rational_by_classes(const CharacterTable& t) {
  // g^r depends on r mod exp(G); residues coprime to exp(G) are exactly the
  // images of integers coprime to |G|.
  const auto& pm = t.power_map();
  for (std::uint64_t r = 1; r < pm.exponent; ++r) {
    if (gcd_u64(r, pm.exponent) != 1) continue;
    for (std::size_t j = 0; j < t.class_count(); ++j) {
      if (pm(j, r) != j) return false;
    }
  }
  return true;
}

bool is_rational_group(const CharacterTable& t) {
  const bool a = rational_by_values(t);
  const bool b = rational_by_classes(t);
  if (a != b) throw InternalError("rationality by values and by classes disagree");
  return a;
}

bool values_in_qp_group(const CharacterTable& t, std::uint64_t p) {
  if (!is_prime(p)) throw InputError("values_in_qp_group: " + std::to_string(p) + " is not prime");
  for (const auto& row : t.rows()) {
    for (const auto& v : row) {
      if (!v.lies_in_prime_cyclotomic(p)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> center_over_kernel_orders(const CharacterTable& t) {
  std::vector<std::size_t> out;
  const auto principal = t.principal_row();
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r == principal) continue;
    auto s = t.structure(r);
    out.push_back(s.center.size() / s.kernel.size());
  }
  return out;
}

std::size_t min_cm_index(const CharacterTable& t) { return min_cm_index_impl(t); }

CmpEquivalence cmp1_equivalence(const CharacterTable& t, std::uint64_t p) {
  auto base = p_group_prime(t.group());
  if (!base || *base != p) {
    throw InputError("cmp1_equivalence: group of order " + std::to_string(t.group().order()) +
                     " is not a " + std::to_string(p) + "-group");
  }
  CmpEquivalence c;
  c.p = p;
  c.cm = min_cm_index(t) <= p - 1;
  const bool gvz = is_gvz_group(t);
  const auto orders = center_over_kernel_orders(t);
  c.gvz_center_kernel = gvz && std::all_of(orders.begin(), orders.end(), [&](std::size_t o) { return o == p; });
  c.gvz_qp_values = gvz && values_in_qp_group(t, p);
  return c;
}

SuiteSelection SuiteSelection::only(const std::string& name) {
  if (name == "all") return all();
  SuiteSelection s{false, false, false, false, false, false};
  if (name == "orthogonality") {
    s.orthogonality = true;
  } else if (name == "flat-gvz") {
    s.flat_gvz = true;
  } else if (name == "basics") {
    s.basics = true;
  } else if (name == "taketa") {
    s.taketa = true;
  } else if (name == "cm") {
    s.cm = true;
  } else if (name == "squaring") {
    s.squaring = true;
  } else {
    throw InputError("unknown suite '" + name + "'");
  }
  return s;
}

TheoremOutcome VerificationRecord::theorem(const std::string& name) const {
  for (const auto& [key, value] : theorems) {
    if (key == name) return value;
  }
  return std::nullopt;
}

void VerificationRecord::record(const std::string& name, TheoremOutcome outcome, const std::string& detail) {
  theorems.emplace_back(name, outcome);
  if (outcome.has_value() && !*outcome) {
    violations.push_back(name + (detail.empty() ? std::string() : ": " + detail));
  }
}

VerificationRecord theorem_suite(const CharacterTable& t, const SuiteOptions& options) {
  const auto& grp = t.group();
  const auto& sel = options.selection;
  const std::size_t n = grp.order();
  const RowMasks masks(t);

  VerificationRecord rec;
  rec.group = grp.name();
  rec.order = n;

  const bool gvz_deg = gvz_by_degrees_impl(t, masks);
  const bool gvz_van = gvz_by_vanishing_impl(t, masks);
  rec.gvz = gvz_deg;
  const bool rat_values = rational_by_values(t);
  const bool rat_classes = rational_by_classes(t);
  rec.rational = rat_values;
  rec.cm_index = min_cm_index_impl(t);
  rec.nilpotence_class = nilpotence_class(grp);
  rec.cd = degree_set(t);
  for (auto p : prime_divisors(n)) rec.qp[p] = values_in_qp_group(t, p);
  const auto p_base = p_group_prime(grp);

  std::vector<FlatnessVerdict> verdicts;
  if (options.flat_mode == FlatMode::representatives) {
    for (const auto& c : t.classes().classes) verdicts.push_back(flat_verdict(t, masks, c.rep));
  } else {
    for (std::size_t x = 0; x < n; ++x) verdicts.push_back(flat_verdict(t, masks, static_cast<Element>(x)));
  }
  rec.flat = std::all_of(verdicts.begin(), verdicts.end(), [](const FlatnessVerdict& v) { return v.by_coset; });

  rec.record("gvz_methods", gvz_deg == gvz_van,
             "degree test " + yes_no(gvz_deg) + ", vanishing test " + yes_no(gvz_van));
  rec.record("rational_methods", rat_values == rat_classes,
             "values " + yes_no(rat_values) + ", classes " + yes_no(rat_classes));

  if (sel.orthogonality) {
    const auto o = check_orthogonality(t);
    rec.record("orthogonality", o.all(),
               "rows " + yes_no(o.rows) + ", columns " + yes_no(o.columns) + ", degree sum " +
                   yes_no(o.degree_sum) + ", divisibility " + yes_no(o.degrees_divide));
  } else {
    rec.record("orthogonality", std::nullopt);
  }

  if (sel.flat_gvz) {
    rec.record("A", rec.flat == rec.gvz, "flat " + yes_no(rec.flat) + ", gvz " + yes_no(rec.gvz));

    std::string bad;
    for (const auto& v : verdicts) {
      if (!v.agree() && bad.empty()) {
        bad = "element " + std::to_string(v.element) + ": subgroup " + yes_no(v.by_subgroup) +
              ", coset " + yes_no(v.by_coset) + ", characters " + yes_no(v.by_characters);
      }
    }
    rec.record("flat_elements", bad.empty(), bad);

    std::string normal_bad, cen_bad;
    for (std::size_t x = 0; x < n; ++x) {
      const auto gx = static_cast<Element>(x);
      const auto sub = element_commutator_subgroup(grp, gx);
      if (normal_bad.empty() && !is_normal_subset(grp, sub)) {
        normal_bad = "[g,G] not normal for element " + std::to_string(x);
      }
      for (std::size_t r = 0; r < t.size() && cen_bad.empty(); ++r) {
        const bool in_center = masks.center[r][gx] != 0;
        const bool below_kernel = std::all_of(sub.members().begin(), sub.members().end(),
                                              [&](Element z) { return masks.kernel[r][z] != 0; });
        if (in_center != below_kernel) {
          cen_bad = "element " + std::to_string(x) + ", row " + std::to_string(r);
        }
      }
    }
    rec.record("com_sub_normal", normal_bad.empty(), normal_bad);
    rec.record("cen_cond", cen_bad.empty(), cen_bad);
  } else {
    for (const char* name : {"A", "flat_elements", "com_sub_normal", "cen_cond"}) rec.record(name, std::nullopt);
  }

  if (sel.taketa) {
    rec.record("gvz_nilpotent", rec.gvz ? TheoremOutcome(rec.nilpotence_class.has_value()) : std::nullopt,
               "GVZ group is not nilpotent");
    TheoremOutcome b;
    if (rec.gvz && rec.nilpotence_class) b = *rec.nilpotence_class <= rec.cd.size();
    rec.record("B", b,
               "class " + (rec.nilpotence_class ? std::to_string(*rec.nilpotence_class) : "-") +
                   " > |cd| " + std::to_string(rec.cd.size()));
  } else {
    rec.record("gvz_nilpotent", std::nullopt);
    rec.record("B", std::nullopt);
  }

  if (sel.basics && n <= options.basics_max_order) {
    std::string bad;
    for (const auto& m : normal_subgroups(grp)) {
      if (m.size() == n) continue;  // no g outside M
      const auto q = quotient(grp, m);
      const auto m_mask = m.mask(n);
      for (std::size_t x = 0; x < n && bad.empty(); ++x) {
        if (m_mask[x]) continue;
        const auto c = basics_impl(t, masks, m, q, static_cast<Element>(x));
        if (!c.all_equal()) {
          bad = "|M| = " + std::to_string(m.size()) + ", element " + std::to_string(x) + ": (" +
                yes_no(c.conjugate_to_coset) + ", " + yes_no(c.commutators_cover_m) + ", " +
                yes_no(c.centralizers_match) + ", " + yes_no(c.vanishes_over_m) + ")";
        }
      }
    }
    rec.record("basics", bad.empty(), bad);
  } else {
    rec.record("basics", std::nullopt);
  }

  if (sel.squaring) {
    bool all_squares = true;
    for (std::size_t j = 0; j < t.class_count() && all_squares; ++j) {
      all_squares = class_square_test(grp, t.classes(), j);
    }
    rec.squares_are_classes = all_squares;
    TheoremOutcome outcome;
    if (n % 2 == 1) outcome = all_squares == rec.gvz;
    rec.record("odd_squaring", outcome,
               "gvz " + yes_no(rec.gvz) + ", class squares are classes " + yes_no(all_squares));
  } else {
    rec.record("odd_squaring", std::nullopt);
  }

  if (sel.cm && p_base) {
    const std::uint64_t p = *p_base;
    const auto orders = center_over_kernel_orders(t);
    CmpEquivalence c;
    c.p = p;
    c.cm = rec.cm_index <= p - 1;
    c.gvz_center_kernel = rec.gvz && std::all_of(orders.begin(), orders.end(), [&](std::size_t o) { return o == p; });
    c.gvz_qp_values = rec.gvz && rec.qp.at(p);
    rec.record("cmp1", c.consistent(),
               "p " + std::to_string(p) + ": CM " + yes_no(c.cm) + ", center/kernel " +
                   yes_no(c.gvz_center_kernel) + ", Q_p values " + yes_no(c.gvz_qp_values));

    const auto z = center(grp);
    TheoremOutcome euler;
    std::uint64_t bound = 0;
    std::size_t faithful = 0;
    if (is_cyclic(grp, z)) {
      bound = euler_phi(z.size());
      faithful = faithful_count(t);
      euler = faithful >= bound;
    }
    rec.record("euler", euler,
               "faithful " + std::to_string(faithful) + " < phi(|Z|) " + std::to_string(bound));
    rec.record("p_minus_1", rec.cm_index >= p - 1,
               "cm index " + std::to_string(rec.cm_index) + " < p - 1");
    TheoremOutcome corollary;
    if (p == 2) corollary = (rec.cm_index <= 1) == (rec.gvz && rec.rational);
    rec.record("corollary_cm", corollary,
               "CM " + yes_no(rec.cm_index <= 1) + ", gvz and rational " + yes_no(rec.gvz && rec.rational));
  } else {
    for (const char* name : {"cmp1", "euler", "p_minus_1", "corollary_cm"}) rec.record(name, std::nullopt);
  }
  return rec;
}

}  // namespace grouplab
