#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "grouplab/corpus.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/group.hpp"
#include "support.hpp"

using namespace grouplab;
using testing_support::naive_class;
using testing_support::random_permutation_group;

namespace {

Permutation perm(std::initializer_list<std::uint32_t> images) { return Permutation(images); }

// S4 with element 1 = (0 1) and element 2 = (0 1 2 3).
Group s4() { return Group::from_permutations(4, {perm({1, 0, 2, 3}), perm({1, 2, 3, 0})}, "S4"); }
// S3 with element 1 = (0 1) and element 2 = (0 1 2).
Group s3() { return Group::from_permutations(3, {perm({1, 0, 2}), perm({1, 2, 0})}, "S3"); }
// Q8 with element 1 = i and element 2 = j.
Group q8() { return build_named_group("quaternion:8"); }

std::vector<std::size_t> class_sizes(const ClassList& cl) {
  std::vector<std::size_t> out;
  for (const auto& c : cl.classes) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> subgroup_orders(const std::vector<Subgroup>& subs) {
  std::vector<std::size_t> out;
  for (const auto& s : subs) out.push_back(s.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("groups from permutations") {
  CHECK(s3().order() == 6);
  CHECK(s4().order() == 24);
  CHECK(q8().order() == 8);
  CHECK(Group::from_permutations(5, {}, "trivial").order() == 1);

  SUBCASE("regular action of Q8 closes to order 8") {
    const auto q = q8();
    std::vector<Permutation> regular;
    for (Element s : {Element{1}, Element{2}}) {
      Permutation p(8);
      for (Element x = 0; x < 8; ++x) p[x] = q.mul(x, s);
      regular.push_back(p);
    }
    const auto g = Group::from_permutations(8, regular, "Q8 regular");
    CHECK(g.order() == 8);
    CHECK(class_sizes(conjugacy_classes(g)) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  }

  SUBCASE("invalid generators") {
    CHECK_THROWS_AS(Group::from_permutations(3, {perm({0, 0, 1})}, "bad"), InputError);
    CHECK_THROWS_AS(Group::from_permutations(3, {perm({0, 1})}, "bad"), InputError);
    CHECK_THROWS_AS(Group::from_permutations(3, {perm({0, 1, 3})}, "bad"), InputError);
  }

  SUBCASE("order cap") {
    CHECK_THROWS_AS(Group::from_permutations(5, {perm({1, 0, 2, 3, 4}), perm({1, 2, 3, 4, 0})}, "S5", 100),
                    CapExceeded);
  }
}

TEST_CASE("groups from cayley tables") {
  const auto z2 = Group::from_cayley_table({{0, 1}, {1, 0}}, "Z2");
  CHECK(z2.order() == 2);
  CHECK(z2.inv(0) == 0);
  CHECK(z2.inv(1) == 1);

  SUBCASE("identity relabelled to element 0") {
    const auto g = Group::from_cayley_table({{1, 0}, {0, 1}}, "Z2 shifted");
    CHECK(g.mul(0, 1) == 1);
    CHECK(g.mul(1, 1) == 0);
  }

  SUBCASE("rejected tables") {
    CHECK_THROWS_AS(Group::from_cayley_table({}, "empty"), InputError);
    CHECK_THROWS_AS(Group::from_cayley_table({{0, 1}, {1}}, "ragged"), InputError);
    CHECK_THROWS_AS(Group::from_cayley_table({{0, 1}, {1, 1}}, "not latin"), InputError);
    CHECK_THROWS_AS(Group::from_cayley_table({{0, 2}, {1, 0}}, "range"), InputError);
    // Latin square with identity that is not associative.
    CHECK_THROWS_AS(Group::from_cayley_table({{0, 1, 2, 3, 4},
                                              {1, 0, 3, 4, 2},
                                              {2, 4, 0, 1, 3},
                                              {3, 2, 4, 0, 1},
                                              {4, 3, 1, 2, 0}},
                                             "loop"),
                    InputError);
  }

  SUBCASE("cayley round trip") {
    const auto g = s4();
    const auto h = Group::from_cayley_table(g.cayley_table(), "copy");
    CHECK(h.cayley_table() == g.cayley_table());
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(conjugacy_classes(s3())) == std::vector<std::size_t>{1, 2, 3});
  CHECK(class_sizes(conjugacy_classes(q8())) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(class_sizes(conjugacy_classes(s4())) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  const auto c12 = build_named_group("cyclic:12");
  CHECK(conjugacy_classes(c12).size() == 12);

  SUBCASE("identity class first; class_of consistent") {
    const auto g = s4();
    const auto cl = conjugacy_classes(g);
    CHECK(cl.classes[0].rep == kIdentity);
    for (std::size_t j = 0; j < cl.size(); ++j) {
      for (auto x : cl.classes[j].members.members()) CHECK(cl.class_of[x] == j);
    }
  }
}

TEST_CASE("property: classes match brute force on random permutation groups") {
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_permutation_group(6, 2, 200);
    const auto cl = conjugacy_classes(g);
    std::size_t total = 0;
    for (const auto& c : cl.classes) {
      total += c.size();
      CHECK(c.size() * c.centralizer_order == g.order());
      const auto m = c.members.members();
      CHECK(std::vector<Element>(m.begin(), m.end()) == naive_class(g, c.rep));
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("center and commutators") {
  CHECK(center(s3()).size() == 1);
  const auto q = q8();
  const auto z = center(q);
  CHECK(z.size() == 2);
  const Element minus_one = q.pow(1, 2);
  CHECK(z.contains(minus_one));
  const auto c10 = build_named_group("cyclic:10");
  CHECK(center(c10).size() == 10);

  CHECK(commutator(q, 1, 1) == kIdentity);
  CHECK(commutator(q, 1, minus_one) == kIdentity);
  CHECK(commutator(q, 1, 2) == minus_one);
}

TEST_CASE("gamma sets and element commutator subgroups") {
  const auto g = s4();
  const Element transposition = 1;
  const auto gamma = gamma_set(g, transposition);
  CHECK(gamma.size() == 6);
  CHECK_FALSE(is_subgroup(g, gamma.members()));
  CHECK_FALSE(is_normal_subset(g, gamma));
  const auto gs = element_commutator_subgroup(g, transposition);
  CHECK(gs.size() == 12);
  // The only subgroup of order 12 in S4 is A4, which has no 4-cycles.
  for (auto x : gs.members()) CHECK(g.element_order(x) != 4);

  const auto q = q8();
  const auto gi = gamma_set(q, 1);
  CHECK(gi.size() == 2);
  CHECK(is_subgroup(q, gi.members()));
  CHECK(element_commutator_subgroup(q, 1) == center(q));
  const Element minus_one = q.pow(1, 2);
  CHECK(gamma_set(q, minus_one).size() == 1);
  CHECK(element_commutator_subgroup(q, minus_one).size() == 1);
}

TEST_CASE("normal subsets") {
  for (const char* spec : {"symmetric:4", "quaternion:16", "frobenius21"}) {
    const auto g = build_named_group(spec);
    const auto cl = conjugacy_classes(g);
    std::vector<Element> members;
    for (std::size_t j = 0; j < cl.size(); j += 2) {
      const auto m = cl.classes[j].members.members();
      members.insert(members.end(), m.begin(), m.end());
    }
    CHECK(is_normal_subset(g, ElementSet::from_members(members)));
    CHECK(is_normal_subset(g, center(g)));
  }
}

TEST_CASE("closures") {
  const auto g = s3();
  const Element three_cycle = 2;
  std::vector<Element> gens{three_cycle};
  const auto a3 = normal_closure(g, ElementSet::from_members({three_cycle}));
  CHECK(a3.size() == 3);
  CHECK(a3 == subgroup_closure(g, gens));
  CHECK(normal_closure(g, ElementSet::trivial()).size() == 1);

  std::vector<Element> t{1};
  const auto s4g = s4();
  const auto closure = subgroup_closure(s4g, t);
  const auto normal = normal_closure(s4g, ElementSet::from_members({1}));
  CHECK(closure.is_subset_of(normal));
  CHECK(normal.size() == 24);
}

TEST_CASE("property: subgroup closure is a subgroup whose order divides |G|") {
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_permutation_group(7, 2, 500);
    std::vector<Element> gens{static_cast<Element>(testing_support::rng()() % g.order())};
    const auto h = subgroup_closure(g, gens);
    CHECK(g.order() % h.size() == 0);
    CHECK(is_subgroup(g, h.members()));
    const auto n = normal_closure(g, h);
    CHECK(is_normal_subset(g, n));
    CHECK(h.is_subset_of(n));
  }
}

TEST_CASE("normal subgroups") {
  CHECK(subgroup_orders(normal_subgroups(q8())) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  CHECK(subgroup_orders(normal_subgroups(s3())) == std::vector<std::size_t>{1, 3, 6});
  CHECK(subgroup_orders(normal_subgroups(build_named_group("cyclic:7"))) == std::vector<std::size_t>{1, 7});
  CHECK(subgroup_orders(normal_subgroups(s4())) == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(normal_subgroups(build_named_group("dihedral:8")).size() == 6);
  CHECK_THROWS_AS(normal_subgroups(build_named_group("elemabelian:2:5"), 10), CapExceeded);
}

TEST_CASE("property: normal subgroups are exactly the normal unions of classes") {
  // Brute force over all unions of classes for groups with few classes.
  for (const char* spec : {"symmetric:4", "dihedral:12", "quaternion:16", "alternating:4", "frobenius21"}) {
    const auto g = build_named_group(spec);
    const auto cl = conjugacy_classes(g);
    REQUIRE(cl.size() <= 16);
    std::set<std::vector<Element>> expected;
    for (std::uint32_t mask = 1; mask < (1U << cl.size()); mask += 2) {
      std::vector<Element> members;
      for (std::size_t j = 0; j < cl.size(); ++j) {
        if (mask & (1U << j)) {
          const auto m = cl.classes[j].members.members();
          members.insert(members.end(), m.begin(), m.end());
        }
      }
      std::sort(members.begin(), members.end());
      if (is_subgroup(g, members)) expected.insert(members);
    }
    std::set<std::vector<Element>> found;
    for (const auto& n : normal_subgroups(g)) found.emplace(n.members().begin(), n.members().end());
    CHECK_MESSAGE(found == expected, spec);
  }
}

TEST_CASE("series") {
  const auto c6 = build_named_group("cyclic:6");
  CHECK(nilpotence_class(c6) == 1);
  CHECK(derived_length(c6) == 1);

  const auto d16 = build_named_group("dihedral:16");
  const auto lcs = lower_central_series(d16);
  std::vector<std::size_t> orders;
  for (const auto& t : lcs.terms) orders.push_back(t.size());
  CHECK(orders == std::vector<std::size_t>{16, 4, 2, 1});
  CHECK(nilpotence_class(d16) == 3);

  const auto s = s3();
  CHECK_FALSE(nilpotence_class(s).has_value());
  CHECK(lower_central_series(s).terms.back().size() == 3);
  CHECK(derived_length(s) == 2);
  CHECK(derived_length(q8()) == 2);
  CHECK(derived_length(s4()) == 3);
  CHECK(nilpotence_class(build_named_group("cyclic:1")) == 0);
  CHECK(nilpotence_class(build_named_group("heisenberg:3:1")) == 2);
}

TEST_CASE("quotients") {
  const auto q = q8();
  const auto k = quotient(q, center(q));
  CHECK(k.group.order() == 4);
  CHECK(k.group.exponent() == 2);
  for (Element a = 0; a < q.order(); ++a) {
    for (Element b = 0; b < q.order(); ++b) {
      CHECK(k.projection[q.mul(a, b)] == k.group.mul(k.projection[a], k.projection[b]));
    }
  }

  const auto g = s4();
  const auto same = quotient(g, Subgroup::trivial());
  CHECK(same.group.order() == 24);
  CHECK(class_sizes(conjugacy_classes(same.group)) == class_sizes(conjugacy_classes(g)));
  CHECK(quotient(g, Subgroup::whole(g)).group.order() == 1);

  std::vector<Element> t{1};
  CHECK_THROWS_AS(quotient(g, subgroup_closure(g, t)), InputError);
}

TEST_CASE("power maps") {
  const auto g = s3();
  const auto cl = conjugacy_classes(g);
  const auto pm = power_class_map(g, cl);
  for (std::size_t j = 0; j < cl.size(); ++j) {
    CHECK(pm(j, 1) == j);
    CHECK(pm(j, g.element_order(cl.classes[j].rep)) == 0);
  }
  const auto transpositions = cl.class_of[1];
  CHECK(pm(transpositions, 2) == 0);
}

TEST_CASE("direct products") {
  const auto q = q8();
  const auto qq = direct_product(q, q);
  CHECK(qq.order() == 64);
  CHECK(conjugacy_classes(qq).size() == 25);
  const auto c2 = build_named_group("cyclic:2");
  const auto klein = direct_product(c2, c2);
  CHECK(klein.order() == 4);
  CHECK(klein.exponent() == 2);
  CHECK(klein.is_abelian());
  CHECK_THROWS_AS(direct_product(q, q, 63), CapExceeded);
}

TEST_CASE("p-groups and cyclicity") {
  CHECK(p_group_prime(q8()) == 2u);
  CHECK(p_group_prime(build_named_group("heisenberg:5:1")) == 5u);
  CHECK_FALSE(p_group_prime(s3()).has_value());
  CHECK_FALSE(p_group_prime(build_named_group("cyclic:1")).has_value());
  const auto c9 = build_named_group("cyclic:9");
  CHECK(is_cyclic(c9, Subgroup::whole(c9)));
  const auto e9 = build_named_group("elemabelian:3:2");
  CHECK_FALSE(is_cyclic(e9, Subgroup::whole(e9)));
}
