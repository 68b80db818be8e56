#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "grouplab/char_table.hpp"
#include "grouplab/corpus.hpp"
#include "grouplab/errors.hpp"

using namespace grouplab;

namespace {

std::size_t count_order_at_most_2(const Group& g) {
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) n += g.element_order(x) <= 2;
  return n;
}

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("spec parsing") {
  CHECK(parse_group_spec("quaternion:8").text() == "quaternion:8");
  CHECK(parse_group_spec(" product( quaternion:8 , cyclic:2 ) ").text() == "product(quaternion:8,cyclic:2)");
  CHECK(parse_group_spec("product(product(cyclic:2,cyclic:3),frobenius21)").order() == 126);
  CHECK(parse_group_spec("extraspecial:3:1:-").sign == '-');
  CHECK(parse_group_spec("heisenberg:5:2").order() == 3125);
  CHECK(parse_group_spec("symmetric:20").order() == 2432902008176640000ULL);

  for (const char* bad : {"", "nothing:3", "cyclic", "cyclic:0", "cyclic:x", "cyclic:3:4", "dihedral:5",
                          "dihedral:2", "quaternion:12", "quaternion:4", "semidihedral:8", "heisenberg:2:1",
                          "heisenberg:3:0", "elemabelian:4:1", "extraspecial:2:1", "extraspecial:2:1:x",
                          "product(cyclic:2)", "product(cyclic:2,cyclic:3", "cyclic:2)", "frobenius21:1",
                          "symmetric:21", "cyclic:-3"}) {
    CHECK_THROWS_AS_MESSAGE(parse_group_spec(bad), InputError, bad);
  }
}

TEST_CASE("family constructions") {
  const auto trivial = build_named_group("cyclic:1");
  CHECK(trivial.order() == 1);

  for (std::uint64_t n : {4, 6, 8, 10, 16, 30}) {
    const auto g = build_named_group("dihedral:" + std::to_string(n));
    CHECK(g.order() == n);
    CHECK(count_order_at_most_2(g) == n / 2 + (n % 4 == 0 ? 2 : 1));
  }
  for (std::uint64_t n : {8, 16, 32, 64}) {
    const auto g = build_named_group("quaternion:" + std::to_string(n));
    CHECK(g.order() == n);
    CHECK(count_order_at_most_2(g) == 2);
    CHECK(g.exponent() == n / 2);
    CHECK(center(g).size() == 2);
    CHECK(degree_set(character_table(g)) == std::vector<std::uint64_t>{1, 2});
  }
  for (std::uint64_t n : {16, 32, 64}) {
    const auto g = build_named_group("semidihedral:" + std::to_string(n));
    CHECK(g.order() == n);
    CHECK(g.exponent() == n / 2);
    CHECK(center(g).size() == 2);
    CHECK(count_order_at_most_2(g) == n / 4 + 2);
    CHECK(degree_set(character_table(g)) == std::vector<std::uint64_t>{1, 2});
  }
  const std::size_t partitions[] = {1, 1, 2, 3, 5, 7, 11};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = build_named_group("symmetric:" + std::to_string(n));
    CHECK(conjugacy_classes(g).size() == partitions[n]);
  }
  CHECK(build_named_group("alternating:1").order() == 1);
  CHECK(build_named_group("alternating:2").order() == 1);
  CHECK(build_named_group("alternating:5").order() == 60);
  CHECK(conjugacy_classes(build_named_group("alternating:5")).size() == 5);

  const auto e = build_named_group("elemabelian:3:3");
  CHECK(e.order() == 27);
  CHECK(e.exponent() == 3);
  CHECK(e.is_abelian());

  const auto h = build_named_group("heisenberg:3:1");
  CHECK(h.order() == 27);
  CHECK(h.exponent() == 3);
  CHECK(nilpotence_class(h) == 2u);
  const auto h2 = build_named_group("heisenberg:3:2");
  CHECK(h2.order() == 243);
  CHECK(center(h2).size() == 3);

  const auto f = build_named_group("frobenius21");
  CHECK(f.order() == 21);
  CHECK(conjugacy_classes(f).size() == 5);

  CHECK(degree_set(character_table(build_named_group("quaternion:8"))) == std::vector<std::uint64_t>{1, 2});
  CHECK_THROWS_AS(build_named_group("symmetric:6", 100), CapExceeded);
  CHECK_THROWS_AS(build_named_group("heisenberg:7:3"), CapExceeded);
}

TEST_CASE("extraspecial groups") {
  for (const char* spec : {"extraspecial:2:1:+", "extraspecial:2:1:-", "extraspecial:2:2:+", "extraspecial:2:2:-",
                           "extraspecial:2:3:+", "extraspecial:2:3:-", "extraspecial:3:1:+", "extraspecial:3:1:-",
                           "extraspecial:3:2:+", "extraspecial:3:2:-", "extraspecial:5:1:+", "extraspecial:5:1:-"}) {
    const auto parsed = parse_group_spec(spec);
    const auto g = build_named_group(parsed);
    const auto p = parsed.params[0];
    const auto n = parsed.params[1];
    CHECK(g.order() == parsed.order());
    const auto z = center(g);
    CHECK_MESSAGE(z.size() == p, spec);
    CHECK(commutator_subgroup(g, ElementSet::whole(g), ElementSet::whole(g)) == z);
    if (p == 2) {
      // 2^{2n} + e 2^n elements square to the identity.
      const std::size_t base = std::size_t{1} << (2 * n);
      const std::size_t shift = std::size_t{1} << n;
      CHECK(count_order_at_most_2(g) == (parsed.sign == '+' ? base + shift : base - shift));
    } else {
      CHECK(g.exponent() == (parsed.sign == '+' ? p : p * p));
    }
  }
}

TEST_CASE("default corpus") {
  const auto all = default_corpus(192);
  for (const char* must : {"heisenberg:3:1", "heisenberg:5:1", "product(quaternion:8,quaternion:8)",
                           "product(heisenberg:3:1,cyclic:3)", "frobenius21", "symmetric:4", "alternating:4",
                           "dihedral:16", "semidihedral:16", "quaternion:16", "cyclic:9", "cyclic:27"}) {
    CHECK_MESSAGE(std::find(all.begin(), all.end(), must) != all.end(), must);
  }
  for (const auto& s : all) CHECK(parse_group_spec(s).order() <= 192);
  for (const auto& s : default_corpus(16)) CHECK(parse_group_spec(s).order() <= 16);
  const auto dihedral = default_corpus(192, {"dihedral"});
  CHECK(!dihedral.empty());
  for (const auto& s : dihedral) CHECK(s.rfind("dihedral:", 0) == 0);
  for (const auto& s : default_corpus(192, {"product"})) CHECK(s.rfind("product(", 0) == 0);
  for (const auto& f : family_names()) CHECK_MESSAGE(!default_corpus(192, {f}).empty(), f);
}

TEST_CASE("corpus files") {
  SUBCASE("S3 from generators") {
    const auto groups = ingest_groups_json(
        R"({"groups":[{"name":"S3","kind":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]}]})");
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].order() == 6);
    CHECK(groups[0].name() == "S3");
  }
  SUBCASE("empty corpus") { CHECK(ingest_groups_json(R"({"groups":[]})").empty()); }
  SUBCASE("repeated image names the entry") {
    const auto text = error_text([] {
      ingest_groups_json(R"({"groups":[{"name":"broken","kind":"permutation","degree":3,"generators":[[0,0,1]]}]})");
    });
    CHECK(text.find("broken") != std::string::npos);
    CHECK_THROWS_AS(
        ingest_groups_json(R"({"groups":[{"name":"broken","kind":"permutation","degree":3,"generators":[[0,0,1]]}]})"),
        InputError);
  }
  SUBCASE("schema violations") {
    for (const char* bad : {"not json", "[]", R"({"groups":{}})", R"({"groups":[1]})",
                            R"({"groups":[{"kind":"cayley","table":[[0]]}]})",
                            R"({"groups":[{"name":"a","kind":"matrix"}]})",
                            R"({"groups":[{"name":"a","kind":"permutation","generators":[]}]})",
                            R"({"groups":[{"name":"a","kind":"permutation","degree":2,"generators":[[1,-1]]}]})",
                            R"({"groups":[{"name":"a","kind":"cayley"}]})",
                            R"({"groups":[{"name":"a","kind":"cayley","table":[[0,1],[1,1]]}]})"}) {
      CHECK_THROWS_AS_MESSAGE(ingest_groups_json(bad), InputError, bad);
    }
  }
  SUBCASE("cap applies to entries") {
    CHECK_THROWS_AS(ingest_groups_json(R"({"groups":[{"name":"c3","kind":"cayley","table":[[0,1,2],[1,2,0],[2,0,1]]}]})", 2),
                    CapExceeded);
  }
  SUBCASE("files") {
    CHECK_THROWS_AS(ingest_groups_file("/nonexistent/corpus.json"), InputError);
    const std::string path = "corpus_test_tmp.json";
    {
      std::ofstream out(path);
      out << R"({"groups":[{"name":"z2","kind":"cayley","table":[[0,1],[1,0]]}]})";
    }
    const auto groups = ingest_groups_file(path);
    std::remove(path.c_str());
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].order() == 2);
  }
}

TEST_CASE("property: built-in groups survive a cayley round trip") {
  std::vector<Group> groups;
  for (const auto& s : default_corpus(64)) groups.push_back(build_named_group(s));
  const auto back = ingest_groups_json(corpus_json(groups));
  REQUIRE(back.size() == groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(back[i].name() == groups[i].name());
    CHECK(back[i].cayley_table() == groups[i].cayley_table());
  }
}
