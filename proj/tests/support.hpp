#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grouplab/group.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline grouplab::Permutation random_permutation(std::size_t degree) {
  grouplab::Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

// Random subgroup of S_degree generated by a few random permutations, kept
// under max_order by retrying.
inline grouplab::Group random_permutation_group(std::size_t degree, std::size_t gens, std::size_t max_order) {
  for (;;) {
    std::vector<grouplab::Permutation> perms;
    for (std::size_t i = 0; i < gens; ++i) perms.push_back(random_permutation(degree));
    try {
      return grouplab::Group::from_permutations(degree, perms, "random", max_order);
    } catch (const grouplab::CapExceeded&) {
    }
  }
}

// Brute-force conjugacy class of x.
inline std::vector<grouplab::Element> naive_class(const grouplab::Group& g, grouplab::Element x) {
  std::vector<grouplab::Element> out;
  for (grouplab::Element y = 0; y < g.order(); ++y) out.push_back(g.mul(g.mul(g.inv(y), x), y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace testing_support
