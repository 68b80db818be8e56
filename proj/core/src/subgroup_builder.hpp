#pragma once

#include <cstdint>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab::detail {

// Incremental subgroup closure (Dimino-style coset extension). The current
// set is always a subgroup; adding an element extends it by whole cosets.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Group& g) : g_(&g), in_(g.order(), 0) {
    in_[kIdentity] = 1;
    elements_.push_back(kIdentity);
  }

  // Seed from a known subgroup and a generating set for it.
  SubgroupBuilder(const Group& g, const Subgroup& h, std::vector<Element> gens)
      : g_(&g), in_(g.order(), 0), gens_(std::move(gens)) {
    for (auto x : h.members()) {
      in_[x] = 1;
      elements_.push_back(x);
    }
  }

  bool contains(Element x) const { return in_[x] != 0; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& generators() const { return gens_; }

  /// Returns true if x was new.
  bool add(Element x) {
    if (in_[x]) return false;
    gens_.push_back(x);
    const std::size_t base = elements_.size();
    std::vector<Element> reps{x};
    add_coset(base, x);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (auto s : gens_) {
        Element y = g_->mul(reps[i], s);
        if (!in_[y]) {
          reps.push_back(y);
          add_coset(base, y);
        }
      }
    }
    return true;
  }

  Subgroup result() const {
    return Subgroup::from_members(elements_, true);
  }

 private:
  void add_coset(std::size_t base, Element r) {
    for (std::size_t i = 0; i < base; ++i) {
      Element y = g_->mul(elements_[i], r);
      in_[y] = 1;
      elements_.push_back(y);
    }
  }

  const Group* g_;
  std::vector<std::uint8_t> in_;
  std::vector<Element> elements_;
  std::vector<Element> gens_;
};

}  // namespace grouplab::detail
