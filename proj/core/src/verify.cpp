#include "grouplab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "grouplab/char_table.hpp"
#include "grouplab/corpus.hpp"
#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

bool is_explicit_spec(const std::string& s) {
  return s.find(':') != std::string::npos || s.find('(') != std::string::npos;
}

// Runs task(i) for i in [0, n) on up to jobs threads; the first failure by
// index is rethrown.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& task) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

VerificationRecord verify_one(const Group& g, const SuiteOptions& suite) {
  try {
    return theorem_suite(character_table(g), suite);
  } catch (const InternalError& e) {
    VerificationRecord rec;
    rec.group = g.name();
    rec.order = g.order();
    rec.violations.push_back(std::string("internal: ") + e.what());
    return rec;
  }
}

bool is_cm_p_minus_1(const VerificationRecord& r, std::uint64_t p) { return r.cm_index <= p - 1; }

}  // namespace

std::vector<Group> verify_corpus(const VerifyOptions& options) {
  std::vector<Group> groups;
  if (options.file) groups = ingest_groups_file(*options.file, options.order_cap);

  std::vector<std::string> names;
  std::vector<std::string> specs;
  for (const auto& f : options.families) {
    if (is_explicit_spec(f)) {
      specs.push_back(f);
    } else {
      const auto& known = family_names();
      if (std::find(known.begin(), known.end(), f) == known.end()) {
        throw InputError("unknown family '" + f + "'");
      }
      names.push_back(f);
    }
  }
  const bool use_builtins = !options.file || !names.empty();
  if (use_builtins && (specs.empty() || !names.empty())) {
    for (auto& s : default_corpus(std::min(options.max_order, options.order_cap), names)) specs.push_back(s);
  }
  for (const auto& s : specs) groups.push_back(build_named_group(s, options.order_cap));

  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.name() < b.name(); });
  groups.erase(std::unique(groups.begin(), groups.end(),
                           [](const Group& a, const Group& b) { return a.name() == b.name(); }),
               groups.end());
  return groups;
}

VerificationRecord product_record(const Group& a, const Group& b, std::uint64_t p, const VerifyOptions& options) {
  auto prod = direct_product(a, b, options.order_cap);
  auto rec = verify_one(prod, options.suite);
  const bool holds = is_cm_p_minus_1(rec, p);
  rec.record("product_cm", holds,
             "cm index " + std::to_string(rec.cm_index) + " exceeds " + std::to_string(p - 1));
  return rec;
}

std::vector<VerificationRecord> run_verification(const std::vector<Group>& groups, const VerifyOptions& options) {
  std::vector<VerificationRecord> records(groups.size());
  parallel_for(groups.size(), options.jobs, [&](std::size_t i) { records[i] = verify_one(groups[i], options.suite); });

  if (options.suite.selection.cm) {
    // Pairs (i <= j) of CM_{p-1} p-groups for a common p.
    std::vector<std::pair<std::size_t, std::uint64_t>> candidates;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].order() < 2 || !records[i].violations.empty()) continue;
      const auto p = p_group_prime(groups[i]);
      if (p && is_cm_p_minus_1(records[i], *p)) candidates.emplace_back(i, *p);
    }
    struct Pair {
      std::size_t a, b;
      std::uint64_t p;
    };
    std::vector<Pair> pairs;
    for (std::size_t x = 0; x < candidates.size(); ++x) {
      for (std::size_t y = x; y < candidates.size(); ++y) {
        const auto [i, p] = candidates[x];
        const auto [j, q] = candidates[y];
        if (p != q) continue;
        if (groups[i].order() * groups[j].order() > std::min(options.product_max_order, options.order_cap)) continue;
        pairs.push_back({i, j, p});
      }
    }
    std::vector<VerificationRecord> products(pairs.size());
    parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
      products[k] = product_record(groups[pairs[k].a], groups[pairs[k].b], pairs[k].p, options);
    });
    for (auto& rec : products) {
      auto same = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.group == rec.group; });
      if (same == records.end()) {
        records.push_back(std::move(rec));
      } else if (!same->theorem("product_cm").has_value()) {
        const auto outcome = rec.theorem("product_cm");
        same->record("product_cm", outcome, "cm index " + std::to_string(same->cm_index) + " too large");
      }
    }
  }

  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.group < b.group; });
  return records;
}

}  // namespace grouplab
