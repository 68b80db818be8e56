#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/group.hpp"
#include "grouplab/theory.hpp"

namespace grouplab {

struct VerifyOptions {
  SuiteOptions suite;
  std::string suite_name = "all";
  /// Built-in corpus members up to this order.
  std::size_t max_order = 192;
  /// Family names filter the built-in corpus; entries containing ':' or
  /// '(' are explicit group specs added as they are.
  std::vector<std::string> families;
  /// Corpus file; when set, built-ins are used only if families are given.
  std::optional<std::string> file;
  std::size_t jobs = 1;
  /// Pairs of CM_{p-1} p-groups are multiplied when the product order is at
  /// most this.
  std::size_t product_max_order = 64;
  std::size_t order_cap = kDefaultOrderCap;
};

/// Everything verify would run, in the order it is evaluated.
std::vector<Group> verify_corpus(const VerifyOptions& options);

/// Runs theorem_suite on every group, then the product check when the cm
/// suite is selected. InternalError inside one group becomes a violation of
/// that record; input and cap errors propagate. Records come back sorted by
/// group name whatever the job count.
std::vector<VerificationRecord> run_verification(const std::vector<Group>& groups, const VerifyOptions& options);

/// Product check for one pair: records "product_cm" on the product's record.
VerificationRecord product_record(const Group& a, const Group& b, std::uint64_t p, const VerifyOptions& options);

}  // namespace grouplab
