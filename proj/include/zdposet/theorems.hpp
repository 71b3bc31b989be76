#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zdposet/poset.hpp"

namespace zdp {

enum class Status { pass, fail, not_applicable };

const char *to_string(Status s);

struct Verdict {
  Status status = Status::pass;
  /// Offending vertices/ideals (at most four items) when status is fail.
  std::vector<std::string> witness;
  /// Why the check was skipped when status is not_applicable.
  std::string reason;

  bool operator==(const Verdict &) const = default;
};

struct TheoremReport {
  std::string poset_id;
  std::map<std::string, Verdict> verdicts;
};

/// Every check name, in report order.
const std::vector<std::string> &check_names();

/// Runs every check on one poset. Failures are returned, never thrown.
TheoremReport check_poset(const Poset &p);

struct CheckCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;

  bool operator==(const CheckCounts &) const = default;
};

struct SweepFailure {
  std::size_t size = 0;  ///< element count of the poset
  std::size_t index = 0; ///< position in PosetEnumeration(size)
  std::string poset;
  std::string check;
  std::vector<std::string> witness;

  bool operator==(const SweepFailure &) const = default;
};

struct SweepSummary {
  std::size_t max_n = 0;
  std::size_t instances_checked = 0;
  std::map<std::string, CheckCounts> counts;
  /// Sorted by (size, index, check).
  std::vector<SweepFailure> failures;

  bool operator==(const SweepSummary &) const = default;
};

/// check_poset over every poset of PosetEnumeration(k), k = 1..max_n, split
/// across `workers` threads. The result does not depend on `workers`.
/// Throws CapExceeded unless 1 <= max_n <= kEnumerationCap.
SweepSummary sweep(std::size_t max_n, std::size_t workers);

} // namespace zdp
