#pragma once

// Exhaustive cross-checks between the independent formulas, run by
// `qfarey verify <suite>` and by the acceptance binary.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfarey/io.hpp"

namespace qfarey {

struct SuiteReport {
  explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  long cases = 0;
  std::optional<std::string> counterexample;  // first failure
  std::vector<std::string> notes;

  /// Records a failed case, keeping only the first witness.
  void fail(std::string witness);
  Json to_json() const;
};

/// Regular-CF and negative-CF q-rationals agree (both flavors), r, s <= bound.
SuiteReport verify_thm2_5(int bound = 200);

/// parents() + the two q-Farey sums reproduce the q-rationals, r, s <= bound,
/// plus the all-2 expansions [[2^k]] for k <= 8 against direct continuants.
SuiteReport verify_farey_sums(int bound = 50);

/// Jones recursion vs closed form, J(1) = r, coefficient reversal and degree
/// for every [[c1..ck]] > 1 with sum(c) <= max_weight.
SuiteReport verify_jones(int max_weight = 14);

/// occ/hom ratio identities and the Farey identities for r, s <= bound. The
/// hom identity with weight q^(c_k + 2) is reported in the notes.
SuiteReport verify_corollary5_4(int bound = 50);

/// Every period with entries in [2, max_entry], length <= max_length, some
/// entry >= 3: series vs convergents through `order`, surd equivalences, and
/// the q = 1 value against the classical fixed point.
SuiteReport verify_quad(int max_entry = 5, int max_length = 3, int order = 24);

/// thm2_5, farey_sums, jones, corollary5_4, quad or all.
std::vector<SuiteReport> run_suite(std::string_view name);

/// Periods enumerated by verify_quad, in lexicographic order.
std::vector<std::vector<std::int64_t>> enumerate_periods(int max_entry, int max_length);

/// Negative expansions [[c1..ck]] with c1 >= 2, cj >= 2 and sum <= max_weight.
std::vector<std::vector<std::int64_t>> enumerate_knot_expansions(int max_weight);

}  // namespace qfarey
