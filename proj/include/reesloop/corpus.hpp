#pragma once

// Bounded instance families for each verifier and a small worker pool that
// runs them and returns outcomes in instance-id order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reesloop/theorems.hpp"

namespace reesloop {

inline const std::vector<std::string> kTheoremTags = {
    "rees-quotient", "subsemigroup",  "remove-zero", "adjoin-zero",        "semitorees",
    "semitoreeszero", "unit-sandwich", "czeros",     "decompose-roundtrip",
};

bool is_theorem_tag(const std::string& tag);

struct CorpusBounds {
  std::size_t max_order = 3;        // enumerated semigroups
  std::size_t max_dim = 2;          // |I|, |J|
  std::size_t max_group = 3;        // cyclic groups C1..Cn as Rees bases
  std::uint64_t seed = 1;           // randomized representative reruns
};

struct Instance {
  std::string tag;
  std::string id;
  std::function<VerificationReport()> run;
};

struct Outcome {
  std::string tag;
  std::string id;
  std::optional<VerificationReport> report;
  std::string error;  // set when the verifier threw

  bool passed() const { return report && report->holds(); }
  /// The RESULT line; verifier errors print as FAIL with the message.
  std::string result_line() const;
};

std::vector<Instance> corpus_instances(const std::string& tag, const CorpusBounds& bounds);

/// Runs every instance on at most `workers` threads; outcomes sorted by (tag, id).
std::vector<Outcome> run_instances(const std::vector<Instance>& instances, std::size_t workers);

/// Worker count from REES_LOOP_WORKERS, else the hardware concurrency.
std::size_t default_workers();

/// Every regular J x I pattern over S u {ZERO}.
std::vector<SandwichMatrix> regular_sandwich_matrices(std::size_t order, std::size_t i_count,
                                                      std::size_t j_count);

/// The Brandt semigroup B2 = M0(trivial; 2, 2; identity pattern).
FiniteSemigroup brandt_b2();

}  // namespace reesloop
