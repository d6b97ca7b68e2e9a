#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwa {

/// Raised when input data is malformed (wrong shape, entries out of range,
/// unresolved names). Distinct from a law failure, which is reported in a
/// CheckReport instead.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One failed instance of a quantified law: the law's stable identifier plus
/// the element tuple that violates it.
struct Violation {
  std::string law;
  std::vector<int> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckOptions {
  std::size_t witness_cap = 16;
  // Stop scanning once the verdict is known false. Used by the audit loops
  // where only the verdict matters.
  bool early_exit = false;
};

/// Verdict of a law check. `ok` is true iff no violation was found during an
/// exhaustive scan; `violations` holds up to `witness_cap` witnesses.
class CheckReport {
 public:
  CheckReport() = default;

  bool ok() const { return violation_count_ == 0; }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t violation_count() const { return violation_count_; }

  void record(std::string law, std::vector<int> witness, std::size_t cap) {
    ++violation_count_;
    if (violations_.size() < cap) {
      violations_.push_back({std::move(law), std::move(witness)});
    }
  }

  void merge(const CheckReport& other) {
    violation_count_ += other.violation_count_;
    for (const auto& v : other.violations_) violations_.push_back(v);
  }

 private:
  std::vector<Violation> violations_;
  std::size_t violation_count_ = 0;
};

}  // namespace gwa
