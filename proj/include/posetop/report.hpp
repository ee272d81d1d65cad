#ifndef POSETOP_REPORT_HPP_
#define POSETOP_REPORT_HPP_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace posetop {

struct Failure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  static constexpr std::size_t kKeptFailures = 20;

  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // the first kKeptFailures
  double seconds = 0.0;

  bool ok() const { return failure_count == 0; }

  // Counts one case; records a failure when `holds` is false. The strings
  // are only built by callers on failure, so pass lambdas for expensive ones.
  template <class Describe>
  void check(bool holds, Describe describe) {
    ++cases;
    if (holds) return;
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back(describe());
  }

  void merge(const VerificationReport& other) {
    cases += other.cases;
    failure_count += other.failure_count;
    for (auto const& f : other.failures) {
      if (failures.size() < kKeptFailures) failures.push_back(f);
    }
  }
};

// Sets report.seconds on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace posetop

#endif  // POSETOP_REPORT_HPP_
