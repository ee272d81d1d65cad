#ifndef POSETOP_WORKED_EXAMPLES_HPP_
#define POSETOP_WORKED_EXAMPLES_HPP_

// Replays of the classic worked examples: small compositions, the generation
// identities of the connected posets on at most four elements, the
// non-associativity counterexamples of mixed families, the WN and
// nabla-compatible class lists up to four elements and theta on a few
// inputs. Each example is recomputed, compared with a hand-decoded expected
// value, and can be diffed against stored golden JSON.

#include <string>
#include <vector>

#include <json.hpp>

namespace posetop {

struct WorkedExample {
  std::string group;       // golden file stem
  std::string name;
  std::string expression;
  nlohmann::json result;   // computed
  std::string expected;    // rendering of the decoded value
  bool matches = false;    // computed == expected
};

std::vector<WorkedExample> worked_examples();

// {name: {"expression": ..., "result": ...}} for one group.
nlohmann::json golden_document(const std::vector<WorkedExample>& all,
                               const std::string& group);

struct GoldenOutcome {
  enum class Status { Match, Mismatch, Missing, Written };
  std::string group;
  Status status = Status::Match;
  std::vector<std::string> differing;  // example names
};

std::string_view to_string(GoldenOutcome::Status s) noexcept;

// Compares every group with DIR/<group>.json; with `update` the files are
// (re)written instead.
std::vector<GoldenOutcome> check_golden(const std::vector<WorkedExample>& all,
                                        const std::string& dir, bool update);

}  // namespace posetop

#endif  // POSETOP_WORKED_EXAMPLES_HPP_
