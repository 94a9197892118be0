#pragma once

#include <string>
#include <vector>

namespace braidsym {

/// `quotient_pass` marks a check that only holds in a quotient group
/// (typically an identity verified through its matrix image); it counts as a
/// pass but is reported separately from exact passes.
enum class CheckStatus { pass, fail, quotient_pass };

std::string to_string(CheckStatus status);

struct Check {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::fail;
  /// Both sides of a failed comparison, when there is something to show.
  std::string witness;
};

class VerificationReport {
 public:
  void add(std::string id, std::string description, bool ok, std::string witness = {});
  void add_quotient(std::string id, std::string description, bool ok, std::string witness = {});
  void add_note(std::string note);
  void merge(const VerificationReport& other);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  const Check* find(const std::string& id) const;

  bool all_passed() const;
  std::size_t count(CheckStatus status) const;

  /// Orders checks by id so output is independent of evaluation order.
  void sort();

  /// JSON array of {check_id, description, status[, witness]}.
  std::string to_json() const;
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

}  // namespace braidsym
