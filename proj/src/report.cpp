#include "braidsym/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace braidsym {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::quotient_pass:
      return "quotient-level-pass";
  }
  return "fail";
}

void VerificationReport::add(std::string id, std::string description, bool ok,
                             std::string witness) {
  checks_.push_back({std::move(id), std::move(description),
                     ok ? CheckStatus::pass : CheckStatus::fail,
                     ok ? std::string{} : std::move(witness)});
}

void VerificationReport::add_quotient(std::string id, std::string description, bool ok,
                                      std::string witness) {
  checks_.push_back({std::move(id), std::move(description),
                     ok ? CheckStatus::quotient_pass : CheckStatus::fail,
                     ok ? std::string{} : std::move(witness)});
}

void VerificationReport::add_note(std::string note) { notes_.push_back(std::move(note)); }

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

const Check* VerificationReport::find(const std::string& id) const {
  const auto it = std::ranges::find(checks_, id, &Check::id);
  return it == checks_.end() ? nullptr : &*it;
}

bool VerificationReport::all_passed() const {
  return std::ranges::none_of(checks_,
                              [](const Check& c) { return c.status == CheckStatus::fail; });
}

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::ranges::count(checks_, status, &Check::status));
}

void VerificationReport::sort() { std::ranges::stable_sort(checks_, {}, &Check::id); }

std::string VerificationReport::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json entry = {
        {"check_id", c.id}, {"description", c.description}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) {
      entry["witness"] = c.witness;
    }
    out.push_back(std::move(entry));
  }
  return out.dump(2);
}

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    const std::string tag = c.status == CheckStatus::pass            ? "PASS"
                            : c.status == CheckStatus::quotient_pass ? "PASS (quotient)"
                                                                     : "FAIL";
    out += "[" + tag + "] " + c.id + ": " + c.description + "\n";
    if (!c.witness.empty()) {
      out += "    witness: " + c.witness + "\n";
    }
  }
  for (const auto& n : notes_) {
    out += "note: " + n + "\n";
  }
  out += std::to_string(checks_.size()) + " checks, " + std::to_string(count(CheckStatus::pass)) +
         " exact pass, " + std::to_string(count(CheckStatus::quotient_pass)) +
         " quotient-level pass, " + std::to_string(count(CheckStatus::fail)) + " fail\n";
  return out;
}

}  // namespace braidsym
