#pragma once

// Itemized verification results with structured witnesses.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlr {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

using Witness = std::map<std::string, std::string>;

struct Check {
  std::string name;
  Status status = Status::pass;
  Witness witness;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::map<std::string, std::int64_t>& numbers() const { return numbers_; }
  std::map<std::string, std::int64_t>& numbers() { return numbers_; }

  void pass(const std::string& name) { checks_.push_back({name, Status::pass, {}}); }
  void fail(const std::string& name, Witness w) { checks_.push_back({name, Status::fail, std::move(w)}); }
  void skip(const std::string& name) { checks_.push_back({name, Status::skipped, {}}); }
  void add(Check c) { checks_.push_back(std::move(c)); }

  /// Records pass when the witness is empty.
  void record(const std::string& name, std::optional<Witness> w) {
    if (w)
      fail(name, std::move(*w));
    else
      pass(name);
  }

  void set_number(const std::string& key, std::int64_t v) { numbers_[key] = v; }

  /// Appends another report's checks, prefixing their names.
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.status, c.witness});
    for (const auto& [k, v] : other.numbers_) numbers_[prefix + k] = v;
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (c.status == Status::fail) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  Status status_of(const std::string& name) const {
    const Check* c = find(name);
    if (!c) throw std::out_of_range("no check named " + name);
    return c->status;
  }

  bool passed(const std::string& name) const { return status_of(name) == Status::pass; }

  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (c.status == Status::fail) return &c;
    return nullptr;
  }

 private:
  std::string command_;
  std::vector<Check> checks_;
  std::map<std::string, std::int64_t> numbers_;
};

}  // namespace nlr
