#pragma once

#include <map>
#include <string>
#include <vector>

namespace spanv {

// Outcome of a yes/no check with a located reason on failure.
struct Verdict {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

struct Witness {
  std::string where;
  std::string what;
};

class Report {
 public:
  explicit Report(std::string name = "") : name_(std::move(name)) {}

  void fail(std::string where, std::string what);
  void skip(std::string reason);
  void note(const std::string& key, std::string value) { details_[key] = std::move(value); }
  void count(std::size_t n = 1) { checked_ += n; }
  // Appends another report's witnesses and marks this report failed if it failed.
  void absorb(const Report& other);

  const std::string& name() const { return name_; }
  Status status() const { return status_; }
  bool passed() const { return status_ == Status::pass; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::map<std::string, std::string>& details() const { return details_; }
  std::size_t checked() const { return checked_; }
  std::string summary() const;

 private:
  std::string name_;
  Status status_ = Status::pass;
  std::vector<Witness> witnesses_;
  std::map<std::string, std::string> details_;
  std::size_t checked_ = 0;
};

}  // namespace spanv
