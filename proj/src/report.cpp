#include "spanv/report.hpp"

namespace spanv {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "skipped";
  }
}

void Report::fail(std::string where, std::string what) {
  status_ = Status::fail;
  witnesses_.push_back({std::move(where), std::move(what)});
}

void Report::skip(std::string reason) {
  status_ = Status::skipped;
  witnesses_.push_back({"", std::move(reason)});
}

void Report::absorb(const Report& other) {
  if (other.status() == Status::fail) status_ = Status::fail;
  for (const auto& w : other.witnesses())
    witnesses_.push_back({other.name().empty() ? w.where : other.name() + ": " + w.where, w.what});
  checked_ += other.checked();
}

std::string Report::summary() const {
  std::string out = name_ + ": " + to_string(status_);
  if (!witnesses_.empty()) {
    const auto& w = witnesses_.front();
    out += " [" + (w.where.empty() ? "" : w.where + ": ") + w.what + "]";
    if (witnesses_.size() > 1) out += " (+" + std::to_string(witnesses_.size() - 1) + " more)";
  }
  return out;
}

}  // namespace spanv
