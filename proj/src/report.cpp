#include "valab/report.hpp"

#include <algorithm>

namespace valab {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

void CheckReport::append(const CheckReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool CheckReport::passed() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const CheckEntry& e) { return e.status == Status::Fail; });
}

std::vector<std::string> CheckReport::failed_ids() const {
  std::vector<std::string> ids;
  for (const auto& e : entries_)
    if (e.status == Status::Fail) ids.push_back(e.id);
  return ids;
}

const CheckEntry* CheckReport::find(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

bool CheckReport::failed(std::string_view id) const {
  const CheckEntry* e = find(id);
  return e && e->status == Status::Fail;
}

void IdentityTally::record(const std::string& tuple, const Vector& residual) {
  ++checked_;
  if (is_zero(residual)) return;
  ++failures_;
  if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back({tuple, to_string(residual)});
}

void IdentityTally::record(const std::string& tuple, bool holds, const std::string& detail) {
  ++checked_;
  if (holds) return;
  ++failures_;
  if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back({tuple, detail});
}

CheckEntry IdentityTally::finish() const {
  CheckEntry e;
  e.id = id_;
  e.anchor = anchor_;
  e.status = failures_ ? Status::Fail : Status::Pass;
  e.failures = failures_;
  e.witnesses = witnesses_;
  e.value("tuples_checked", std::to_string(checked_));
  if (failures_) e.value("tuples_failed", std::to_string(failures_));
  return e;
}

CheckEntry verdict(std::string id, std::string anchor, bool holds, std::string note) {
  CheckEntry e;
  e.id = std::move(id);
  e.anchor = std::move(anchor);
  e.status = holds ? Status::Pass : Status::Fail;
  e.failures = holds ? 0 : 1;
  e.note = std::move(note);
  return e;
}

}  // namespace valab
