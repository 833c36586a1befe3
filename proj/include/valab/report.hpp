#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valab/rational.hpp"

namespace valab {

enum class Status { Pass, Fail, Skipped, Indeterminate };

std::string_view to_string(Status s);

struct Witness {
  std::string tuple;
  std::string residual;
};

/// One named check. `id` is a stable machine-readable identifier; `anchor`
/// names the mathematical statement being checked.
struct CheckEntry {
  std::string id;
  Status status = Status::Pass;
  std::string anchor;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, std::string>> values;
  std::string note;
  std::size_t failures = 0;

  CheckEntry& value(std::string key, std::string v) {
    values.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

class CheckReport {
 public:
  void add(CheckEntry e) { entries_.push_back(std::move(e)); }
  void append(const CheckReport& other);

  const std::vector<CheckEntry>& entries() const noexcept { return entries_; }
  std::vector<CheckEntry>& entries() noexcept { return entries_; }

  bool passed() const;
  std::vector<std::string> failed_ids() const;
  const CheckEntry* find(std::string_view id) const;
  bool failed(std::string_view id) const;

 private:
  std::vector<CheckEntry> entries_;
};

/// Accumulates residuals of one identity over many argument tuples.
class IdentityTally {
 public:
  static constexpr std::size_t kMaxWitnesses = 4;

  IdentityTally(std::string id, std::string anchor) : id_(std::move(id)), anchor_(std::move(anchor)) {}

  void record(const std::string& tuple, const Vector& residual);
  void record(const std::string& tuple, bool holds, const std::string& detail = {});
  CheckEntry finish() const;

 private:
  std::string id_;
  std::string anchor_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::vector<Witness> witnesses_;
};

/// Entry whose status is decided by a single predicate.
CheckEntry verdict(std::string id, std::string anchor, bool holds, std::string note = {});

}  // namespace valab
