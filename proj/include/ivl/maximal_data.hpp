#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivl/perm_group.hpp"
#include "ivl/subgroup_lattice.hpp"

namespace ivl {

/// One group record of a maximal-subgroup data file:
///
///   group <label> order=<n> degree=<d>
///   gens <perm>;<perm>            (optional: the group itself)
///   maximal <order>: <perm>;<perm>
///
/// Lines starting with '#' and blank lines are ignored.
struct MaximalRecord {
  std::string label;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::vector<std::string> gens;
  struct Entry {
    std::uint64_t order = 0;
    std::vector<std::string> gens;
  };
  std::vector<Entry> maximals;
};

class MaximalData {
 public:
  MaximalData() = default;
  explicit MaximalData(std::vector<MaximalRecord> records) : records_(std::move(records)) {}

  static MaximalData parse(const std::string& text);
  static MaximalData load(const std::string& path);
  std::string emit() const;

  const std::vector<MaximalRecord>& records() const noexcept { return records_; }

  /// Maximal classes of t from the first matching record.  A record matches when degree,
  /// order and (if given) the group itself agree, and every listed maximal subgroup lies in
  /// t with the stated order.  Throws DatafileMiss when nothing matches.
  MaximalClasses lookup(const PermGroup& t) const;
  bool has(const PermGroup& t) const;

 private:
  std::optional<MaximalClasses> try_record(const MaximalRecord& r, const PermGroup& t) const;
  std::vector<MaximalRecord> records_;
};

}  // namespace ivl
