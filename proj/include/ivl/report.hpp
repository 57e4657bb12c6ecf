#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ivl/lattice_interval.hpp"

namespace ivl {

/// One method's answer for one pair, with its wall time in seconds.
struct IntervalReport {
  std::string method;
  LatticeInterval interval;
  double wall_time = 0;
  std::size_t count() const noexcept { return interval.subgroups.size(); }
};

/// The interval as read back from JSON.  Generators are optional so that reference
/// fixtures can carry only orders and inclusions.
struct ParsedInterval {
  std::uint64_t bottom_order = 1;
  std::uint64_t top_order = 1;
  std::optional<std::size_t> degree;
  std::vector<std::string> bottom_generators;
  std::vector<std::string> top_generators;
  struct Entry {
    std::size_t index = 0;
    std::uint64_t order = 1;
    std::vector<std::string> generators;
  };
  std::vector<Entry> subgroups;
  std::vector<Edge> inclusions;
};

/// {bottom_order, top_order, degree, bottom_generators, top_generators,
///  subgroups: [{index, order, generators}], inclusions: [[i, j], ...]}
/// Index 0 is the bottom, N+1 the top.
std::string emit_json(const LatticeInterval& interval, int indent = 2);

/// Throws ParseError on malformed input or inconsistent indices and orders.
ParsedInterval parse_json(const std::string& text);

/// Rebuilds the groups of a parsed interval; needs degree and generators throughout.
LatticeInterval to_interval(const ParsedInterval& parsed);

/// Hasse diagram, one rank per subgroup order, edges pointing upwards.
std::string emit_dot(const LatticeInterval& interval, const std::string& name = "interval");

/// Plain listing: one line per subgroup with index, order, and generators, then the edges.
std::string emit_table(const LatticeInterval& interval);

/// One bench row: a labelled pair and whatever each requested method produced.
struct BenchRow {
  std::string label;
  std::uint64_t index = 0;  // [G:U]
  std::vector<IntervalReport> reports;
  std::vector<std::pair<std::string, std::string>> errors;  // (method, message)
  /// Set when at least two methods finished and disagree.
  std::optional<std::string> mismatch;
};

/// Aligned table: label, index factorization, count, agreement, one time column per
/// method.  The header is printed even without rows.
void print_bench_table(std::ostream& out, const std::vector<BenchRow>& rows, const std::vector<std::string>& methods);

}  // namespace ivl
