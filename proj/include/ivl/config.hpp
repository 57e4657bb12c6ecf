#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ivl {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

/// An enumeration hit one of the configured limits.  Never silently truncated.
struct CapExceeded : Error {
  using Error::Error;
};

struct NotSubgroup : Error {
  using Error::Error;
};

struct NotMember : Error {
  using Error::Error;
};

/// The maximal-subgroup data file has no entry for the requested group.
struct DatafileMiss : Error {
  using Error::Error;
};

/// Neither provider could deliver maximal subgroups for some group.
struct MaximalUnavailable : Error {
  using Error::Error;
};

/// Limits for every enumeration that can blow up.
struct Caps {
  std::size_t coset_index = 200'000;         // degree of an explicit coset action
  std::size_t class_elements = 10'000'000;   // elements touched by class tables / element orbits
  std::size_t subgroup_orbit = 100'000;      // conjugates of one subgroup
  std::uint64_t oracle_order = 50'000;       // largest group fed to the subgroup oracle
};

}  // namespace ivl
