#pragma once

#include "postimp/decide.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace postimp::selftest {

struct Row {
  std::string name;
  std::size_t cases = 0;
  std::size_t disagreements = 0;
};

/// Random in-fragment instances (at most 10 variables, 4 premises, depth 5)
/// decided by the fragment procedure and by enumeration. `only` restricts
/// the run to one fragment; General compares sequential and threaded
/// enumeration on a complete base.
std::vector<Row> run(std::uint64_t seed, std::size_t cases, std::optional<Fragment> only,
                     const OracleOptions& options);

} // namespace postimp::selftest
