#pragma once

// Text formats.
//
//   base file      one function per line: `name arity bits`, bits[j] is row j
//   instance file  optional `base: <path>`, any number of `premise: <formula>`,
//                  exactly one `conclusion: <formula>`
//   DNF file       one term per line, literals `x3` / `-x3`
//   linear system  `m n`, then m lines of n coefficient bits, a space, the rhs bit
//
// Blank lines and lines starting with `#` are ignored (the linear-system
// format excepted, which is positional). Errors are ParseError carrying the
// source name, line and column.

#include "postimp/formula.hpp"
#include "postimp/gf2.hpp"
#include "postimp/reductions.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace postimp::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

BasePtr parse_base(std::string_view text, const std::string& source = "<base>");
std::string format_base(const Base& base);

struct InstanceText {
  struct Line {
    std::size_t number = 0;
    std::size_t offset = 0; // characters before `text` on its line
    std::string text;
  };
  std::optional<std::string> base_path;
  std::vector<Line> premises;
  Line conclusion;
};

InstanceText parse_instance_text(std::string_view text, const std::string& source = "<instance>");
Instance build_instance(const InstanceText& text, BasePtr base, const std::string& source = "<instance>");

/// Reads an instance file; the base comes from `base` when given, else from
/// the file's `base:` header resolved relative to the instance's directory.
Instance load_instance(const std::filesystem::path& path, BasePtr base = nullptr);

std::string format_instance(const Instance& instance, const std::optional<std::string>& base_path);

Dnf parse_dnf(std::string_view text, const std::string& source = "<dnf>");
std::string format_dnf(const Dnf& dnf);

gf2::System parse_system(std::string_view text, const std::string& source = "<system>");
std::string format_system(const gf2::System& system);

} // namespace postimp::io
