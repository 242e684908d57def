#include "postimp/io.hpp"

#include "postimp/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace postimp::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path.string() + "'");
  out << contents;
}

namespace {

struct Token {
  std::string text;
  std::size_t column; // 1-based
};

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    out.push_back({number++, line});
    if (end == text.size())
      break;
    start = end + 1;
  }
  return out;
}

bool skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#')
      return true;
    if (!std::isspace(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i == line.size())
      break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::optional<std::size_t> to_number(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    return std::nullopt;
  return v;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

} // namespace

// ---------------------------------------------------------------- base

BasePtr parse_base(std::string_view text, const std::string& source) {
  std::vector<BooleanFunction> functions;
  for (const auto& line : split_lines(text)) {
    if (skippable(line.text))
      continue;
    const auto tokens = tokenize(line.text);
    auto fail = [&](const std::string& message, const Token& at) -> void {
      throw ParseError(message, source, line.number, at.column, at.text);
    };
    if (tokens.size() != 3)
      throw ParseError("expected `name arity bits`, found " + std::to_string(tokens.size()) + " field(s)", source,
                       line.number, tokens.front().column);
    if (!is_identifier(tokens[0].text))
      fail("invalid function name", tokens[0]);
    const auto arity = to_number(tokens[1].text);
    if (!arity || *arity > max_arity)
      fail("arity must be an integer in 0.." + std::to_string(max_arity), tokens[1]);
    const std::string& bits = tokens[2].text;
    if (bits.size() != (std::size_t{1} << *arity))
      fail("truth table must have " + std::to_string(std::size_t{1} << *arity) + " bits for arity " +
               std::to_string(*arity) + ", found " + std::to_string(bits.size()),
           tokens[2]);
    for (std::size_t j = 0; j < bits.size(); ++j)
      if (bits[j] != '0' && bits[j] != '1')
        throw ParseError("truth table bit must be 0 or 1", source, line.number, tokens[2].column + j,
                         std::string(1, bits[j]));
    for (const auto& f : functions)
      if (f.name() == tokens[0].text)
        fail("duplicate function name", tokens[0]);
    functions.push_back(BooleanFunction::from_bits(tokens[0].text, static_cast<unsigned>(*arity), bits));
  }
  if (functions.empty())
    throw ParseError("base defines no functions", source, 0, 0);
  return make_base(std::move(functions));
}

std::string format_base(const Base& base) {
  std::string out;
  for (const auto& f : base.functions())
    out += f.name() + " " + std::to_string(f.arity()) + " " + f.bits() + "\n";
  return out;
}

// ---------------------------------------------------------------- instance

InstanceText parse_instance_text(std::string_view text, const std::string& source) {
  InstanceText out;
  bool have_conclusion = false;
  for (const auto& line : split_lines(text)) {
    if (skippable(line.text))
      continue;
    const auto colon = line.text.find(':');
    std::string_view key = line.text.substr(0, colon);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.front())))
      key.remove_prefix(1);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.remove_suffix(1);
    if (colon == std::string_view::npos)
      throw ParseError("expected `base:`, `premise:` or `conclusion:`", source, line.number, 1, std::string(key));
    std::string value(line.text.substr(colon + 1));
    // Column offset of the value within the line, for formula error positions.
    const std::size_t offset = colon + 1;

    if (key == "base") {
      const auto tokens = tokenize(value);
      if (tokens.size() != 1)
        throw ParseError("`base:` takes exactly one path", source, line.number, offset + 1);
      if (out.base_path)
        throw ParseError("duplicate `base:` header", source, line.number, 1, "base");
      out.base_path = tokens.front().text;
    } else if (key == "premise") {
      out.premises.push_back({line.number, offset, std::move(value)});
    } else if (key == "conclusion") {
      if (have_conclusion)
        throw ParseError("more than one `conclusion:` line", source, line.number, 1, "conclusion");
      out.conclusion = {line.number, offset, std::move(value)};
      have_conclusion = true;
    } else {
      throw ParseError("unknown key", source, line.number, 1, std::string(key));
    }
  }
  if (!have_conclusion)
    throw ParseError("instance has no `conclusion:` line", source, 0, 0);
  return out;
}

Instance build_instance(const InstanceText& text, BasePtr base, const std::string& source) {
  if (!base)
    throw Error(source + ": no base given (use `base:` in the file or --base)");
  VariableTable vars;
  auto parse = [&](const InstanceText::Line& line) {
    try {
      return parse_formula(line.text, *base, vars);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), source, line.number, e.column() + line.offset, e.token());
    }
  };
  std::vector<Node> premises;
  for (const auto& p : text.premises)
    premises.push_back(parse(p));
  Node conclusion = parse(text.conclusion);

  std::vector<Formula> formulas;
  for (auto& p : premises)
    formulas.emplace_back(base, std::move(p), vars.names());
  return Instance(base, std::move(formulas), Formula(base, std::move(conclusion), vars.names()));
}

Instance load_instance(const std::filesystem::path& path, BasePtr base) {
  const std::string source = path.string();
  const InstanceText text = parse_instance_text(read_file(path), source);
  if (!base) {
    if (!text.base_path)
      throw Error(source + ": no `base:` header and no --base given");
    std::filesystem::path base_path = *text.base_path;
    if (base_path.is_relative())
      base_path = path.parent_path() / base_path;
    base = parse_base(read_file(base_path), base_path.string());
  }
  return build_instance(text, std::move(base), source);
}

std::string format_instance(const Instance& instance, const std::optional<std::string>& base_path) {
  std::string out;
  if (base_path)
    out += "base: " + *base_path + "\n";
  for (const auto& p : instance.premises())
    out += "premise: " + to_string(p) + "\n";
  out += "conclusion: " + to_string(instance.conclusion()) + "\n";
  return out;
}

// ---------------------------------------------------------------- DNF

Dnf parse_dnf(std::string_view text, const std::string& source) {
  Dnf dnf;
  for (const auto& line : split_lines(text)) {
    if (skippable(line.text))
      continue;
    std::vector<Literal> term;
    for (const auto& tok : tokenize(line.text)) {
      std::string_view s = tok.text;
      const bool negative = !s.empty() && s.front() == '-';
      if (negative)
        s.remove_prefix(1);
      std::optional<std::size_t> index;
      if (s.size() > 1 && s.front() == 'x')
        index = to_number(std::string(s.substr(1)));
      if (!index || *index == 0)
        throw ParseError("expected a literal `x<k>` or `-x<k>` with k >= 1", source, line.number, tok.column, tok.text);
      term.push_back({*index - 1, !negative});
      dnf.num_variables = std::max(dnf.num_variables, *index);
    }
    dnf.terms.push_back(std::move(term));
  }
  if (dnf.terms.empty())
    throw ParseError("DNF has no terms", source, 0, 0);
  return dnf;
}

std::string format_dnf(const Dnf& dnf) {
  std::string out;
  for (const auto& term : dnf.terms) {
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (i > 0)
        out += ' ';
      out += (term[i].positive ? "x" : "-x") + std::to_string(term[i].variable + 1);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------- linear systems

gf2::System parse_system(std::string_view text, const std::string& source) {
  std::vector<Line> lines;
  for (const auto& line : split_lines(text))
    if (!skippable(line.text))
      lines.push_back(line);
  if (lines.empty())
    throw ParseError("empty linear system file; expected `m n`", source, 0, 0);

  const auto header = tokenize(lines[0].text);
  std::optional<std::size_t> m, n;
  if (header.size() == 2) {
    m = to_number(header[0].text);
    n = to_number(header[1].text);
  }
  if (!m || !n)
    throw ParseError("expected header `m n`", source, lines[0].number, 1);
  if (lines.size() - 1 != *m)
    throw ParseError("header announces " + std::to_string(*m) + " rows, found " + std::to_string(lines.size() - 1),
                     source, lines[0].number, 1);

  gf2::System system(*n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto tokens = tokenize(lines[r].text);
    const std::size_t expected = *n == 0 ? 1 : 2;
    if (tokens.size() != expected)
      throw ParseError("expected `<" + std::to_string(*n) + " coefficient bits> <rhs bit>`", source, lines[r].number, 1);
    const Token& rhs = tokens.back();
    if (rhs.text != "0" && rhs.text != "1")
      throw ParseError("rhs must be 0 or 1", source, lines[r].number, rhs.column, rhs.text);
    gf2::Row row(*n, rhs.text == "1");
    if (*n > 0) {
      const Token& bits = tokens.front();
      if (bits.text.size() != *n)
        throw ParseError("expected " + std::to_string(*n) + " coefficient bits", source, lines[r].number, bits.column,
                         bits.text);
      for (std::size_t i = 0; i < *n; ++i) {
        if (bits.text[i] != '0' && bits.text[i] != '1')
          throw ParseError("coefficient must be 0 or 1", source, lines[r].number, bits.column + i,
                           std::string(1, bits.text[i]));
        row.set(i, bits.text[i] == '1');
      }
    }
    system.add(std::move(row));
  }
  return system;
}

std::string format_system(const gf2::System& system) {
  std::string out = std::to_string(system.size()) + " " + std::to_string(system.unknowns()) + "\n";
  for (const auto& row : system.rows()) {
    for (std::size_t i = 0; i < system.unknowns(); ++i)
      out += row.coefficient(i) ? '1' : '0';
    out += ' ';
    out += row.rhs() ? '1' : '0';
    out += '\n';
  }
  return out;
}

} // namespace postimp::io
