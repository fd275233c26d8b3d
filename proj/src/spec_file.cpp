#include "tricover/spec_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

namespace tricover {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  std::size_t line;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg, line);
}

}  // namespace

CoverData parse_cover_spec(std::string_view text) {
  static const std::array<std::string_view, 6> keys = {"field", "vars", "a", "b", "c", "d"};
  std::map<std::string, Entry, std::less<>> entries;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected `key = value`");
    auto key = std::string(trim(line.substr(0, eq)));
    auto value = std::string(trim(line.substr(eq + 1)));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) parse_error(line_no, "unknown key \"" + key + "\"");
    if (entries.count(key)) parse_error(line_no, "duplicate key \"" + key + "\"");
    entries.emplace(key, Entry{value, line_no});
  }
  for (auto key : keys) {
    if (!entries.count(key)) parse_error(line_no, "missing key \"" + std::string(key) + "\"");
  }

  const auto& field_entry = entries.at("field");
  Field field = Field::rationals();
  try {
    field = Field::parse(field_entry.value);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) parse_error(field_entry.line, e.what());
    throw Error(e.code(), "line " + std::to_string(field_entry.line) + ": " + e.what(), field_entry.line);
  }

  const auto& vars_entry = entries.at("vars");
  std::vector<std::string> names;
  std::string_view rest = vars_entry.value;
  while (!trim(rest).empty()) {
    auto comma = rest.find(',');
    auto name = std::string(trim(rest.substr(0, comma)));
    if (name.empty()) parse_error(vars_entry.line, "empty variable name");
    names.push_back(std::move(name));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) parse_error(vars_entry.line, "trailing comma in vars");
  }
  VarList vars;
  try {
    vars = VarList(std::move(names));
  } catch (const Error& e) {
    parse_error(vars_entry.line, e.what());
  }

  auto coefficient = [&](const char* key) {
    const auto& entry = entries.at(key);
    try {
      return parse_poly(entry.value, vars, field);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SyntaxError) parse_error(entry.line, e.what());
      throw Error(e.code(), "line " + std::to_string(entry.line) + ": " + e.what(), entry.line);
    }
  };
  auto a = coefficient("a");
  auto b = coefficient("b");
  auto c = coefficient("c");
  auto d = coefficient("d");
  try {
    return CoverData(std::move(a), std::move(b), std::move(c), std::move(d));
  } catch (const Error& e) {
    parse_error(vars_entry.line, e.what());
  }
}

CoverData load_cover(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cover_spec(buf.str());
}

std::string print_cover_spec(const CoverData& cover) {
  std::ostringstream out;
  out << "field = " << cover.field().descriptor() << "\n";
  out << "vars = " << cover.base_vars().joined(", ") << "\n";
  out << "a = " << cover.a() << "\n";
  out << "b = " << cover.b() << "\n";
  out << "c = " << cover.c() << "\n";
  out << "d = " << cover.d() << "\n";
  return out.str();
}

}  // namespace tricover
