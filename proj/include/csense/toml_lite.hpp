#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "csense/errors.hpp"

namespace csense::toml {

// The subset of TOML the experiment specs need: [section] tables holding
// key = scalar | array-of-scalars, with # comments. Tables and keys are
// written in sorted order, so serialize(parse(serialize(d))) == serialize(d).

struct Value;
using Array = std::vector<Value>;

struct Value {
  std::variant<std::int64_t, double, bool, std::string, Array> v;

  std::int64_t as_int() const { return std::get<std::int64_t>(v); }
  bool as_bool() const { return std::get<bool>(v); }
  const std::string& as_string() const { return std::get<std::string>(v); }
  const Array& as_array() const { return std::get<Array>(v); }
  double as_double() const {
    if (std::holds_alternative<std::int64_t>(v)) {
      return static_cast<double>(std::get<std::int64_t>(v));
    }
    return std::get<double>(v);
  }
};

using Table = std::map<std::string, Value>;
using Document = std::map<std::string, Table>;

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Value parse_scalar(const std::string& tok) {
  const std::string t = trim(tok);
  if (t.empty()) throw usage_error("toml: empty value");
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"') throw usage_error("toml: unterminated string");
    return Value{t.substr(1, t.size() - 2)};
  }
  if (t == "true") return Value{true};
  if (t == "false") return Value{false};
  if (t.find_first_of(".eE") != std::string::npos &&
      t.find_first_not_of("+-0123456789.eE") == std::string::npos) {
    return Value{std::stod(t)};
  }
  try {
    std::size_t pos = 0;
    const std::int64_t i = std::stoll(t, &pos);
    if (pos == t.size()) return Value{i};
  } catch (const std::exception&) {
  }
  throw usage_error("toml: cannot parse value '" + t + "'");
}

inline Value parse_value(const std::string& raw) {
  const std::string t = trim(raw);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw usage_error("toml: unterminated array");
    Array arr;
    std::string inner = t.substr(1, t.size() - 2);
    std::string tok;
    bool in_string = false;
    for (char c : inner) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        if (!trim(tok).empty()) arr.push_back(parse_scalar(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
    if (!trim(tok).empty()) arr.push_back(parse_scalar(tok));
    return Value{std::move(arr)};
  }
  return parse_scalar(t);
}

inline void write_value(std::ostream& os, const Value& val) {
  if (std::holds_alternative<std::int64_t>(val.v)) {
    os << std::get<std::int64_t>(val.v);
  } else if (std::holds_alternative<double>(val.v)) {
    std::ostringstream tmp;
    tmp.precision(17);
    tmp << std::get<double>(val.v);
    std::string s = tmp.str();
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    os << s;
  } else if (std::holds_alternative<bool>(val.v)) {
    os << (std::get<bool>(val.v) ? "true" : "false");
  } else if (std::holds_alternative<std::string>(val.v)) {
    os << '"' << std::get<std::string>(val.v) << '"';
  } else {
    os << '[';
    const Array& arr = std::get<Array>(val.v);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (i) os << ", ";
      write_value(os, arr[i]);
    }
    os << ']';
  }
}

}  // namespace detail

inline Document parse(const std::string& text) {
  Document doc;
  std::string section;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    // strip comments outside strings
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '#' && !in_string) {
        line = line.substr(0, i);
        break;
      }
    }
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw usage_error("toml: malformed section header");
      section = detail::trim(line.substr(1, line.size() - 2));
      doc[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw usage_error("toml: expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    doc[section][key] = detail::parse_value(line.substr(eq + 1));
  }
  return doc;
}

inline std::string serialize(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [section, table] : doc) {
    if (!first) os << "\n";
    first = false;
    if (!section.empty()) os << '[' << section << "]\n";
    for (const auto& [key, val] : table) {
      os << key << " = ";
      detail::write_value(os, val);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace csense::toml
