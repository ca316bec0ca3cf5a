#include "szeta/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "szeta/errors.hpp"

namespace szeta::cli {
namespace {

double parse_real(std::string_view text, const std::string& whole) {
  if (text == "" || text == "+") return 1.0;
  if (text == "-") return -1.0;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    throw ParseError("cannot read complex number '" + whole + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' ' && c != '\t'; });
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) return {0.0, parse_real(s, text)};
  const std::string_view view(s);
  if (view.substr(0, cut).empty()) throw ParseError("cannot read complex number '" + text + "'");
  return {parse_real(view.substr(0, cut), text), parse_real(view.substr(cut), text)};
}

OutFormat parse_out_format(const std::string& tag) {
  if (tag == "json") return OutFormat::json;
  if (tag == "csv") return OutFormat::csv;
  throw ParseError("output format must be json or csv, got '" + tag + "'");
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "zero_table") {
      cfg.zero_table = value;
    } else if (key == "out_format") {
      cfg.out_format = parse_out_format(value);
    } else if (key == "quad_min_nodes") {
      int n = 0;
      const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || end != value.data() + value.size() || n < 1) {
        throw ParseError("config line " + std::to_string(lineno) + ": quad_min_nodes must be a positive integer");
      }
      cfg.quad_min_nodes = n;
    } else {
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  return parse_config(in);
}

std::optional<std::string> resolve_table_path(const std::optional<std::string>& flag, const RunConfig& config,
                                              const char* env_value) {
  if (flag) return flag;
  if (config.zero_table) return config.zero_table;
  if (env_value != nullptr && *env_value != '\0') return std::string(env_value);
  return std::nullopt;
}

int quadrature_order_at_least(int n) {
  for (int order : {4, 8, 16, 32}) {
    if (order >= n) return order;
  }
  throw DomainError("at most 32 quadrature nodes per panel are supported");
}

std::string format_real(double x) { return fmt::format("{:.17g}", x == 0.0 ? 0.0 : x); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out += ',';
    out += csv_field(fields[k]);
  }
  return out + "\r\n";
}

}  // namespace szeta::cli
