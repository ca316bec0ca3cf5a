#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "szeta/quadrature.hpp"

// Command-line plumbing shared by the szeta executable and its tests.
namespace szeta::cli {

inline constexpr const char* kVersion = "1.0.0";

// "2", "2+0i", "0.5 - 14.1i", "-i", "3e-2+1e1i"; ParseError otherwise.
Complex parse_complex(const std::string& text);

enum class OutFormat { json, csv };
OutFormat parse_out_format(const std::string& tag);

struct RunConfig {
  std::optional<std::string> zero_table;
  std::optional<OutFormat> out_format;
  std::optional<int> quad_min_nodes;
};

// key=value lines, '#' comments, keys zero_table, out_format, quad_min_nodes.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

// Flag, then config, then the SZETA_ZEROS value; nullopt when none is set.
std::optional<std::string> resolve_table_path(const std::optional<std::string>& flag, const RunConfig& config,
                                              const char* env_value);

// Smallest supported Gauss-Legendre order (4, 8, 16, 32) not below n.
int quadrature_order_at_least(int n);

// 17 significant digits.
std::string format_real(double x);

// RFC 4180 quoting when the field holds a comma, quote or line break.
std::string csv_field(const std::string& text);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace szeta::cli
