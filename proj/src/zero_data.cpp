#include "szeta/zero_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "szeta/errors.hpp"

namespace szeta {
namespace {

constexpr double kMaxOrdinate = 1e13;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& token, std::size_t line) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": not a decimal number: '" + token + "'");
  }
  return value;
}

int decimals_of(const std::string& token) {
  const auto dot = token.find('.');
  if (dot == std::string::npos) return 0;
  const auto exp = token.find_first_of("eE", dot);
  const auto stop = exp == std::string::npos ? token.size() : exp;
  return static_cast<int>(stop - dot - 1);
}

// "# key: value" or "# key = value"
bool header_field(const std::string& comment, const std::string& key, std::string& value) {
  auto body = trim(std::string_view(comment).substr(1));
  if (body.rfind(key, 0) != 0) return false;
  auto rest = trim(std::string_view(body).substr(key.size()));
  if (rest.empty() || (rest[0] != ':' && rest[0] != '=')) return false;
  value = trim(std::string_view(rest).substr(1));
  return true;
}

}  // namespace

ZeroFormat parse_zero_format(const std::string& tag) {
  if (tag == "plain_ascending" || tag == "plain") return ZeroFormat::plain_ascending;
  if (tag == "labeled") return ZeroFormat::labeled;
  throw DomainError("unknown zero file format '" + tag + "'");
}

ZeroTable::ZeroTable(std::vector<double> ordinates, double height_ceiling, int precision_digits,
                     std::string source)
    : data_(std::make_shared<detail::TableData>()) {
  if (ordinates.empty()) throw EmptyTableError("zero table has no ordinates");
  if (!(height_ceiling > 0.0)) throw DomainError("height ceiling must be positive");
  if (!(ordinates.front() > 14.0)) {
    throw DomainError("first ordinate must exceed 14 (no zero lies lower)");
  }
  for (std::size_t i = 1; i < ordinates.size(); ++i) {
    if (ordinates[i] < ordinates[i - 1]) {
      throw MonotonicityError(i + 1, "ordinates must be non-decreasing");
    }
  }
  if (ordinates.back() > height_ceiling) {
    throw DomainError("ordinate above the declared height ceiling");
  }
  data_->ordinates = std::move(ordinates);
  data_->height_ceiling = height_ceiling;
  data_->precision_digits = precision_digits;
  data_->source = std::move(source);
}

std::int64_t ZeroTable::count_upto(double T) const {
  if (T > height_ceiling()) {
    throw IncompleteTableError("N(T) requested at T = " + std::to_string(T) +
                               " above table height " + std::to_string(height_ceiling()));
  }
  if (T < 0.0) throw DomainError("N(T) needs T >= 0");
  const auto& v = data_->ordinates;
  return std::upper_bound(v.begin(), v.end(), T) - v.begin();
}

std::int64_t ZeroTable::count_interval(double lo, double hi) const {
  if (hi < lo) throw DomainError("interval needs lo <= hi");
  return count_upto(hi) - count_upto(lo);
}

ZeroTable ZeroTable::truncated(double new_height) const {
  if (new_height > height_ceiling()) throw IncompleteTableError("cannot extend a table");
  const auto& v = data_->ordinates;
  std::vector<double> kept(v.begin(), std::upper_bound(v.begin(), v.end(), new_height));
  return ZeroTable(std::move(kept), new_height, precision_digits(), source() + " (truncated)");
}

void ZeroTable::for_each_piece(double a, double b, double max_width,
                               const std::function<void(double, double, std::int64_t)>& visit) const {
  if (b > height_ceiling()) throw IncompleteTableError("piecewise walk beyond table height");
  if (!(b > a)) return;
  const auto& v = data_->ordinates;
  auto it = std::upper_bound(v.begin(), v.end(), a);
  std::int64_t n = it - v.begin();
  double lo = a;
  auto emit = [&](double from, double to) {
    if (!(to > from)) return;
    const auto parts = static_cast<long>(std::ceil((to - from) / max_width));
    const double h = (to - from) / static_cast<double>(parts);
    for (long k = 0; k < parts; ++k) {
      const double x0 = from + h * static_cast<double>(k);
      const double x1 = (k + 1 == parts) ? to : x0 + h;
      visit(x0, x1, n);
    }
  };
  while (it != v.end() && *it < b) {
    emit(lo, *it);
    lo = *it;
    // absorb repeated ordinates (multiplicity)
    while (it != v.end() && *it == lo) {
      ++it;
      ++n;
    }
  }
  emit(lo, b);
}

ZeroTable parse_zero_file(std::istream& in, ZeroFormat format, const std::string& source) {
  std::vector<double> ordinates;
  std::string line;
  std::size_t line_no = 0;
  double declared_height = 0.0;
  int declared_digits = -1;
  int max_decimals = 0;
  std::string label = source;
  long long last_index = 0;
  bool have_index = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      std::string value;
      if (header_field(text, "height_ceiling", value)) {
        declared_height = parse_number(value, line_no);
      } else if (header_field(text, "precision_digits", value)) {
        declared_digits = static_cast<int>(parse_number(value, line_no));
      } else if (header_field(text, "source", value) && source.empty()) {
        label = value;
      }
      continue;
    }
    std::string token = text;
    if (format == ZeroFormat::labeled) {
      std::istringstream fields(text);
      std::string index_token;
      if (!(fields >> index_token >> token)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'index ordinate'");
      }
      const double index = parse_number(index_token, line_no);
      if (index != std::floor(index)) {
        throw ParseError("line " + std::to_string(line_no) + ": index is not an integer");
      }
      const auto idx = static_cast<long long>(index);
      if (have_index && idx <= last_index) {
        throw MonotonicityError(line_no, "indices must increase");
      }
      last_index = idx;
      have_index = true;
    }
    const double value = parse_number(token, line_no);
    if (!(value > 0.0 && value < kMaxOrdinate)) {
      throw ParseError("line " + std::to_string(line_no) + ": ordinate outside (0, 1e13)");
    }
    if (!ordinates.empty() && value < ordinates.back()) {
      throw MonotonicityError(line_no, "ordinate " + token + " is below its predecessor");
    }
    max_decimals = std::max(max_decimals, decimals_of(token));
    ordinates.push_back(value);
  }
  if (ordinates.empty()) throw EmptyTableError("zero file contains no ordinates");
  const double height = declared_height > 0.0 ? declared_height : ordinates.back();
  const int digits = declared_digits >= 0 ? declared_digits : max_decimals;
  return ZeroTable(std::move(ordinates), height, digits, label.empty() ? "stream" : label);
}

ZeroTable load_zero_file(const std::string& path, ZeroFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero file '" + path + "'");
  std::string label;
  const auto slash = path.find_last_of('/');
  label = slash == std::string::npos ? path : path.substr(slash + 1);
  auto table = parse_zero_file(in, format, "");
  if (table.source() == "stream") {
    return ZeroTable(std::vector<double>(table.ordinates().begin(), table.ordinates().end()),
                     table.height_ceiling(), table.precision_digits(), label);
  }
  return table;
}

void write_zero_file(std::ostream& out, std::span<const double> ordinates, double height_ceiling,
                     int decimals, const std::string& source) {
  out << "# source: " << source << '\n';
  out << "# height_ceiling: " << std::setprecision(17) << height_ceiling << '\n';
  out << "# precision_digits: " << decimals << '\n';
  out << std::fixed << std::setprecision(decimals);
  for (const double g : ordinates) out << g << '\n';
  out << std::defaultfloat;
}

OffLineZeroTable::OffLineZeroTable(std::vector<OffLineZero> zeros, std::string source)
    : zeros_(std::move(zeros)), source_(std::move(source)) {
  for (const auto& z : zeros_) {
    if (!(z.beta > 0.5 && z.beta < 1.0) || !(z.gamma > 0.0)) {
      throw DomainError("off-line zeros need 1/2 < beta < 1 and gamma > 0");
    }
  }
}

OffLineCounts offline_counters(const OffLineZeroTable& table, double sigma, double T) {
  if (!(sigma > 0.5 && sigma < 1.0)) throw DomainError("sigma must lie in (1/2, 1)");
  if (!(T > 0.0)) throw DomainError("T must be positive");
  OffLineCounts out;
  for (const auto& z : table.zeros()) {
    if (z.gamma > T) continue;
    if (z.beta > sigma) ++out.n_sigma;
    out.a_t += (z.beta - 0.5) * (z.beta - 0.5);
  }
  return out;
}

}  // namespace szeta
