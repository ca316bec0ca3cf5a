#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace szeta {

class ArgumentIntegral;

enum class ZeroFormat {
  plain_ascending,  // one ordinate per line
  labeled,          // "index ordinate" per line
};

ZeroFormat parse_zero_format(const std::string& tag);

namespace detail {
// Shared immutable payload of a ZeroTable plus lazily built derived data.
struct TableData {
  std::vector<double> ordinates;
  double height_ceiling = 0.0;
  int precision_digits = 0;
  std::string source;

  mutable std::once_flag argument_once;
  mutable std::shared_ptr<const ArgumentIntegral> argument;
};
}  // namespace detail

// Ascending positive ordinates of zeta zeros, complete up to height_ceiling.
// Equal adjacent entries encode multiplicity. Copies share storage.
class ZeroTable {
 public:
  ZeroTable(std::vector<double> ordinates, double height_ceiling, int precision_digits,
            std::string source);

  std::span<const double> ordinates() const noexcept { return data_->ordinates; }
  std::size_t size() const noexcept { return data_->ordinates.size(); }
  double height_ceiling() const noexcept { return data_->height_ceiling; }
  int precision_digits() const noexcept { return data_->precision_digits; }
  const std::string& source() const noexcept { return data_->source; }

  // N(T): ordinates <= T with multiplicity. IncompleteTableError for T > H.
  std::int64_t count_upto(double T) const;

  // n((lo, hi]) = N(hi) - N(lo).
  std::int64_t count_interval(double lo, double hi) const;

  // Table restricted to ordinates <= new_height (which becomes H).
  ZeroTable truncated(double new_height) const;

  // Calls visit(lo, hi, n) for consecutive pieces of [a, b] on which N is
  // constant and equal to n; pieces are further split to width <= max_width.
  void for_each_piece(double a, double b, double max_width,
                      const std::function<void(double, double, std::int64_t)>& visit) const;

  const detail::TableData& data() const noexcept { return *data_; }

 private:
  std::shared_ptr<detail::TableData> data_;
};

// Reads a zero file. Header comments may declare "# height_ceiling: H",
// "# source: label" and "# precision_digits: d".
ZeroTable parse_zero_file(std::istream& in, ZeroFormat format, const std::string& source = "");

ZeroTable load_zero_file(const std::string& path, ZeroFormat format = ZeroFormat::plain_ascending);

// Writes ordinates in plain_ascending format with the metadata header.
void write_zero_file(std::ostream& out, std::span<const double> ordinates, double height_ceiling,
                     int decimals, const std::string& source);

// Zeros off the critical line (synthetic data only; empty for verified data).
struct OffLineZero {
  double beta = 0.0;
  double gamma = 0.0;
};

class OffLineZeroTable {
 public:
  OffLineZeroTable() = default;
  OffLineZeroTable(std::vector<OffLineZero> zeros, std::string source);

  std::span<const OffLineZero> zeros() const noexcept { return zeros_; }
  const std::string& source() const noexcept { return source_; }

 private:
  std::vector<OffLineZero> zeros_;
  std::string source_;
};

struct OffLineCounts {
  std::int64_t n_sigma = 0;  // N(sigma, T): sigma < beta, 0 < gamma <= T
  double a_t = 0.0;          // A(T) = sum over beta > 1/2, gamma <= T of (beta - 1/2)^2
};

OffLineCounts offline_counters(const OffLineZeroTable& table, double sigma, double T);

}  // namespace szeta
