#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "szeta/acceptance.hpp"
#include "szeta/cli.hpp"
#include "szeta/errors.hpp"
#include "szeta/g_function.hpp"
#include "szeta/laurent.hpp"
#include "szeta/moments.hpp"
#include "szeta/smooth_terms.hpp"
#include "szeta/superzeta.hpp"
#include "szeta/zero_data.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace szeta;

struct Globals {
  std::optional<std::string> zeros;
  std::string zeros_format = "plain";
  std::optional<std::string> config_path;
  std::optional<std::string> out_format;
};

struct Context {
  cli::RunConfig config;
  cli::OutFormat format = cli::OutFormat::json;
  std::optional<std::string> table_path;
  ZeroFormat table_format = ZeroFormat::plain_ascending;
  std::optional<ZeroTable> table;

  const ZeroTable& zeros() {
    if (!table) {
      if (!table_path) throw DomainError("no zero table: pass --zeros, set zero_table in the config or SZETA_ZEROS");
      table = load_zero_file(*table_path, table_format);
    }
    return *table;
  }
};

struct Report {
  std::string command;
  json extra = json::object();  // command-specific header entries
  std::vector<json> rows;
};

json header(Context& ctx, const Report& r) {
  json h;
  h["tool"] = "szeta";
  h["version"] = cli::kVersion;
  h["command"] = r.command;
  h["modules"] = {{"zero_data", "1"}, {"smooth_terms", "1"}, {"g_function", "1"}, {"laurent", "1"},
                  {"moments", "1"},   {"specfun", "1"},      {"superzeta", "1"}};
  if (ctx.table) {
    h["table_source"] = ctx.table->source();
    h["height_ceiling"] = ctx.table->height_ceiling();
    h["zero_count"] = ctx.table->size();
  }
  h.update(r.extra);
  return h;
}

std::string cell(const json& v) {
  if (v.is_number_float()) return cli::format_real(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ";") + cell(e);
    return out;
  }
  return v.dump();
}

void drop_negative_zero(json& v) {
  if (v.is_number_float() && v.get<double>() == 0.0) {
    v = 0.0;
  } else if (v.is_structured()) {
    for (auto& e : v) drop_negative_zero(e);
  }
}

void emit(Context& ctx, const Report& r, std::ostream& out) {
  const json h = header(ctx, r);
  if (ctx.format == cli::OutFormat::json) {
    json doc;
    doc["header"] = h;
    if (r.rows.size() == 1) {
      doc["result"] = r.rows.front();
    } else {
      doc["rows"] = r.rows;
    }
    drop_negative_zero(doc);
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : h.items()) {
    if (k == "modules") {
      std::string tags;
      for (const auto& [m, ver] : v.items()) tags += (tags.empty() ? "" : " ") + m + "=" + ver.get<std::string>();
      out << "# modules: " << tags << "\r\n";
    } else {
      out << "# " << k << ": " << cell(v) << "\r\n";
    }
  }
  if (r.rows.empty()) return;
  std::vector<std::string> cols;
  for (const auto& row : r.rows) {
    for (const auto& [k, v] : row.items()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  out << cli::csv_row(cols);
  for (const auto& row : r.rows) {
    std::vector<std::string> cells;
    for (const auto& c : cols) cells.push_back(row.contains(c) ? cell(row[c]) : "");
    out << cli::csv_row(cells);
  }
}

json eval_json(const EvalResult& r) {
  json j;
  j["value_re"] = r.value.real();
  j["value_im"] = r.value.imag();
  j["abs_error"] = r.abs_error;
  j["method"] = to_string(r.method);
  j["warnings"] = r.warnings;
  return j;
}

json moment_json(const MomentReport& m) {
  return {{"T", m.T}, {"x", m.x}, {"value", m.value}, {"error", m.error}, {"method", m.method},
          {"band_ratio", m.band_ratio}};
}

// Error-returning route wrapper for `super --route all`.
template <class F>
json route(const std::string& name, F&& f) {
  json j = {{"route", name}};
  try {
    j.update(eval_json(f()));
  } catch (const Error& e) {
    j["error"] = e.name();
    j["message"] = e.what();
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"szeta: secondary zeta functions over zeta zero ordinates"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--zeros", g.zeros, "zero table (overrides config and SZETA_ZEROS)");
  app.add_option("--zeros-format", g.zeros_format, "plain or labeled")->check(CLI::IsMember({"plain", "labeled"}));
  app.add_option("--config", g.config_path, "key=value config file");
  app.add_option("--format", g.out_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* ingest = app.add_subcommand("ingest", "validate a zero table and summarize it");
  std::optional<std::string> ingest_file;
  ingest->add_option("file", ingest_file, "table to ingest (default: the configured table)");

  auto* eval = app.add_subcommand("eval", "evaluate G(s)");
  std::string eval_s;
  std::optional<double> eval_x;
  bool eval_critical = false;
  eval->add_option("--s", eval_s, "complex argument, e.g. \"0.5+14i\"")->required();
  eval->add_option("--x", eval_x, "cut point for the remainder formula (0 < Re s)");
  eval->add_flag("--critical", eval_critical, "use the critical-line cut point (Re s = 1/2)");

  auto* laurent = app.add_subcommand("laurent", "Laurent coefficients of G at s = 1");
  int laurent_order = 8;
  laurent->add_option("--jmax", laurent_order, "highest coefficient index J")->check(CLI::Range(0, kMaxLaurentOrder));

  auto* moment = app.add_subcommand("moment", "mean values on the critical line");
  double moment_T = 100.0;
  std::string moment_kind = "second";
  int moment_density = 32;
  double moment_x = 0.0;
  std::string moment_variant = "N";
  moment->add_option("--T", moment_T, "height")->required();
  moment->add_option("--kind", moment_kind, "second, restricted or ndiff")
      ->check(CLI::IsMember({"second", "restricted", "ndiff"}));
  moment->add_option("--density", moment_density, "Simpson nodes per unit t");
  moment->add_option("--x", moment_x, "upper limit X for ndiff");
  moment->add_option("--variant", moment_variant, "N or S for ndiff")->check(CLI::IsMember({"N", "S"}));

  auto* dyadic = app.add_subcommand("dyadic", "mean square of a dyadic block over [1, T]");
  double dyadic_x = 0.0, dyadic_T = 0.0, dyadic_scale = 1.0;
  std::string dyadic_method = "quadrature";
  dyadic->add_option("--x", dyadic_x, "block start")->required();
  dyadic->add_option("--T", dyadic_T, "height")->required();
  dyadic->add_option("--method", dyadic_method, "quadrature, pair_count or weighted_pairs")
      ->check(CLI::IsMember({"quadrature", "pair_count", "weighted_pairs"}));
  dyadic->add_option("--scale", dyadic_scale, "window scale a");

  auto* stilde = app.add_subcommand("stilde", "normalized iterated integrals of S");
  int stilde_m = 1;
  double stilde_from = 20.0, stilde_to = 1000.0;
  int stilde_count = 1;
  stilde->add_option("--m", stilde_m, "order 1 or 2")->check(CLI::IsMember({1, 2}));
  stilde->add_option("--from", stilde_from, "first T");
  stilde->add_option("--to", stilde_to, "last T");
  stilde->add_option("--count", stilde_count, "number of grid points")->check(CLI::PositiveNumber);

  auto* super = app.add_subcommand("super", "super zeta function M_alpha(s)");
  double super_alpha = 3.0, super_eps = 0.5;
  std::string super_s, super_route = "all";
  std::int64_t super_primes = 1000000;
  super->add_option("--alpha", super_alpha, "shift alpha > -2")->required();
  super->add_option("--s", super_s, "complex argument")->required();
  super->add_option("--route", super_route, "direct, explicit, contour or all")
      ->check(CLI::IsMember({"direct", "explicit", "contour", "all"}));
  super->add_option("--epsilon", super_eps, "contour radius");
  super->add_option("--prime-limit", super_primes, "prime powers summed by the explicit route");

  auto* zeros = app.add_subcommand("zeros", "locate zero ordinates in (from, to]");
  double zeros_from = 10.0, zeros_to = 100.0, zeros_tol = 1e-10;
  zeros->add_option("--from", zeros_from, "lower end (>= 10)");
  zeros->add_option("--to", zeros_to, "upper end (<= 1000)");
  zeros->add_option("--tol", zeros_tol, "bracket width, also sets printed decimals");

  auto* check = app.add_subcommand("check", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Context ctx;
    if (g.config_path) ctx.config = cli::load_config(*g.config_path);
    ctx.format = g.out_format ? cli::parse_out_format(*g.out_format)
                              : ctx.config.out_format.value_or(cli::OutFormat::json);
    ctx.table_path = cli::resolve_table_path(g.zeros, ctx.config, std::getenv("SZETA_ZEROS"));
    ctx.table_format = g.zeros_format == "labeled" ? ZeroFormat::labeled : ZeroFormat::plain_ascending;
    ContourSpec contour;
    if (ctx.config.quad_min_nodes) contour.order = std::max(contour.order, cli::quadrature_order_at_least(*ctx.config.quad_min_nodes));

    Report r;
    if (*ingest) {
      if (ingest_file) ctx.table_path = ingest_file;
      const auto& t = ctx.zeros();
      r.command = "ingest";
      r.rows.push_back({{"count", t.size()},
                        {"first", t.ordinates().front()},
                        {"last", t.ordinates().back()},
                        {"height_ceiling", t.height_ceiling()},
                        {"precision_digits", t.precision_digits()},
                        {"counting_residual_at_H", counting_residual(t, t.height_ceiling())}});
    } else if (*eval) {
      const Complex s = cli::parse_complex(eval_s);
      const auto& t = ctx.zeros();
      EvalResult res;
      if (eval_critical) {
        if (std::abs(s.real() - 0.5) > 1e-15) throw DomainError("--critical needs Re s = 1/2");
        res = g_critical_line(t, s.imag());
      } else if (eval_x) {
        res = r_remainder(t, s, *eval_x);
        res.value += g_partial(t, s, *eval_x);
      } else {
        res = g_eval(t, s);
      }
      r.command = "eval";
      json row = {{"s_re", s.real()}, {"s_im", s.imag()}};
      row.update(eval_json(res));
      r.rows.push_back(row);
    } else if (*laurent) {
      const auto lc = laurent_expansion(ctx.zeros(), laurent_order);
      r.command = "laurent";
      r.extra = {{"principal_2", lc.principal_2}, {"principal_1", lc.principal_1}, {"C1", lc.C1.value},
                 {"C1_err", lc.C1.error}};
      for (std::size_t j = 0; j < lc.c.size(); ++j) {
        r.rows.push_back({{"j", j}, {"c_j", lc.c[j].value}, {"c_err", lc.c[j].error}, {"b_j", lc.b[j].value},
                          {"b_err", lc.b[j].error}});
      }
    } else if (*moment) {
      const auto& t = ctx.zeros();
      r.command = "moment";
      if (moment_kind == "second") {
        json row = moment_json(second_moment(t, moment_T, moment_density));
        row["diagonal_lower_bound"] = diagonal_lower_bound(t, moment_T);
        r.rows.push_back(row);
      } else if (moment_kind == "restricted") {
        r.rows.push_back(moment_json(restricted_range_moment(t, moment_T)));
      } else {
        const auto variant = moment_variant == "S" ? DiffVariant::S : DiffVariant::N;
        const double X = moment_x > 0.0 ? moment_x : moment_T;
        r.rows.push_back({{"T", moment_T}, {"X", X}, {"variant", moment_variant},
                          {"value", n_diff_functional(t, X, moment_T, variant)}});
      }
    } else if (*dyadic) {
      r.command = "dyadic";
      r.rows.push_back(moment_json(dyadic_D(ctx.zeros(), dyadic_x, dyadic_T, parse_dyadic_method(dyadic_method),
                                            dyadic_scale)));
    } else if (*stilde) {
      const auto& t = ctx.zeros();
      r.command = "stilde";
      for (int k = 0; k < stilde_count; ++k) {
        const double T = stilde_count == 1 ? stilde_from
                                           : stilde_from + (stilde_to - stilde_from) * k / (stilde_count - 1);
        r.rows.push_back({{"m", stilde_m}, {"T", T}, {"value", s_tilde(t, stilde_m, T)}});
      }
    } else if (*super) {
      const Complex s = cli::parse_complex(super_s);
      const SuperZetaParams p{super_alpha, super_eps};
      p.validate();
      r.command = "super";
      auto want = [&](const char* name) { return super_route == "all" || super_route == name; };
      auto run = [&](const char* name, auto&& f) {
        if (super_route == "all") {
          r.rows.push_back(route(name, f));
        } else {
          json j = {{"route", name}};
          j.update(eval_json(f()));
          r.rows.push_back(j);
        }
      };
      if (want("direct")) run("direct", [&] { return m_alpha_direct(ctx.zeros(), s, p); });
      if (want("explicit")) run("explicit", [&] { return zeta_alpha_explicit(s, super_alpha, super_primes); });
      if (want("contour")) run("contour", [&] { return zeta_alpha_contour(s, p, contour); });
      for (auto& row : r.rows) {
        row["alpha"] = super_alpha;
        row["s_re"] = s.real();
        row["s_im"] = s.imag();
      }
    } else if (*zeros) {
      const auto scan = find_zeros(zeros_from, zeros_to, zeros_tol);
      for (const auto& w : scan.warnings) std::cerr << "MissedZeroWarning: " << w << '\n';
      const int decimals = std::clamp(static_cast<int>(std::ceil(-std::log10(zeros_tol))), 0, 15);
      std::ostringstream out;
      for (double z : scan.ordinates) out << std::fixed << std::setprecision(decimals) << z << '\n';
      std::cout << out.str();
      return 0;
    } else if (*check) {
      const auto& t = ctx.zeros();
      auto render = [&] {
        std::string text;
        for (const auto& c : acceptance::run_all(t)) text += acceptance::format_line(c) + '\n';
        return text;
      };
      const std::string first = render();
      const bool same = render() == first;
      std::cout << "# szeta " << cli::kVersion << " acceptance\n"
                << "# table_source: " << t.source() << "\n# height_ceiling: " << cli::format_real(t.height_ceiling())
                << "\n# zero_count: " << t.size() << '\n'
                << first
                << (same ? "PASS" : "FAIL") << " 14 determinism: repeated in-process run "
                << (same ? "byte-identical" : "differs") << '\n';
      return first.find("FAIL") == std::string::npos && same ? 0 : 3;
    }
    emit(ctx, r, std::cout);
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
