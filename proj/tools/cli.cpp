#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyadisc/besov.hpp"
#include "dyadisc/classical.hpp"
#include "dyadisc/haar.hpp"
#include "dyadisc/qmc.hpp"
#include "dyadisc/verification.hpp"

namespace dyadisc::cli {

namespace {

// ---------------------------------------------------------------------------
// tabular output

using Cell = std::variant<std::int64_t, double, std::string>;

std::string format_double(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  if (std::isnan(v)) {
    return "nan";
  }
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<Cell> row) {
    if (row.size() != header_.size()) {
      throw std::logic_error("Table: row width mismatch");
    }
    rows_.push_back(std::move(row));
  }

  void write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::Csv) {
      write_csv(out);
    } else {
      write_json(out);
    }
  }

private:
  static std::string text(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
      return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
      return format_double(*d);
    }
    return std::get<std::string>(cell);
  }

  static std::string quoted(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
      return field;
    }
    std::string out = "\"";
    for (const char c : field) {
      out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
  }

  void write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
      out << (i ? "," : "") << header_[i];
    }
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << quoted(text(row[i]));
      }
      out << '\n';
    }
  }

  void write_json(std::ostream& out) const {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json object;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>) {
                if (std::isfinite(v)) {
                  object[header_[i]] = v;
                } else {
                  object[header_[i]] = format_double(v);
                }
              } else {
                object[header_[i]] = v;
              }
            },
            row[i]);
      }
      array.push_back(std::move(object));
    }
    out << array.dump(1) << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

// ---------------------------------------------------------------------------

std::string p_label(double v) { return format_double(v); }

int n_max_of(const RunConfig& config) { return config.n_max.value_or(config.n); }

void require_n(int n) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument("n must lie in [1, 24], got " + std::to_string(n));
  }
}

SignPattern sigma_for(const RunConfig& config, int n) { return make_sign_pattern(config.sigma, n, config.seed); }

PointMultiset family_for(const RunConfig& config, int n) {
  require_n(n);
  return make_family(config.family, n, sigma_for(config, n));
}

BesovParams checked_params(double p, double q, double r) {
  const BesovParams params{p, q, r};
  const auto report = validate(params);
  if (!report.admissible) {
    std::ostringstream os;
    os << "inadmissible parameters (p=" << p_label(p) << ", q=" << p_label(q) << ", r=" << p_label(r)
       << "): " << report.violated;
    throw std::invalid_argument(os.str());
  }
  return params;
}

Cell mantissa_cell(const DyadicRational& v) { return v.mantissa().str(); }

int run_gen(const RunConfig& config, std::ostream& out) {
  const auto points = family_for(config, config.n);
  const int res = points.resolution();
  const std::string den = (BigInt(1) << static_cast<unsigned>(res)).str();
  Table table({"num_x", "num_y", "den"});
  for (const auto& z : points) {
    table.add({z.x.numerator_at(res).str(), z.y.numerator_at(res).str(), den});
  }
  table.write(out, config.format);
  return 0;
}

int run_coeffs(const RunConfig& config, std::ostream& out) {
  const auto points = family_for(config, config.n);
  const int j_max = config.j_max.value_or(config.n + 1);
  if (config.j_min < -1 || j_max < config.j_min) {
    throw std::invalid_argument("coeffs: need -1 <= jmin <= jmax");
  }
  Table table({"j1", "j2", "m1", "m2", "mantissa", "exponent", "value"});
  for (int j1 = config.j_min; j1 <= j_max; ++j1) {
    for (int j2 = config.j_min; j2 <= j_max; ++j2) {
      const auto level = mu_all_at_level(points, j1, j2);
      auto emit = [&](std::int64_t m1, std::int64_t m2, const DyadicRational& v) {
        table.add({std::int64_t{j1}, std::int64_t{j2}, m1, m2, mantissa_cell(v), v.exponent(), v.to_double()});
      };
      if (config.dense) {
        if (level.log2_box_count() > 24) {
          throw std::invalid_argument("coeffs --dense: level (" + std::to_string(j1) + "," + std::to_string(j2) +
                                      ") has too many boxes to list");
        }
        const std::uint64_t c1 = std::uint64_t{1} << std::max(j1, 0);
        const std::uint64_t c2 = std::uint64_t{1} << std::max(j2, 0);
        for (std::uint64_t m1 = 0; m1 < c1; ++m1) {
          for (std::uint64_t m2 = 0; m2 < c2; ++m2) {
            emit(static_cast<std::int64_t>(m1), static_cast<std::int64_t>(m2), level.at(m1, m2));
          }
        }
        continue;
      }
      for (const auto& [m, v] : level.occupied) {
        emit(static_cast<std::int64_t>(m.first), static_cast<std::int64_t>(m.second), v);
      }
      const bool has_empty = level.log2_box_count() >= 63 ||
                             (std::uint64_t{1} << level.log2_box_count()) > level.occupied.size();
      if (has_empty) {
        // m = (-1,-1) stands for every box holding no point
        emit(-1, -1, level.empty_value);
      }
    }
  }
  table.write(out, config.format);
  return 0;
}

int run_norm(const RunConfig& config, std::ostream& out) {
  const auto points = family_for(config, config.n);
  const auto params = checked_params(config.p.front(), config.q.front(), config.r.front());
  NormBreakdown result;
  std::string mode;
  if (config.mode == NormMode::Exact) {
    result = besov_norm_exact(points, params);
    mode = "exact";
  } else {
    result = besov_norm_truncated(points, params, config.j_max.value_or(config.n + 40));
    mode = "truncated";
  }
  Table table({"family", "n", "N", "p", "q", "r", "mode", "j_max", "total", "core", "tail"});
  table.add({std::string(to_string(config.family)), std::int64_t{config.n}, static_cast<std::int64_t>(points.size()),
             params.p, params.q, params.r, mode, std::int64_t{result.j_max}, result.total, result.core_part,
             result.tail_part});
  table.write(out, config.format);
  return 0;
}

int run_classic(const RunConfig& config, std::ostream& out) {
  const auto points = family_for(config, config.n);
  Table table({"family", "n", "N", "p", "method", "exact", "mantissa", "exponent", "value", "norm"});
  const std::string family(to_string(config.family));
  const auto n_points = static_cast<std::int64_t>(points.size());
  const std::string& p_text = config.classic_p;
  if (p_text == "inf") {
    const auto star = star_discrepancy(points);
    const double v = star.to_double();
    table.add({family, std::int64_t{config.n}, n_points, p_text, std::string("star"), star.to_fraction_string(),
               mantissa_cell(star), star.exponent(), v, v});
  } else {
    double p = 0.0;
    try {
      p = std::stod(p_text);
    } catch (const std::exception&) {
      throw std::invalid_argument("classic: --p must be a number or 'inf'");
    }
    if (p >= 2 && p == std::floor(p) && static_cast<long long>(p) % 2 == 0 && p <= 64) {
      const Rational power = lp_exact_even(points, static_cast<int>(p));
      const double v = power.convert_to<double>();
      table.add({family, std::int64_t{config.n}, n_points, p_text, std::string("exact"), to_string(power),
                 std::string(), std::string(), v, std::pow(v, 1.0 / p)});
    } else {
      const auto estimate = lp_numeric(points, p);
      table.add({family, std::int64_t{config.n}, n_points, p_text,
                 "numeric-midpoint-" + std::to_string(estimate.subdivisions), std::string(), std::string(),
                 std::string(), estimate.integral_of_power, estimate.norm});
    }
  }
  table.write(out, config.format);
  return 0;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
  std::vector<BesovParams> grid;
  for (double p : config.p) {
    for (double q : config.q) {
      for (double r : config.r) {
        if (validate({p, q, r}).admissible) {
          grid.push_back({p, q, r});
        }
      }
    }
  }
  if (grid.empty()) {
    throw std::invalid_argument("sweep: no admissible (p, q, r) in the requested grid");
  }
  Table table({"family", "n", "N", "p", "q", "r", "norm", "ratio", "besov_rate", "lp_floor"});
  for (int n = config.n; n <= n_max_of(config); ++n) {
    const auto points = family_for(config, n);
    const CoefficientTable coefficients(points, points.resolution() - 1);
    const double big_n = static_cast<double>(points.size());
    for (const auto& params : grid) {
      const auto norm = besov_norm_exact(coefficients, params);
      const auto ratio = scaling_ratio({{big_n, norm.total}}, params).front();
      table.add({std::string(to_string(config.family)), std::int64_t{n}, static_cast<std::int64_t>(points.size()),
                 params.p, params.q, params.r, norm.total, ratio.ratio, besov_reference_rate(big_n, params),
                 std::sqrt(std::log2(big_n)) / big_n});
    }
  }
  table.write(out, config.format);
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  Table table({"suite", "n", "sigma", "checked", "failed", "detail"});
  bool all_passed = true;
  const std::vector<SignPreset> presets =
      config.all_presets
          ? std::vector<SignPreset>{SignPreset::Identity, SignPreset::AllFlip, SignPreset::Alternating,
                                    SignPreset::Random}
          : std::vector<SignPreset>{config.sigma};
  for (const SignPreset preset : presets) {
  for (int n = 1; n <= n_max_of(config); ++n) {
    require_n(n);
    const auto sigma = make_sign_pattern(preset, n, config.seed);
    const std::vector<std::pair<std::string, CheckReport>> reports = {
        {"symmetrized", verify_symmetrized(n, sigma, n + 2)},
        {"davenport", verify_davenport(n, sigma)},
        {"counting-sums", verify_counting_sums(n, sigma)},
    };
    for (const auto& [suite, report] : reports) {
      all_passed = all_passed && report.passed();
      std::string detail = report.failures.empty() ? std::string() : report.failures.front();
      for (const auto& [key, value] : report.notes) {
        detail += (detail.empty() ? "" : "; ") + key + " " + value;
      }
      table.add({suite, std::int64_t{n}, sigma.to_string(), static_cast<std::int64_t>(report.checked),
                 static_cast<std::int64_t>(report.failed), detail});
    }
  }
  }
  table.write(out, config.format);
  return all_passed ? 0 : 1;
}

int run_qmc(const RunConfig& config, std::ostream& out) {
  const Integrand f = parse_integrand(config.integrand);
  std::vector<int> n_values;
  for (int n = config.n; n <= n_max_of(config); ++n) {
    require_n(n);
    n_values.push_back(n);
  }
  const auto rows = error_table(config.family, config.sigma, config.seed, f, n_values);
  Table table({"family", "sigma", "integrand", "n", "N", "error", "exact_error", "slope_so_far"});
  std::vector<ErrorRow> so_far;
  for (const auto& row : rows) {
    so_far.push_back(row);
    std::string slope;
    try {
      const auto fit = fit_rate(so_far);
      slope = fit.exact ? "exact" : format_double(fit.slope);
    } catch (const std::invalid_argument&) {
      // fewer than three usable rows yet
    }
    table.add({std::string(to_string(config.family)), std::string(to_string(config.sigma)), f.name,
               std::int64_t{row.n}, static_cast<std::int64_t>(row.n_points), row.error,
               row.exact_error ? to_string(*row.exact_error) : std::string(), slope});
  }
  table.write(out, config.format);
  return 0;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf" || item == "infinity") {
      out.push_back(kInfinity);
      continue;
    }
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("empty parameter list");
  }
  return out;
}

} // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help_out) {
  CLI::App app{"Exact Haar-coefficient discrepancy toolkit for symmetrized Hammersley-type point sets"};
  app.require_subcommand(1);

  RunConfig config;
  std::string family = "symmetrized";
  std::string sigma = "identity";
  std::string p = "2";
  std::string q = "2";
  std::string r = "0";
  std::string mode = "exact";
  std::string format = "csv";
  int n_max = -1;
  int j_max = -1000;

  struct Entry {
    Subcommand sub;
    const char* name;
    const char* help;
  };
  const std::vector<Entry> entries = {
      {Subcommand::Gen, "gen", "emit the point set as exact grid numerators"},
      {Subcommand::Coeffs, "coeffs", "emit exact Haar coefficients of the local discrepancy"},
      {Subcommand::Norm, "norm", "Besov norm of the local discrepancy"},
      {Subcommand::Classic, "classic", "exact L_p (even p), numeric L_p, or star discrepancy (p=inf)"},
      {Subcommand::Sweep, "sweep", "norm / rate ratio table over n and a (p,q,r) grid"},
      {Subcommand::Verify, "verify", "check the closed-form coefficient and counting-sum identities"},
      {Subcommand::Qmc, "qmc", "QMC integration error table"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    sub->add_option("--family", family, "hammersley | davenport | symmetrized")
        ->check(CLI::IsMember({"hammersley", "davenport", "symmetrized"}));
    sub->add_option("--n", config.n, "number of digits (R_n has 2^n points)");
    sub->add_option("--n-max", n_max, "upper end of the n range (sweep, verify, qmc)");
    sub->add_option("--sigma", sigma, "identity | all-flip | alternating | random (verify also: all)")
        ->check(CLI::IsMember({"identity", "all-flip", "alternating", "random", "all"}));
    sub->add_option("--seed", config.seed, "seed for --sigma random");
    sub->add_option("--p", p, "integrability (comma list for sweep; 'inf' allowed)");
    sub->add_option("--q", q, "fine index (comma list for sweep; 'inf' allowed)");
    sub->add_option("--r", r, "smoothness (comma list for sweep)");
    sub->add_option("--jmax", j_max, "largest level index");
    sub->add_option("--jmin", config.j_min, "smallest level index (coeffs)");
    sub->add_flag("--dense", config.dense, "coeffs: list every box instead of the sparse form");
    sub->add_option("--mode", mode, "exact | truncated")->check(CLI::IsMember({"exact", "truncated"}));
    sub->add_option("--integrand", config.integrand, "one-minus:a,b | monomial:a,b | exp");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", config.out_path, "output file (default stdout)");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (subs[i]->parsed()) {
      config.subcommand = entries[i].sub;
    }
  }
  config.family = parse_family(family);
  if (sigma == "all") {
    if (config.subcommand != Subcommand::Verify) {
      throw std::invalid_argument("--sigma all is only accepted by verify");
    }
    config.all_presets = true;
  } else {
    config.sigma = parse_sign_preset(sigma);
  }
  if (n_max >= 0) {
    config.n_max = n_max;
  }
  if (j_max != -1000) {
    config.j_max = j_max;
  }
  config.mode = mode == "truncated" ? NormMode::Truncated : NormMode::Exact;
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  config.classic_p = p;
  if (config.subcommand != Subcommand::Classic) {
    config.p = parse_real_list(p);
  }
  config.q = parse_real_list(q);
  config.r = parse_real_list(r);
  return config;
}

int run(const RunConfig& config, std::ostream& out) {
  switch (config.subcommand) {
  case Subcommand::Gen:
    return run_gen(config, out);
  case Subcommand::Coeffs:
    return run_coeffs(config, out);
  case Subcommand::Norm:
    return run_norm(config, out);
  case Subcommand::Classic:
    return run_classic(config, out);
  case Subcommand::Sweep:
    return run_sweep(config, out);
  case Subcommand::Verify:
    return run_verify(config, out);
  case Subcommand::Qmc:
    return run_qmc(config, out);
  }
  return 2;
}

} // namespace dyadisc::cli
