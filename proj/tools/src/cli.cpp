// Copyright 2026 The contactscatter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contact_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "contact/errors.hpp"
#include "contact/limits.hpp"
#include "contact/model.hpp"
#include "contact/observables.hpp"
#include "contact/phase_shifts.hpp"
#include "contact/serialization.hpp"

namespace contact::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct SpecOptions {
  std::string family;
  double omega = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double a = 1.0;
  double a0 = 0.0;
  std::string spec_file;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec("'" + path + "' is not valid JSON: " + e.what());
  }
}

PotentialSpec make_spec(const SpecOptions& o) {
  PotentialSpec spec;
  if (!o.spec_file.empty()) {
    spec = read_json_file(o.spec_file).get<PotentialSpec>();
  } else {
    if (o.family.empty()) throw InvalidSpec("either --family or --spec is required");
    spec.family = parse_family(o.family);
    spec.omega = o.omega;
    spec.alpha = o.alpha;
    spec.beta = o.beta;
    spec.a = o.a;
    spec.a0 = o.a0;
  }
  spec.validate();
  return spec;
}

void add_spec_options(CLI::App* cmd, SpecOptions& o) {
  auto* family = cmd->add_option("--family", o.family, "shell3d, well3d, ring2d, well2d, doubledelta1d, well1d");
  cmd->add_option("--omega", o.omega, "Coupling Omega");
  cmd->add_option("--alpha", o.alpha, "Exponent alpha")->capture_default_str();
  cmd->add_option("--beta", o.beta, "Log exponent beta (2D)")->capture_default_str();
  cmd->add_option("--a", o.a, "Range a")->capture_default_str();
  cmd->add_option("--a0", o.a0, "Log scale a0 (2D)")->capture_default_str();
  cmd->add_option("--spec", o.spec_file, "PotentialSpec JSON file")->excludes(family);
}

void add_format(CLI::App* cmd, std::string& format, const char* fallback) {
  cmd->add_option("--format", format, std::string("csv or json (default ") + fallback + ")")
      ->check(CLI::IsMember({"csv", "json"}));
}

std::string fd(double x) { return format_double(x); }

// --- phase-shifts ------------------------------------------------------------

void emit_table(const PhaseShiftTable& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << dump(Json(t)) << '\n';
    return;
  }
  out << "index,tan_delta,delta_mod_pi\n";
  for (const auto& e : t.entries) out << fmt::format("{},{},{}\n", e.index, fd(e.tan_delta), fd(e.delta));
}

// --- cross-section -------------------------------------------------------------

void emit_cross_section(const PotentialSpec& spec, const Kinematics& kin, const PhaseShiftTable& t,
                        int angles, std::optional<Verdict> verdict, const std::string& format,
                        std::ostream& out) {
  const bool three_d = dimension(spec.family) == 3;
  const double sigma = three_d ? sigma_total_3d(t) : sigma_total_2d(t);
  const Complex f0 = three_d ? amplitude_3d(t, 0.0) : amplitude_2d(t, 0.0);
  const double optical =
      three_d ? 4.0 * kPi / kin.k * f0.imag() : std::sqrt(8.0 * kPi / kin.k) * f0.imag();
  Json rows = Json::array();
  std::string csv = "theta,re_f,im_f,dsigma\n";
  for (int i = 0; i < angles; ++i) {
    double theta = 0.0;
    if (three_d && angles > 1) theta = kPi * i / (angles - 1);
    if (!three_d) theta = 2.0 * kPi * i / angles;
    const Complex f = three_d ? amplitude_3d(t, theta) : amplitude_2d(t, theta);
    const double ds = std::norm(f);
    rows.push_back({{"theta", number_to_json(theta)},
                    {"re_f", number_to_json(f.real())},
                    {"im_f", number_to_json(f.imag())},
                    {"dsigma", number_to_json(ds)}});
    csv += fmt::format("{},{},{},{}\n", fd(theta), fd(f.real()), fd(f.imag()), fd(ds));
  }
  if (format == "json") {
    Json j{{"family", std::string(to_string(spec.family))},
           {"k", number_to_json(kin.k)},
           {"limit", verdict.has_value()},
           {"verdict", verdict ? Json(std::string(to_string(*verdict))) : Json(nullptr)},
           {"sigma_total", number_to_json(sigma)},
           {"sigma_optical", number_to_json(optical)},
           {"angles", rows}};
    out << dump(j) << '\n';
    return;
  }
  out << fmt::format("# sigma_total={} sigma_optical={}{}\n", fd(sigma), fd(optical),
                     verdict ? " verdict=" + std::string(to_string(*verdict)) : std::string());
  out << csv;
}

// --- scattering-1d --------------------------------------------------------------

void emit_1d(const PotentialSpec& spec, const Kinematics& kin, const PhaseShiftTable& t,
             std::optional<Verdict> verdict, const std::string& format, std::ostream& out) {
  const OneDScattering s = one_d_scattering(t);
  const double te = t.entries[0].tan_delta;
  const double to = t.entries[1].tan_delta;
  if (format == "json") {
    Json j{{"family", std::string(to_string(spec.family))},
           {"k", number_to_json(kin.k)},
           {"limit", verdict.has_value()},
           {"verdict", verdict ? Json(std::string(to_string(*verdict))) : Json(nullptr)},
           {"tan_delta_even", number_to_json(te)},
           {"tan_delta_odd", number_to_json(to)},
           {"re_r", number_to_json(s.reflection.real())},
           {"im_r", number_to_json(s.reflection.imag())},
           {"re_t", number_to_json(s.transmission.real())},
           {"im_t", number_to_json(s.transmission.imag())},
           {"abs_r2", number_to_json(std::norm(s.reflection))},
           {"abs_t2", number_to_json(std::norm(s.transmission))}};
    out << dump(j) << '\n';
    return;
  }
  out << "tan_delta_even,tan_delta_odd,re_r,im_r,re_t,im_t,abs_r2,abs_t2\n";
  out << fmt::format("{},{},{},{},{},{},{},{}\n", fd(te), fd(to), fd(s.reflection.real()),
                     fd(s.reflection.imag()), fd(s.transmission.real()), fd(s.transmission.imag()),
                     fd(std::norm(s.reflection)), fd(std::norm(s.transmission)));
}

// --- limit-scan -----------------------------------------------------------------

std::vector<double> parse_k_range(const std::string& text) {
  // min:max:n, geometric.
  double lo = 0, hi = 0;
  int n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw InvalidSpec("--k-range must look like min:max:n");
  }
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi) || n < 1 || n > 10000) {
    throw InvalidSpec("--k-range needs 0 < min <= max (finite) and 1 <= n <= 10000");
  }
  if (n == 1 && hi != lo) throw InvalidSpec("--k-range with n = 1 needs min = max");
  std::vector<double> ks;
  for (int i = 0; i < n; ++i) {
    ks.push_back(n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  }
  return ks;
}

struct ScanResult {
  double k = 0.0;
  std::optional<LimitClassification> ok;
  std::optional<LimitClassification> partial;
  std::string message;
};

Json scan_json(const ScanResult& r) {
  Json j = r.ok ? Json(*r.ok) : Json(*r.partial);
  j["k"] = number_to_json(r.k);
  if (!r.ok) {
    j["verdict"] = "inconclusive";
    j["message"] = r.message;
  }
  return j;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

auto canonical_key(const PotentialSpec& s) {
  return std::make_tuple(static_cast<int>(s.family), s.alpha, s.beta, s.omega, s.a, s.a0);
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << dump(Json{{"error", kind}, {"message", message}}) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering off contact-potential families: phase shifts, observables, limits"};
  app.name("contact-scatter");
  app.require_subcommand(1);
  app.set_version_flag("--version", "contact-scatter 0.1.0");

  SpecOptions so;
  std::string format;
  double k = 1.0;
  std::optional<int> l_max;
  bool limit = false;
  double xi_end = kDefaultLimitXi;
  int angles = 1;
  std::string k_range;
  std::optional<double> seq_start, seq_end;
  double seq_ratio = 10.0;
  unsigned threads = 1;
  std::string res_family;
  int n_max = 5;
  std::string grid_file;

  auto* ps = app.add_subcommand("phase-shifts", "Phase-shift table at finite a");
  add_spec_options(ps, so);
  add_format(ps, format, "csv");
  ps->add_option("--k", k, "Wavenumber")->capture_default_str();
  ps->add_option("--lmax", l_max, "Highest partial wave");

  auto* cs = app.add_subcommand("cross-section", "Amplitude and cross sections (2D, 3D)");
  add_spec_options(cs, so);
  add_format(cs, format, "csv");
  cs->add_option("--k", k, "Wavenumber")->capture_default_str();
  cs->add_flag("--limit", limit, "Extrapolate a -> 0 instead of evaluating at a");
  cs->add_option("--xi-end", xi_end, "Smallest xi of the extrapolation stencil")->capture_default_str();
  cs->add_option("--angles", angles, "Number of angles sampled")->capture_default_str()->check(CLI::Range(1, 100000));

  auto* s1 = app.add_subcommand("scattering-1d", "Reflection and transmission amplitudes (1D)");
  add_spec_options(s1, so);
  add_format(s1, format, "csv");
  s1->add_option("--k", k, "Wavenumber")->capture_default_str();
  s1->add_flag("--limit", limit, "Extrapolate a -> 0 instead of evaluating at a");
  s1->add_option("--xi-end", xi_end, "Smallest xi of the extrapolation stencil")->capture_default_str();

  auto* ls = app.add_subcommand("limit-scan", "Classify the a -> 0 limit from a xi sequence");
  add_spec_options(ls, so);
  add_format(ls, format, "json");
  auto* k_opt = ls->add_option("--k", k, "Wavenumber")->capture_default_str();
  ls->add_option("--k-range", k_range, "min:max:n, geometric")->excludes(k_opt);
  ls->add_option("--xi-start", seq_start, "First xi of the sequence");
  ls->add_option("--xi-end", seq_end, "Last xi of the sequence");
  ls->add_option("--xi-ratio", seq_ratio, "Ratio between successive xi")->capture_default_str();
  ls->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();

  auto* rs = app.add_subcommand("resonances", "Resonant Omega values");
  add_format(rs, format, "json");
  rs->add_option("--family", res_family,
                 "shell3d, well3d, ring2d, well2d, doubledelta1d, well1d-odd, well1d-even")
      ->required();
  rs->add_option("--nmax", n_max, "Largest N")->capture_default_str();

  auto* hb = app.add_subcommand("half-bound", "Zero-energy half-bound state check at finite a");
  add_spec_options(hb, so);
  add_format(hb, format, "json");

  auto* au = app.add_subcommand("audit", "Numerical vs rule-based classification over a grid");
  add_format(au, format, "json");
  au->add_option("--grid", grid_file, "JSON array of PotentialSpec (default: built-in grid)");
  au->add_option("--k", k, "Wavenumber")->capture_default_str();
  au->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "invalid_input", e.what());
    return kInvalidInput;
  }

  if (format.empty()) format = (*ps || *cs || *s1) ? "csv" : "json";

  try {
    if (*ps) {
      const PotentialSpec spec = make_spec(so);
      const Kinematics kin{k};
      kin.validate();
      emit_table(build_table(spec, kin, l_max), format, out);
      return kOk;
    }
    if (*cs || *s1) {
      const PotentialSpec spec = make_spec(so);
      const Kinematics kin{k};
      kin.validate();
      const bool one_d = dimension(spec.family) == 1;
      if (*cs && one_d) throw InvalidSpec("cross-section needs a 2D or 3D family; use scattering-1d");
      if (*s1 && !one_d) throw InvalidSpec("scattering-1d needs a 1D family");
      PhaseShiftTable table;
      std::optional<Verdict> verdict;
      if (limit) {
        try {
          const LimitTable lt = limit_table(spec, kin, xi_end);
          table = lt.table;
          verdict = lt.classification.verdict;
        } catch (const InconclusiveClassification& e) {
          write_error(err, "inconclusive", e.what());
          return kInconclusive;
        }
      } else {
        table = build_table(spec, kin);
      }
      if (*cs) {
        emit_cross_section(spec, kin, table, angles, verdict, format, out);
      } else {
        emit_1d(spec, kin, table, verdict, format, out);
      }
      return kOk;
    }
    if (*ls) {
      const PotentialSpec spec = make_spec(so);
      const std::vector<double> ks = k_range.empty() ? std::vector<double>{k} : parse_k_range(k_range);
      for (double kk : ks) Kinematics{kk}.validate();
      XiSequence seq = default_sequence(spec.family);
      if (seq_start || seq_end) {
        const double start = seq_start.value_or(std::pow(10.0, seq.log10_xi.front()));
        const double end = seq_end.value_or(1e-7);
        seq = XiSequence::geometric(start, end, seq_ratio);
      }
      seq.validate();
      std::vector<ScanResult> results(ks.size());
      parallel_for(ks.size(), threads, [&](std::size_t i) {
        results[i].k = ks[i];
        try {
          results[i].ok = classify_limit(spec, Kinematics{ks[i]}, seq);
        } catch (const InconclusiveClassification& e) {
          results[i].partial = e.evidence();
          results[i].message = e.what();
        }
      });
      std::sort(results.begin(), results.end(),
                [](const ScanResult& x, const ScanResult& y) { return x.k < y.k; });
      const bool any_inconclusive =
          std::any_of(results.begin(), results.end(), [](const ScanResult& r) { return !r.ok; });
      if (format == "json") {
        if (results.size() == 1) {
          out << dump(scan_json(results[0])) << '\n';
        } else {
          Json arr = Json::array();
          for (const auto& r : results) arr.push_back(scan_json(r));
          out << dump(arr) << '\n';
        }
      } else {
        out << "k,verdict,slope,log10_xi,xi,tan_delta0,tan_delta1\n";
        for (const auto& r : results) {
          const LimitClassification& c = r.ok ? *r.ok : *r.partial;
          const std::string verdict = r.ok ? std::string(to_string(c.verdict)) : "inconclusive";
          for (const auto& p : c.evidence) {
            out << fmt::format("{},{},{},{},{},{},{}\n", fd(r.k), verdict, fd(c.slope), fd(p.log10_xi),
                               fd(p.xi), fd(p.tan_delta0), p.tan_delta1 ? fd(*p.tan_delta1) : "");
          }
        }
      }
      if (any_inconclusive) {
        write_error(err, "inconclusive", "at least one wavenumber could not be classified");
        return kInconclusive;
      }
      return kOk;
    }
    if (*rs) {
      const ResonanceSet set = enumerate_resonances(parse_resonance_family(res_family), n_max);
      if (format == "json") {
        Json arr = Json::array();
        for (double w : set.omegas) arr.push_back(number_to_json(w));
        out << dump(arr) << '\n';
      } else {
        out << "n,omega\n";
        for (std::size_t i = 0; i < set.omegas.size(); ++i) out << fmt::format("{},{}\n", i + 1, fd(set.omegas[i]));
      }
      return kOk;
    }
    if (*hb) {
      const HalfBoundReport r = half_bound_check(make_spec(so));
      if (format == "json") {
        out << dump(Json(r)) << '\n';
      } else {
        out << "exists,parity,residual,interior_amplitude,exterior_amplitude\n";
        out << fmt::format("{},{},{},{},{}\n", r.exists ? "true" : "false",
                           r.parity ? std::string(to_string(*r.parity)) : "", fd(r.residual),
                           fd(r.pieces.interior_amplitude), fd(r.pieces.exterior_amplitude));
      }
      return kOk;
    }
    if (*au) {
      std::vector<PotentialSpec> grid;
      if (grid_file.empty()) {
        grid = default_audit_grid();
      } else {
        const Json j = read_json_file(grid_file);
        if (!j.is_array()) throw InvalidSpec("audit grid must be a JSON array of PotentialSpec");
        for (const Json& e : j) grid.push_back(e.get<PotentialSpec>());
      }
      const Kinematics kin{k};
      AuditReport report = run_audit(grid, kin, threads);
      std::stable_sort(report.rows.begin(), report.rows.end(), [](const AuditRow& x, const AuditRow& y) {
        return canonical_key(x.spec) < canonical_key(y.spec);
      });
      if (format == "json") {
        out << dump(Json(report)) << '\n';
      } else {
        out << "family,alpha,beta,omega,a,a0,numeric,symbolic,verdicts_agree,resonance,half_bound,"
               "residual,half_bound_consistent,slope\n";
        for (const auto& r : report.rows) {
          out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", to_string(r.spec.family),
                             fd(r.spec.alpha), fd(r.spec.beta), fd(r.spec.omega), fd(r.spec.a),
                             fd(r.spec.a0), r.numeric ? to_string(*r.numeric) : "inconclusive",
                             to_string(r.symbolic), r.verdicts_agree, r.resonance, r.half_bound.exists,
                             fd(r.half_bound.residual), r.half_bound_consistent, fd(r.slope));
        }
      }
      if (!report.passed()) {
        write_error(err, "audit_failure", fmt::format("{} of {} grid points failed", report.failures, report.rows.size()));
        return kAuditFailure;
      }
      return kOk;
    }
  } catch (const InvalidSpec& e) {
    write_error(err, "invalid_input", e.what());
    return kInvalidInput;
  } catch (const DomainError& e) {
    write_error(err, "domain_error", e.what());
    return kInvalidInput;
  } catch (const UnsupportedRegime& e) {
    write_error(err, "unsupported_regime", e.what());
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace contact::cli
