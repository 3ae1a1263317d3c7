#include "noisedim/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "noisedim/bounds.hpp"
#include "noisedim/floatfmt.hpp"
#include "noisedim/gauss_entropy.hpp"
#include "noisedim/ingest.hpp"
#include "noisedim/reference.hpp"
#include "noisedim/text.hpp"
#include "noisedim/tradeoff.hpp"

namespace noisedim {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr std::uint64_t kDefaultSeed = 7;
constexpr std::uint64_t kTableSamples = 10'000'000;

// Non-finite numbers have no JSON literal; they are written as strings.
Json real(double value) {
  if (std::isfinite(value)) return value;
  return format_real(value);
}

Json run_record(const std::string& command, Json parameters, Json outputs, std::optional<std::uint64_t> seed) {
  Json record;
  record["command"] = command;
  record["parameters"] = std::move(parameters);
  record["outputs"] = std::move(outputs);
  record["tool_version"] = kToolVersion;
  record["seed"] = seed ? Json(*seed) : Json(nullptr);
  return record;
}

Json to_json(FloatFormat fmt) {
  return {{"name", fmt.name()}, {"exponent_bits", fmt.exponent_bits()}, {"fraction_bits", fmt.fraction_bits()}};
}

Json to_json(const EntropyEstimate& est) {
  Json j;
  j["bits_per_dim"] = est.bits_per_dim;
  j["std_error"] = est.std_error;
  j["method"] = to_string(est.method);
  j["sample_count"] = est.sample_count;
  j["format"] = est.format.name();
  j["seed"] = est.method == EntropyMethod::exact ? Json(nullptr) : Json(est.seed);
  return j;
}

Json to_json(const DimensionBound& b) {
  return {{"total_bits", b.total_bits},
          {"per_dim_entropy", b.per_dim_entropy},
          {"n_required", b.n_required},
          {"n_lower_strict", b.n_lower_strict},
          {"n_upper_bijective", b.n_upper_bijective}};
}

Json to_json(const SizeStats& s) {
  return {{"file_count", s.file_count},
          {"mean_bytes", s.mean_bytes},
          {"total_bytes", s.total_bytes},
          {"extension_filter", s.extension_filter},
          {"source", to_string(s.source)},
          {"skipped_count", s.skipped_count},
          {"duplicate_count", s.duplicate_count}};
}

Json to_json(const SolverConfig& cfg) {
  return {{"floor", cfg.floor},
          {"initial_penalty", cfg.initial_penalty},
          {"penalty_growth", cfg.penalty_growth},
          {"penalty_cap", cfg.penalty_cap},
          {"max_iterations", cfg.max_iterations},
          {"subproblem_tolerance", cfg.subproblem_tolerance},
          {"stop_tolerance", cfg.stop_tolerance},
          {"divergence", to_string(cfg.divergence)}};
}

Json to_json(const TradeoffCurve& curve) {
  Json points = Json::array();
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const auto& pt = curve.points[i];
    points.push_back({{"epsilon", pt.epsilon},
                      {"divergence_raw", real(pt.divergence_value)},
                      {"divergence_isotonic", real(curve.isotonic[i])},
                      {"entropy_q", pt.entropy_q},
                      {"feasibility_gap", pt.feasibility_gap},
                      {"converged", pt.converged},
                      {"iterations", pt.iterations},
                      {"q_star", std::vector<double>(pt.q_star.masses().begin(), pt.q_star.masses().end())}});
  }
  return {{"points", points}, {"monotonicity_violations", curve.monotonicity_violations}};
}

FloatFormat format_from_tokens(const std::vector<std::string>& tokens) {
  if (tokens.size() == 2 && to_lower(tokens[0]) == "custom") return parse_format(tokens[1]);
  if (tokens.size() == 1 && to_lower(tokens[0]) != "custom") return parse_format(tokens[0]);
  throw std::invalid_argument("--format expects fp16, fp32, fp64, E:M or 'custom E:M'");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

Json to_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// entropy
// ---------------------------------------------------------------------------

struct EntropyArgs {
  std::vector<std::string> format{"fp32"};
  std::uint64_t samples = kTableSamples;
  std::uint64_t seed = kDefaultSeed;
  bool exact = false;
  int cap_bits = kDefaultEnumerationCapBits;
  unsigned threads = 0;
};

int cmd_entropy(const EntropyArgs& a, std::ostream& out, std::ostream& err) {
  const FloatFormat fmt = format_from_tokens(a.format);
  Json params;
  params["format"] = to_json(fmt);
  params["method"] = a.exact ? "exact" : "monte_carlo";
  EntropyEstimate est;
  if (a.exact) {
    params["cap_bits"] = a.cap_bits;
    est = exact_entropy(fmt, a.cap_bits, a.threads);
  } else {
    params["samples"] = a.samples;
    params["seed"] = a.seed;
    params["chunk_size"] = kMonteCarloChunkSize;
    est = mc_entropy(fmt, a.samples, a.seed, a.threads);
  }
  out << run_record("entropy", params, to_json(est), a.exact ? std::nullopt : std::optional(a.seed)).dump(2)
      << '\n';
  err << fmt.name() << ": H = " << fixed(est.bits_per_dim, 4) << " bits";
  if (!a.exact) err << " +- " << fixed(est.std_error, 4) << " (K = " << a.samples << ")";
  err << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

struct CurveArgs {
  std::string dist_file;
  std::string masses;
  double eps_start = 0.05;
  double eps_end = 2.0;
  double eps_step = 0.05;
  std::string divergence = "kl";
  SolverConfig solver;
  bool json = false;
  unsigned threads = 0;
};

int cmd_curve(CurveArgs a, std::ostream& out, std::ostream& err) {
  if (a.dist_file.empty() == a.masses.empty())
    throw std::invalid_argument("curve: give exactly one of --dist or --masses");
  const DiscreteDistribution p = parse_distribution(a.masses.empty() ? read_file(a.dist_file) : a.masses);
  a.solver.divergence = parse_divergence(a.divergence);
  const auto grid = epsilon_grid(a.eps_start, a.eps_end, a.eps_step);
  const TradeoffCurve curve = sweep_curve(p, grid, a.solver, a.threads);

  if (a.json) {
    Json params;
    params["source"] = std::vector<double>(p.masses().begin(), p.masses().end());
    params["eps_start"] = a.eps_start;
    params["eps_end"] = a.eps_end;
    params["eps_step"] = a.eps_step;
    params["solver"] = to_json(a.solver);
    out << run_record("curve", params, to_json(curve), std::nullopt).dump(2) << '\n';
  } else {
    out << curve_to_csv(curve);
  }
  err << "H(p) = " << fixed(entropy(p), 6) << " bits, " << curve.points.size() << " points, "
      << (curve.all_converged() ? "all converged" : "NOT all converged") << ", "
      << curve.monotonicity_violations.size() << " monotonicity violations\n";
  return curve.all_converged() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::optional<double> amount;
  std::string unit = "bytes";
  std::string scan_dir;
  std::string manifest;
  std::vector<std::string> extensions;
  std::optional<double> entropy_bits;
  std::string format;
  bool reference_constants = false;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  const int sources = int(a.amount.has_value()) + int(!a.scan_dir.empty()) + int(!a.manifest.empty());
  if (sources != 1) throw std::invalid_argument("bounds: give exactly one of --bytes, --scan or --manifest");
  if (a.entropy_bits.has_value() == !a.format.empty())
    throw std::invalid_argument("bounds: give exactly one of --entropy-bits or --format");

  Json params;
  Json outputs;
  double total_bits = 0;
  if (a.amount) {
    const SizeUnit unit = parse_size_unit(a.unit);
    params["size"] = *a.amount;
    params["unit"] = unit == SizeUnit::bytes ? "bytes" : "bits";
    total_bits = to_bits(*a.amount, unit);
  } else {
    const SizeStats stats = a.manifest.empty() ? scan_dataset(a.scan_dir, a.extensions) : load_manifest(a.manifest);
    if (a.manifest.empty()) {
      params["scan"] = a.scan_dir;
      params["extensions"] = a.extensions;
    } else {
      params["manifest"] = a.manifest;
    }
    outputs["sizes"] = to_json(stats);
    total_bits = to_bits(stats.mean_bytes, SizeUnit::bytes);
  }

  std::optional<std::uint64_t> seed;
  double per_dim = 0;
  if (a.entropy_bits) {
    per_dim = *a.entropy_bits;
    params["entropy_bits"] = per_dim;
  } else {
    const FloatFormat fmt = parse_format(a.format);
    params["format"] = to_json(fmt);
    if (a.reference_constants) {
      params["entropy_source"] = "reference";
      per_dim = reference::format_entropy(fmt.name());
    } else if (fmt.width() <= 16) {
      params["entropy_source"] = "exact";
      const auto est = exact_entropy(fmt, kDefaultEnumerationCapBits, a.threads);
      outputs["entropy"] = to_json(est);
      per_dim = est.bits_per_dim;
    } else {
      params["entropy_source"] = "monte_carlo";
      params["samples"] = a.samples;
      params["seed"] = a.seed;
      const auto est = mc_entropy(fmt, a.samples, a.seed, a.threads);
      outputs["entropy"] = to_json(est);
      per_dim = est.bits_per_dim;
      seed = a.seed;
    }
  }

  const DimensionBound bound = perfect_gan_dimension(total_bits, per_dim);
  outputs["bound"] = to_json(bound);
  out << run_record("bounds", params, outputs, seed).dump(2) << '\n';
  err << fixed(total_bits, 0) << " bits / " << fixed(per_dim, 4) << " bits per dimension -> n >= "
      << bound.n_required << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

struct ScanArgs {
  std::string dir;
  std::vector<std::string> extensions;
  ScanOptions options;
  std::string write_manifest_path;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const SizeStats stats = scan_dataset(a.dir, a.extensions, a.options);
  if (!a.write_manifest_path.empty()) write_manifest(a.write_manifest_path, list_files(a.dir, a.extensions, a.options));
  Json params;
  params["dir"] = a.dir;
  params["extensions"] = a.extensions;
  params["include_hidden"] = a.options.include_hidden;
  params["follow_symlinks"] = a.options.follow_symlinks;
  out << run_record("scan", params, to_json(stats), std::nullopt).dump(2) << '\n';
  err << stats.file_count << " files, mean " << fixed(stats.mean_bytes, 2) << " bytes\n";
  return 0;
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

struct ReproduceArgs {
  std::string out_dir = "reproduction";
  std::vector<std::string> tables{"1", "3", "curve"};
  std::uint64_t samples = kTableSamples;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
};

void reproduce_table1(const ReproduceArgs& a, const fs::path& dir, std::vector<Check>& checks) {
  Json estimates = Json::object();
  std::vector<EntropyEstimate> mc;
  for (const FloatFormat fmt : {FloatFormat::binary16(), FloatFormat::binary32(), FloatFormat::binary64()}) {
    mc.push_back(mc_entropy(fmt, a.samples, a.seed, a.threads));
    estimates[fmt.name()] = to_json(mc.back());
  }
  const EntropyEstimate exact16 = exact_entropy(FloatFormat::binary16());

  const auto within = [](double value, double target, double tol) { return std::fabs(value - target) <= tol; };
  const double fp32 = mc[1].bits_per_dim;
  const double fp64 = mc[2].bits_per_dim;
  checks.push_back({"table1.fp32", within(fp32, reference::format_entropy("fp32"), 0.05),
                    fixed(fp32, 4) + " vs 26.55 +- 0.05"});
  checks.push_back({"table1.fp64", within(fp64, reference::format_entropy("fp64"), 0.05),
                    fixed(fp64, 4) + " vs 55.56 +- 0.05"});
  checks.push_back({"table1.ladder", within(fp64 - fp32, 29.0, 0.1), fixed(fp64 - fp32, 4) + " vs 29.0 +- 0.1"});
  const double gap = std::fabs(exact16.bits_per_dim - mc[0].bits_per_dim);
  checks.push_back({"table1.fp16_exact_vs_mc", gap <= 3 * mc[0].std_error,
                    "|" + fixed(exact16.bits_per_dim, 5) + " - " + fixed(mc[0].bits_per_dim, 5) +
                        "| = " + fixed(gap, 5) + " vs 3 sigma = " + fixed(3 * mc[0].std_error, 5)});

  Json published = Json::object();
  for (const auto& e : reference::kFormatEntropies) published[std::string(e.format)] = e.bits;
  Json outputs;
  outputs["monte_carlo"] = estimates;
  outputs["exact"] = {{"fp16", to_json(exact16)}};
  outputs["reference"] = published;
  Json params{{"samples", a.samples}, {"seed", a.seed}, {"chunk_size", kMonteCarloChunkSize},
              {"reference_version", reference::kVersion}};
  write_file(dir / "table1.json", run_record("reproduce.table1", params, outputs, a.seed).dump(2) + "\n");
}

void reproduce_table3(const fs::path& dir, std::vector<Check>& checks) {
  std::vector<std::pair<std::string, double>> bytes;
  for (const auto& codec : reference::kCodecBytes) {
    if (codec.codec != reference::kBestCodec) continue;
    bytes = {{std::string(reference::kDatasets[0]), codec.cifar10},
             {std::string(reference::kDatasets[1]), codec.lsun_church}};
  }
  std::vector<std::pair<std::string, double>> entropies;
  for (const auto& e : reference::kFormatEntropies) entropies.emplace_back(std::string(e.format), e.bits);

  const DimensionTable table = noisedim::reproduce_table3(bytes, entropies);
  write_file(dir / "table3.csv", table_to_csv(table));

  for (std::size_t r = 0; r < table.formats.size(); ++r) {
    for (std::size_t c = 0; c < table.datasets.size(); ++c) {
      const std::uint64_t got = table.cells[r][c].n_required;
      const std::uint64_t want = reference::kPublishedDimensions[r][c];
      // The published LSUN/fp32 cell sits one above the plain ceiling.
      const bool loose = table.formats[r] == "fp32" && table.datasets[c] == "LSUN-Church";
      const bool pass = loose ? (got + 1 == want || got == want) : got == want;
      checks.push_back({"table3." + table.formats[r] + "." + table.datasets[c], pass,
                        std::to_string(got) + " vs " + std::to_string(want) + (loose ? " (+-1)" : "")});
    }
  }
}

void reproduce_curve(const ReproduceArgs& a, const fs::path& dir, std::vector<Check>& checks) {
  const DiscreteDistribution p(reference::kToySource);
  const auto grid = epsilon_grid(0.05, 2.0, 0.05);
  const TradeoffCurve curve = sweep_curve(p, grid, SolverConfig{}, a.threads);
  write_file(dir / "toy_curve.csv", curve_to_csv(curve));

  const double h = entropy(p);
  bool zero_at_capacity = true;
  for (const auto& pt : curve.points)
    if (pt.epsilon >= h && pt.divergence_value > 1e-6) zero_at_capacity = false;
  checks.push_back({"curve.source_entropy", std::fabs(h - reference::kToySourceEntropy) <= 1e-3,
                    fixed(h, 6) + " vs 1.857 +- 0.001"});
  checks.push_back({"curve.converged", curve.all_converged(), std::to_string(curve.points.size()) + " points"});
  checks.push_back({"curve.monotone", curve.monotonicity_violations.empty(),
                    std::to_string(curve.monotonicity_violations.size()) + " raw violations above 1e-4"});
  checks.push_back({"curve.zero_at_capacity", zero_at_capacity, "d(eps) <= 1e-6 for eps >= H(p)"});
}

int cmd_reproduce(const ReproduceArgs& a, std::ostream& out, std::ostream& err) {
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  std::vector<Check> checks;
  std::vector<std::string> files;
  for (const auto& t : a.tables) {
    if (t == "1") {
      reproduce_table1(a, dir, checks);
      files.push_back("table1.json");
    } else if (t == "3") {
      reproduce_table3(dir, checks);
      files.push_back("table3.csv");
    } else if (t == "curve") {
      reproduce_curve(a, dir, checks);
      files.push_back("toy_curve.csv");
    } else {
      throw std::invalid_argument("reproduce: unknown table '" + t + "' (expected 1, 3 or curve)");
    }
  }

  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    err << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  Json params{{"out", a.out_dir}, {"tables", a.tables}, {"samples", a.samples}, {"seed", a.seed},
              {"reference_version", reference::kVersion}};
  Json outputs{{"files", files}, {"checks", to_json(checks)}, {"all_passed", all}};
  const std::string record = run_record("reproduce", params, outputs, a.seed).dump(2) + "\n";
  write_file(dir / "run.json", record);
  out << record;
  return all ? 0 : 1;
}

void add_solver_flags(CLI::App* sub, SolverConfig& cfg) {
  sub->add_option("--floor", cfg.floor, "Lower bound on every q_x")->capture_default_str();
  sub->add_option("--tau0", cfg.initial_penalty, "Initial slack penalty")->capture_default_str();
  sub->add_option("--mu", cfg.penalty_growth, "Penalty growth factor")->capture_default_str();
  sub->add_option("--tau-max", cfg.penalty_cap, "Penalty cap")->capture_default_str();
  sub->add_option("--max-iter", cfg.max_iterations, "Maximum convex-concave iterations")->capture_default_str();
  sub->add_option("--sub-tol", cfg.subproblem_tolerance, "Subproblem KKT tolerance")->capture_default_str();
  sub->add_option("--stop-tol", cfg.stop_tolerance, "Objective-change stop tolerance")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noise-dimension calculator: quantized-noise entropy, dimension bounds, divergence-entropy curves"};
  app.name(args.empty() ? "noisedim" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  EntropyArgs entropy_args;
  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy of N(0,1) quantized to a float format");
  entropy_cmd->add_option("--format", entropy_args.format, "fp16, fp32, fp64, E:M or 'custom E:M'")
      ->expected(1, 2)
      ->capture_default_str();
  entropy_cmd->add_option("--samples,-K", entropy_args.samples, "Monte Carlo sample count")->capture_default_str();
  entropy_cmd->add_option("--seed", entropy_args.seed, "Monte Carlo seed")->capture_default_str();
  entropy_cmd->add_flag("--exact", entropy_args.exact, "Enumerate every atom instead of sampling");
  entropy_cmd->add_option("--cap-bits", entropy_args.cap_bits, "Widest format --exact will enumerate")
      ->capture_default_str();
  entropy_cmd->add_option("--threads", entropy_args.threads, "Workers (0: $NOISEDIM_THREADS or all cores)");

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand("curve", "Divergence-entropy curve d(eps) as CSV");
  curve_cmd->add_option("--dist", curve_args.dist_file, "File of whitespace/comma separated masses");
  curve_cmd->add_option("--masses", curve_args.masses, "Inline masses, e.g. 0.9,0.1");
  curve_cmd->add_option("--eps-start", curve_args.eps_start)->capture_default_str();
  curve_cmd->add_option("--eps-end", curve_args.eps_end)->capture_default_str();
  curve_cmd->add_option("--eps-step", curve_args.eps_step)->capture_default_str();
  curve_cmd->add_option("--divergence", curve_args.divergence, "kl or js")->capture_default_str();
  curve_cmd->add_flag("--json", curve_args.json, "Emit a JSON run record instead of CSV");
  curve_cmd->add_option("--threads", curve_args.threads, "Workers (0: $NOISEDIM_THREADS or all cores)");
  add_solver_flags(curve_cmd, curve_args.solver);

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Noise dimension needed to reproduce a source exactly");
  bounds_cmd->add_option("--bytes", bounds_args.amount, "Mean compressed size per sample");
  bounds_cmd->add_option("--unit", bounds_args.unit, "Unit of --bytes: bytes or bits")->capture_default_str();
  bounds_cmd->add_option("--scan", bounds_args.scan_dir, "Directory of compressed files");
  bounds_cmd->add_option("--manifest", bounds_args.manifest, "CSV manifest 'filename,bytes'");
  bounds_cmd->add_option("--extensions", bounds_args.extensions, "Suffix filter for --scan")->delimiter(',');
  bounds_cmd->add_option("--entropy-bits", bounds_args.entropy_bits, "Per-dimension noise entropy");
  bounds_cmd->add_option("--format", bounds_args.format, "Float format of the noise");
  bounds_cmd->add_flag("--reference-constants,--paper-constants", bounds_args.reference_constants,
                       "Use the published per-format entropies (11.36, 26.55, 55.56)");
  bounds_cmd->add_option("--samples", bounds_args.samples, "Monte Carlo samples when estimating locally")
      ->capture_default_str();
  bounds_cmd->add_option("--seed", bounds_args.seed)->capture_default_str();
  bounds_cmd->add_option("--threads", bounds_args.threads);

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Size statistics of a directory of compressed files");
  scan_cmd->add_option("dir", scan_args.dir)->required();
  scan_cmd->add_option("--extensions", scan_args.extensions)->delimiter(',');
  scan_cmd->add_flag("--include-hidden", scan_args.options.include_hidden);
  scan_cmd->add_flag("--follow-symlinks", scan_args.options.follow_symlinks);
  scan_cmd->add_option("--write-manifest", scan_args.write_manifest_path, "Also write a filename,bytes CSV");

  ReproduceArgs reproduce_args;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate the entropy and dimension tables and the toy curve");
  reproduce_cmd->add_option("--out", reproduce_args.out_dir, "Output directory")->capture_default_str();
  reproduce_cmd->add_option("--tables", reproduce_args.tables, "Any of 1, 3, curve")->delimiter(',')
      ->capture_default_str();
  reproduce_cmd->add_option("--samples", reproduce_args.samples)->capture_default_str();
  reproduce_cmd->add_option("--seed", reproduce_args.seed)->capture_default_str();
  reproduce_cmd->add_option("--threads", reproduce_args.threads);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*entropy_cmd) return cmd_entropy(entropy_args, out, err);
    if (*curve_cmd) return cmd_curve(curve_args, out, err);
    if (*bounds_cmd) return cmd_bounds(bounds_args, out, err);
    if (*scan_cmd) return cmd_scan(scan_args, out, err);
    if (*reproduce_cmd) return cmd_reproduce(reproduce_args, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace noisedim
