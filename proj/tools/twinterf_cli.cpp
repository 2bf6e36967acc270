// Command-line front end: runs the canned two-particle interference
// experiments and writes deterministic CSV/JSON pattern data.
//
// Exit codes: 0 success, 1 usage/config error, 2 verification failure,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "twinterf/network_json.hpp"
#include "twinterf/twinterf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInternal = 3;

constexpr double kVerifyTolerance = 1e-10;

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void print_error_json(int code, const std::string& kind, const std::string& message) {
  nlohmann::json j{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw twinterf::InvalidInput("cannot open output file: " + path);
  out << contents;
  if (!out) throw twinterf::InvalidInput("failed writing output file: " + path);
}

// ---------------------------------------------------------------------------
// Config files: a JSON object whose keys mirror the long option names of the
// subcommand. Command-line flags win over config values (with a warning).

using ConfigApplier = std::function<void(const nlohmann::json&)>;

struct ConfigKey {
  std::string name;  // long option name without leading dashes
  ConfigApplier apply;
};

void apply_config_file(const CLI::App& sub, const std::string& path,
                       const std::vector<ConfigKey>& keys) {
  std::ifstream in(path);
  if (!in) throw twinterf::InvalidInput("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw twinterf::InvalidInput("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw twinterf::InvalidInput("config file must hold a JSON object");

  for (auto it = j.begin(); it != j.end(); ++it) {
    const ConfigKey* match = nullptr;
    for (const auto& key : keys) {
      if (key.name == it.key()) {
        match = &key;
        break;
      }
    }
    if (match == nullptr) {
      throw twinterf::InvalidInput("unknown config key \"" + it.key() + "\" in " + path);
    }
    if (sub.count("--" + match->name) > 0) {
      std::cerr << "warning: --" << match->name
                << " given on the command line overrides the config file value\n";
      continue;
    }
    try {
      match->apply(it.value());
    } catch (const nlohmann::json::exception&) {
      throw twinterf::InvalidInput("config key \"" + it.key() + "\" has the wrong type");
    }
  }
}

// ---------------------------------------------------------------------------
// Shared output options.

struct OutputOptions {
  std::string out;
  std::string format = "csv";
  std::string units = "absolute";
};

void add_output_options(CLI::App* sub, OutputOptions& opts) {
  sub->add_option("--out", opts.out, "Write the pattern data to this file");
  sub->add_option("--format", opts.format, "Output file format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--units", opts.units,
                  "absolute probabilities, or the scaled units used in bar/fringe plots")
      ->check(CLI::IsMember({"absolute", "paper"}))
      ->capture_default_str();
}

std::vector<ConfigKey> output_config_keys(OutputOptions& opts) {
  return {
      {"out", [&opts](const nlohmann::json& v) { opts.out = v.get<std::string>(); }},
      {"format",
       [&opts](const nlohmann::json& v) {
         opts.format = v.get<std::string>();
         if (opts.format != "csv" && opts.format != "json") {
           throw twinterf::InvalidInput("config key \"format\" must be csv or json");
         }
       }},
      {"units",
       [&opts](const nlohmann::json& v) {
         opts.units = v.get<std::string>();
         if (opts.units != "absolute" && opts.units != "paper") {
           throw twinterf::InvalidInput("config key \"units\" must be absolute or paper");
         }
       }},
  };
}

nlohmann::json base_metadata(const std::string& experiment, const OutputOptions& opts,
                             double overlap_magnitude, nlohmann::json parameters) {
  return {{"experiment", experiment},
          {"engine_version", twinterf::kEngineVersion},
          {"schema_version", twinterf::kOutputSchemaVersion},
          {"overlap", overlap_magnitude},
          {"units", opts.units},
          {"parameters", std::move(parameters)}};
}

// ---------------------------------------------------------------------------
// Discrete experiments (hom, extended-hom, nport, network).

struct DiscreteJob {
  std::string experiment;
  std::optional<twinterf::SplitterSpec> spec;
  nlohmann::json parameters;
  int reference = 1;  // 1-based, as printed
  OutputOptions output;
  bool verify = false;
  bool inject_fault = false;
  bool allow_nonphysical = false;
};

std::string discrete_csv(const twinterf::DiscretePattern& pattern, bool paper_units) {
  const double scale = static_cast<double>(pattern.n) * pattern.n / 2.0;
  std::string csv = paper_units ? "detector,probability,probability_paper_units\n"
                                : "detector,probability\n";
  for (int k = 0; k < pattern.n; ++k) {
    const double p = pattern.counts[static_cast<std::size_t>(k)];
    csv += std::to_string(k + 1) + "," + fmt(p);
    if (paper_units) csv += "," + fmt(p * scale);
    csv += "\n";
  }
  return csv;
}

std::string discrete_json(const twinterf::DiscretePattern& pattern, bool paper_units,
                          const nlohmann::json& metadata) {
  const double scale = static_cast<double>(pattern.n) * pattern.n / 2.0;
  nlohmann::json data;
  for (int k = 0; k < pattern.n; ++k) {
    const double p = pattern.counts[static_cast<std::size_t>(k)];
    data["detector"].push_back(k + 1);
    data["probability"].push_back(p);
    if (paper_units) data["probability_paper_units"].push_back(p * scale);
  }
  nlohmann::json j{{"data", std::move(data)}, {"metadata", metadata}};
  return j.dump(2) + "\n";
}

int run_discrete(const DiscreteJob& job) {
  const twinterf::SplitterSpec& spec = *job.spec;
  const int n = spec.dim();
  if (job.reference < 1 || job.reference > n) {
    throw twinterf::InvalidInput("--reference must lie in 1.." + std::to_string(n));
  }
  if (!spec.unitary_embeddable() && !job.allow_nonphysical) {
    throw twinterf::InvalidInput(
        "splitter columns are not unitary-embeddable (overlap " +
        fmt(std::abs(spec.overlap()), "%.6g") +
        " exceeds 1e-9); no lossless device realizes them. Pass --allow-nonphysical to proceed");
  }

  const twinterf::CoincidenceDistribution dist =
      twinterf::coincidences(twinterf::symmetrize(spec.col_a(), spec.col_b()));
  const twinterf::DiscretePattern pattern =
      twinterf::pattern_from_distribution(dist, job.reference - 1);

  std::cout << "experiment: " << job.experiment << " (n = " << n << ")\n";
  std::cout << "reference detector: " << job.reference << "\n";
  std::cout << "column overlap |<a|b>|: " << fmt(std::abs(spec.overlap()), "%.6g") << "\n";
  std::cout << "detector  probability\n";
  for (int k = 0; k < n; ++k) {
    std::cout << "  " << (k + 1) << "  "
              << fmt(pattern.counts[static_cast<std::size_t>(k)], "%.12g") << "\n";
  }
  std::cout << "total probability over all events: " << fmt(dist.total(), "%.12g") << "\n";

  if (!job.output.out.empty()) {
    const bool paper = job.output.units == "paper";
    const nlohmann::json metadata = base_metadata(job.experiment, job.output,
                                                  std::abs(spec.overlap()), job.parameters);
    write_file(job.output.out, job.output.format == "csv"
                                   ? discrete_csv(pattern, paper)
                                   : discrete_json(pattern, paper, metadata));
  }

  if (job.verify) {
    const auto to_std = [](const twinterf::ModeVector& v) {
      std::vector<std::complex<double>> out(static_cast<std::size_t>(v.dim()));
      for (int j = 0; j < v.dim(); ++j) out[static_cast<std::size_t>(j)] = v[j];
      return out;
    };
    const twinterf::OracleResult oracle =
        twinterf::oracle_coincidences(to_std(spec.col_a()), to_std(spec.col_b()));

    std::vector<double> bunched(dist.bunched_all().begin(), dist.bunched_all().end());
    if (job.inject_fault && !bunched.empty()) bunched[0] += 1e-6;

    double deviation = 0.0;
    for (int j = 0; j < n; ++j) {
      deviation = std::max(deviation,
                           std::abs(bunched[static_cast<std::size_t>(j)] - oracle.bunched[static_cast<std::size_t>(j)]));
      for (int k = j + 1; k < n; ++k) {
        deviation = std::max(deviation, std::abs(dist.pair(j, k) - oracle.pair(j, k)));
      }
    }
    const bool ok = deviation <= kVerifyTolerance;
    std::cout << "verify: max |engine - oracle| = " << fmt(deviation, "%.3e")
              << " (tolerance " << fmt(kVerifyTolerance, "%.1e") << ") -> "
              << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      print_error_json(kExitVerifyFailed, "verification",
                       "engine/oracle deviation " + fmt(deviation, "%.3e") +
                           " exceeds tolerance " + fmt(kVerifyTolerance, "%.1e"));
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Continuous experiment (hbt).

struct HbtJob {
  double x0 = 0.0;
  double wavelength = 0.0;
  double distance = 0.0;
  double sigma = 0.0;
  double center = 0.0;
  std::string grid_text;
  std::optional<double> slice_x1;
  OutputOptions output;
};

twinterf::GridSpec parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw twinterf::InvalidInput("--grid expects min:max:points, got \"" + text + "\"");
  }
  try {
    twinterf::GridSpec grid;
    std::size_t used = 0;
    grid.min = std::stod(text.substr(0, first), &used);
    grid.max = std::stod(text.substr(first + 1, second - first - 1), &used);
    grid.points = std::stoi(text.substr(second + 1), &used);
    return grid;
  } catch (const std::exception&) {
    throw twinterf::InvalidInput("--grid expects min:max:points, got \"" + text + "\"");
  }
}

std::string continuous_csv(const twinterf::ContinuousPattern& pattern, bool paper_units,
                           double fringe_width) {
  std::string csv;
  if (pattern.is_slice()) {
    csv = paper_units ? "x2,density,separation_fringe_widths\n" : "x2,density\n";
    for (int j = 0; j < pattern.points(); ++j) {
      const double x2 = pattern.grid()[static_cast<std::size_t>(j)];
      csv += fmt(x2) + "," + fmt(pattern.slice_value(j));
      if (paper_units) csv += "," + fmt((pattern.slice_x1() - x2) / fringe_width);
      csv += "\n";
    }
  } else {
    csv = paper_units ? "x1,x2,density,separation_fringe_widths\n" : "x1,x2,density\n";
    for (int i = 0; i < pattern.points(); ++i) {
      for (int j = 0; j < pattern.points(); ++j) {
        const double x1 = pattern.grid()[static_cast<std::size_t>(i)];
        const double x2 = pattern.grid()[static_cast<std::size_t>(j)];
        csv += fmt(x1) + "," + fmt(x2) + "," + fmt(pattern.value(i, j));
        if (paper_units) csv += "," + fmt((x1 - x2) / fringe_width);
        csv += "\n";
      }
    }
  }
  return csv;
}

std::string continuous_json(const twinterf::ContinuousPattern& pattern,
                            const nlohmann::json& metadata) {
  nlohmann::json data;
  if (pattern.is_slice()) {
    for (int j = 0; j < pattern.points(); ++j) {
      data["x2"].push_back(pattern.grid()[static_cast<std::size_t>(j)]);
      data["density"].push_back(pattern.slice_value(j));
    }
  } else {
    for (int i = 0; i < pattern.points(); ++i) {
      data["x"].push_back(pattern.grid()[static_cast<std::size_t>(i)]);
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < pattern.points(); ++j) row.push_back(pattern.value(i, j));
      data["density"].push_back(std::move(row));
    }
  }
  nlohmann::json j{{"data", std::move(data)}, {"metadata", metadata}};
  return j.dump(2) + "\n";
}

int run_hbt_job(const HbtJob& job) {
  const twinterf::HbtGeometry geom{job.x0, job.wavelength, job.distance};
  geom.validate();
  const twinterf::Envelope env = twinterf::Envelope::gaussian(job.sigma, job.center);
  const twinterf::GridSpec grid = parse_grid(job.grid_text);

  if (!geom.paraxial_ok()) {
    std::cerr << "warning: paraxial ratio 2*x0/L = " << fmt(geom.paraxial_ratio(), "%.3g")
              << " exceeds 0.1; the linear phase profile is a poor approximation here\n";
  }

  const twinterf::ContinuousPattern pattern = twinterf::scan(geom, env, grid, job.slice_x1);

  std::cout << "experiment: hbt\n";
  std::cout << "fringe width lambda*L/(2*x0): " << fmt(geom.fringe_width(), "%.12g") << "\n";
  std::cout << "column overlap |s|: " << fmt(pattern.overlap_magnitude(), "%.6g") << "\n";
  if (pattern.is_slice()) {
    std::cout << "slice at x1 = " << fmt(pattern.slice_x1(), "%.12g") << ", " << pattern.points()
              << " points in [" << fmt(grid.min, "%.12g") << ", " << fmt(grid.max, "%.12g")
              << "]\n";
    try {
      std::cout << "estimated dark-fringe spacing: "
                << fmt(twinterf::fringe_spacing(pattern), "%.12g") << "\n";
    } catch (const twinterf::InvalidInput&) {
      std::cout << "estimated dark-fringe spacing: n/a (fewer than 2 dark fringes in window)\n";
    }
  } else {
    std::cout << "full 2-D pattern, " << pattern.points() << "x" << pattern.points()
              << " points\n";
    std::cout << "quadrature total: " << fmt(pattern.quadrature_total(), "%.12g") << "\n";
  }

  if (!job.output.out.empty()) {
    nlohmann::json parameters{{"x0", job.x0},          {"wavelength", job.wavelength},
                              {"L", job.distance},     {"sigma", job.sigma},
                              {"center", job.center},  {"grid_min", grid.min},
                              {"grid_max", grid.max},  {"grid_points", grid.points}};
    if (job.slice_x1.has_value()) parameters["slice_x1"] = *job.slice_x1;
    const nlohmann::json metadata =
        base_metadata("hbt", job.output, pattern.overlap_magnitude(), std::move(parameters));
    const bool paper = job.output.units == "paper";
    write_file(job.output.out, job.output.format == "csv"
                                   ? continuous_csv(pattern, paper, geom.fringe_width())
                                   : continuous_json(pattern, metadata));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twinterf: two-particle coincidence patterns for n-port interferometers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", twinterf::kEngineVersion);

  // --- hom ---------------------------------------------------------------
  auto* hom = app.add_subcommand("hom", "Two-detector dip: one balanced splitter");
  DiscreteJob hom_job;
  hom_job.experiment = "hom";
  std::string hom_config;
  add_output_options(hom, hom_job.output);
  hom->add_flag("--verify", hom_job.verify, "Cross-check against the brute-force oracle");
  hom->add_flag("--inject-fault", hom_job.inject_fault)->group("");
  hom->add_option("--config", hom_config, "JSON config file (flags win on conflict)");

  // --- extended-hom --------------------------------------------------------
  auto* ehom = app.add_subcommand("extended-hom", "Four-detector extension of the dip");
  DiscreteJob ehom_job;
  ehom_job.experiment = "extended-hom";
  std::string ehom_topology = "eq6";
  std::string ehom_config;
  ehom->add_option("--topology", ehom_topology,
                   "eq6 (direct phase profile), fig5 or fig6 (beam-splitter networks)")
      ->check(CLI::IsMember({"eq6", "fig5", "fig6"}))
      ->capture_default_str();
  ehom->add_option("--reference", ehom_job.reference, "Reference detector (1-based)")
      ->capture_default_str();
  add_output_options(ehom, ehom_job.output);
  ehom->add_flag("--verify", ehom_job.verify, "Cross-check against the brute-force oracle");
  ehom->add_flag("--inject-fault", ehom_job.inject_fault)->group("");
  ehom->add_option("--config", ehom_config, "JSON config file (flags win on conflict)");

  // --- nport ---------------------------------------------------------------
  auto* nport = app.add_subcommand("nport", "Alternating-phase pattern for even n");
  DiscreteJob nport_job;
  nport_job.experiment = "nport";
  int nport_n = 0;
  std::string nport_config;
  nport->add_option("--n", nport_n, "Channel count (even, >= 2)");
  nport->add_option("--reference", nport_job.reference, "Reference detector (1-based)")
      ->capture_default_str();
  add_output_options(nport, nport_job.output);
  nport->add_flag("--verify", nport_job.verify, "Cross-check against the brute-force oracle");
  nport->add_flag("--inject-fault", nport_job.inject_fault)->group("");
  nport->add_option("--config", nport_config, "JSON config file (flags win on conflict)");

  // --- hbt -------------------------------------------------------------------
  auto* hbt = app.add_subcommand("hbt", "Continuous-position coincidence density");
  HbtJob hbt_job;
  std::string hbt_config;
  hbt->add_option("--x0", hbt_job.x0, "Half source separation (m)");
  hbt->add_option("--wavelength", hbt_job.wavelength, "Wavelength (m)");
  hbt->add_option("--L", hbt_job.distance, "Propagation distance (m)");
  hbt->add_option("--sigma", hbt_job.sigma, "Gaussian envelope width (m)");
  hbt->add_option("--center", hbt_job.center, "Envelope center (m)")->capture_default_str();
  hbt->add_option("--grid", hbt_job.grid_text, "Detector grid as min:max:points");
  double hbt_slice = 0.0;
  auto* slice_opt = hbt->add_option("--slice-x1", hbt_slice,
                                    "Fix x1 and emit the 1-D cut instead of the full pattern");
  add_output_options(hbt, hbt_job.output);
  hbt->add_option("--config", hbt_config, "JSON config file (flags win on conflict)");

  // --- network ---------------------------------------------------------------
  auto* network = app.add_subcommand("network", "Pattern of a beam-splitter network file");
  DiscreteJob network_job;
  network_job.experiment = "network";
  std::string network_file;
  std::string network_config;
  network->add_option("--file", network_file, "Network description (JSON)");
  network->add_option("--reference", network_job.reference, "Reference detector (1-based)")
      ->capture_default_str();
  network->add_flag("--allow-nonphysical", network_job.allow_nonphysical,
                    "Run even if the two columns cannot belong to one unitary");
  add_output_options(network, network_job.output);
  network->add_flag("--verify", network_job.verify, "Cross-check against the brute-force oracle");
  network->add_flag("--inject-fault", network_job.inject_fault)->group("");
  network->add_option("--config", network_config, "JSON config file (flags win on conflict)");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      std::cerr << e.what() << "\n";
      print_error_json(kExitUsage, "usage", e.what());
      return kExitUsage;
    }

    if (hom->parsed()) {
      if (!hom_config.empty()) {
        auto keys = output_config_keys(hom_job.output);
        keys.push_back({"verify", [&](const nlohmann::json& v) { hom_job.verify = v.get<bool>(); }});
        apply_config_file(*hom, hom_config, keys);
      }
      hom_job.spec = twinterf::alternating_profile(2);
      hom_job.parameters = {{"n", 2}, {"reference", hom_job.reference}};
      return run_discrete(hom_job);
    }

    if (ehom->parsed()) {
      if (!ehom_config.empty()) {
        auto keys = output_config_keys(ehom_job.output);
        keys.push_back({"topology", [&](const nlohmann::json& v) {
                          ehom_topology = v.get<std::string>();
                        }});
        keys.push_back({"reference", [&](const nlohmann::json& v) {
                          ehom_job.reference = v.get<int>();
                        }});
        keys.push_back({"verify", [&](const nlohmann::json& v) { ehom_job.verify = v.get<bool>(); }});
        apply_config_file(*ehom, ehom_config, keys);
      }
      twinterf::ExtendedHomTopology topology;
      if (ehom_topology == "eq6") {
        topology = twinterf::ExtendedHomTopology::eq6;
      } else if (ehom_topology == "fig5") {
        topology = twinterf::ExtendedHomTopology::fig5;
      } else if (ehom_topology == "fig6") {
        topology = twinterf::ExtendedHomTopology::fig6;
      } else {
        throw twinterf::InvalidInput("--topology must be eq6, fig5 or fig6");
      }
      ehom_job.spec = twinterf::extended_hom_splitter(topology);
      ehom_job.parameters = {{"n", 4},
                             {"topology", ehom_topology},
                             {"reference", ehom_job.reference}};
      return run_discrete(ehom_job);
    }

    if (nport->parsed()) {
      if (!nport_config.empty()) {
        auto keys = output_config_keys(nport_job.output);
        keys.push_back({"n", [&](const nlohmann::json& v) { nport_n = v.get<int>(); }});
        keys.push_back({"reference", [&](const nlohmann::json& v) {
                          nport_job.reference = v.get<int>();
                        }});
        keys.push_back({"verify", [&](const nlohmann::json& v) { nport_job.verify = v.get<bool>(); }});
        apply_config_file(*nport, nport_config, keys);
      }
      if (nport_n == 0) throw twinterf::InvalidInput("missing required parameter --n");
      if (nport_n < 2 || nport_n % 2 != 0) {
        throw twinterf::InvalidInput("--n must be even and >= 2 (the alternating profile needs "
                                     "balanced parities), got " +
                                     std::to_string(nport_n));
      }
      nport_job.spec = twinterf::alternating_profile(nport_n);
      nport_job.parameters = {{"n", nport_n}, {"reference", nport_job.reference}};
      return run_discrete(nport_job);
    }

    if (hbt->parsed()) {
      if (!hbt_config.empty()) {
        auto keys = output_config_keys(hbt_job.output);
        keys.push_back({"x0", [&](const nlohmann::json& v) { hbt_job.x0 = v.get<double>(); }});
        keys.push_back({"wavelength", [&](const nlohmann::json& v) {
                          hbt_job.wavelength = v.get<double>();
                        }});
        keys.push_back({"L", [&](const nlohmann::json& v) { hbt_job.distance = v.get<double>(); }});
        keys.push_back({"sigma", [&](const nlohmann::json& v) { hbt_job.sigma = v.get<double>(); }});
        keys.push_back({"center", [&](const nlohmann::json& v) { hbt_job.center = v.get<double>(); }});
        keys.push_back({"grid", [&](const nlohmann::json& v) {
                          hbt_job.grid_text = v.get<std::string>();
                        }});
        keys.push_back({"slice-x1", [&](const nlohmann::json& v) {
                          hbt_slice = v.get<double>();
                          hbt_job.slice_x1 = hbt_slice;
                        }});
        apply_config_file(*hbt, hbt_config, keys);
      }
      if (slice_opt->count() > 0) hbt_job.slice_x1 = hbt_slice;
      for (const auto& [value, name] :
           {std::pair{hbt_job.x0, "--x0"}, {hbt_job.wavelength, "--wavelength"},
            {hbt_job.distance, "--L"}, {hbt_job.sigma, "--sigma"}}) {
        if (!(value > 0.0)) {
          throw twinterf::InvalidInput(std::string("missing or non-positive parameter ") + name);
        }
      }
      if (hbt_job.grid_text.empty()) {
        throw twinterf::InvalidInput("missing required parameter --grid (min:max:points)");
      }
      return run_hbt_job(hbt_job);
    }

    if (network->parsed()) {
      if (!network_config.empty()) {
        auto keys = output_config_keys(network_job.output);
        keys.push_back({"file", [&](const nlohmann::json& v) {
                          network_file = v.get<std::string>();
                        }});
        keys.push_back({"reference", [&](const nlohmann::json& v) {
                          network_job.reference = v.get<int>();
                        }});
        keys.push_back({"allow-nonphysical", [&](const nlohmann::json& v) {
                          network_job.allow_nonphysical = v.get<bool>();
                        }});
        keys.push_back({"verify", [&](const nlohmann::json& v) {
                          network_job.verify = v.get<bool>();
                        }});
        apply_config_file(*network, network_config, keys);
      }
      if (network_file.empty()) {
        throw twinterf::InvalidInput("missing required parameter --file (network JSON)");
      }
      const twinterf::NetworkDescription net = twinterf::load_network_file(network_file);
      network_job.spec = twinterf::compile_network(net).spec;
      network_job.parameters = {{"network", twinterf::network_to_json(net)},
                                {"reference", network_job.reference}};
      return run_discrete(network_job);
    }

    throw twinterf::InvalidInput("no subcommand given");
  } catch (const twinterf::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_error_json(kExitUsage, "config", e.what());
    return kExitUsage;
  } catch (const twinterf::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    print_error_json(kExitInternal, "internal", e.what());
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    print_error_json(kExitInternal, "internal", e.what());
    return kExitInternal;
  }
}
