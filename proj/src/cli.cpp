#include "fif/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fif/bench.hpp"
#include "fif/io.hpp"
#include "fif/outer_loop.hpp"
#include "fif/report.hpp"
#include "fif/spectrum.hpp"

namespace fif {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Errc::Io, "failed writing " + path.string());
}

OuterConfig outer_config(const DecomposeOptions& opt) {
  OuterConfig cfg;
  cfg.eta = opt.eta;
  cfg.max_imfs = opt.max_imfs;
  cfg.mask_strategy.kind = opt.mask_strategy == "spectral" ? MaskKind::SpectralPeak : MaskKind::ExtremaCount;
  if (opt.mask_strategy != "spectral" && opt.mask_strategy != "extrema") {
    throw Error(Errc::InvalidConfig, "unknown mask strategy '" + opt.mask_strategy + "'");
  }
  cfg.mask_strategy.nu = opt.nu;
  cfg.inner.delta = opt.delta;
  cfg.inner.max_iterations = opt.max_inner_iter;
  if (opt.mode != "direct" && opt.mode != "iterative") {
    throw Error(Errc::InvalidConfig, "unknown mode '" + opt.mode + "'");
  }
  cfg.inner.mode = opt.mode == "iterative" ? InnerMode::Iterative : InnerMode::Direct;
  cfg.inner.gamma = opt.gamma;
  cfg.filter_shape = parse_filter_spec(opt.filter);
  cfg.validate();
  return cfg;
}

SignalFormat signal_format(const std::string& name) {
  if (name == "csv") return SignalFormat::Csv;
  if (name == "f64le") return SignalFormat::F64le;
  throw Error(Errc::InvalidConfig, "unknown input format '" + name + "'");
}

}  // namespace

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::Io:
    case Errc::ParseError:
    case Errc::NonFiniteSample:
    case Errc::CacheFormat:
      return kExitIo;
    case Errc::InvalidConfig:
    case Errc::SupportTooLarge:
    case Errc::DegenerateFilter:
    case Errc::InvalidFilterTable:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

FilterShape parse_filter_spec(const std::string& spec) {
  if (spec == "triangular") return FilterShape::triangular();
  if (spec == "triangular-self-convolved") return FilterShape::triangular_self_convolved();
  constexpr std::string_view prefix = "tabulated:";
  if (spec.rfind(prefix, 0) == 0 && spec.size() > prefix.size()) {
    return load_filter_table(spec.substr(prefix.size()));
  }
  throw Error(Errc::InvalidConfig, "unknown filter '" + spec + "'");
}

int cmd_decompose(const DecomposeOptions& opt, std::ostream& log) {
  OuterConfig cfg;
  SignalFormat format{};
  try {
    format = signal_format(opt.format);
    cfg = outer_config(opt);
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }

  std::error_code ec;
  std::filesystem::create_directories(opt.output_dir, ec);
  if (ec) {
    log << "error: cannot create " << opt.output_dir.string() << ": " << ec.message() << "\n";
    return kExitIo;
  }

  RunReport report;
  report.input_path = opt.input.string();
  report.input_format = opt.format;
  report.filter = opt.filter;
  report.mask_strategy = opt.mask_strategy;
  report.nu = opt.nu;
  report.delta = opt.delta;
  report.max_inner_iterations = opt.max_inner_iter;
  report.max_imfs = opt.max_imfs;
  report.eta = opt.eta;
  report.mode = opt.mode;
  report.gamma = opt.gamma;

  const auto finish = [&](int code, const std::string& message) {
    report.exit_code = code;
    report.error = message;
    if (!message.empty()) log << "error: " << message << "\n";
    try {
      write_text(opt.output_dir / "report.json", report.to_json());
    } catch (const Error& e) {
      log << "error: " << e.what() << "\n";
      return code == kExitOk ? static_cast<int>(kExitIo) : code;
    }
    return code;
  };

  auto t0 = clock_type::now();
  Signal input;
  try {
    input = read_signal(opt.input, format);
  } catch (const Error& e) {
    return finish(exit_code_for(e.code()), e.what());
  }
  report.n = input.size();
  report.checksum = signal_checksum(input.samples());
  report.t_read = seconds_since(t0);

  EigenvalueCache cache;
  try {
    if (opt.eigen_cache && std::filesystem::exists(*opt.eigen_cache)) cache.load(*opt.eigen_cache);
  } catch (const Error& e) {
    return finish(exit_code_for(e.code()), e.what());
  }

  t0 = clock_type::now();
  Decomposition result;
  try {
    result = decompose(input, cfg, &cache);
  } catch (const Error& e) {
    report.t_decompose = seconds_since(t0);
    return finish(exit_code_for(e.code()), e.what());
  }
  report.t_decompose = seconds_since(t0);
  report.set_result(result, input.samples());

  t0 = clock_type::now();
  try {
    for (std::size_t k = 0; k < result.imfs.size(); ++k) {
      write_signal_csv(opt.output_dir / report.imfs[k].file, result.imfs[k].imf.samples());
    }
    write_signal_csv(opt.output_dir / "trend.csv", result.trend.samples());
    if (opt.eigen_cache) cache.save(*opt.eigen_cache);
  } catch (const Error& e) {
    report.t_write = seconds_since(t0);
    return finish(exit_code_for(e.code()), e.what());
  }
  report.t_write = seconds_since(t0);
  return finish(kExitOk, "");
}

int cmd_spectrum(const SpectrumOptions& opt, std::ostream& log) {
  try {
    const FilterShape shape = parse_filter_spec(opt.filter);
    DiscreteFilter filter = sample_filter(shape, opt.length, opt.n);
    if (opt.self_convolve) filter = self_convolve(filter);
    const auto ev = filter_eigenvalues(filter);
    const auto damping = damping_factors(ev, opt.iterations);
    std::vector<bool> mask(ev.size(), false);
    if (opt.gamma) mask = threshold_mask(ev, *opt.gamma, opt.iterations);

    std::string text = "bin,lambda,damping,mask\n";
    for (std::size_t j = 0; j < ev.size(); ++j) {
      text += std::to_string(j) + "," + format_double(ev[j]) + "," + format_double(damping[j]) + "," +
              (mask[j] ? "1" : "0") + "\n";
    }
    write_text(opt.output, text);
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& log) {
  if (opt.sizes.empty()) {
    log << "error: no sizes given\n";
    return kExitConfig;
  }
  for (std::size_t n : opt.sizes) {
    if (n < 5) {
      log << "error: bench size " << n << " is below the minimum of 5\n";
      return kExitConfig;
    }
  }
  if (opt.iterations < 1) {
    log << "error: iterations must be at least 1\n";
    return kExitConfig;
  }
  try {
    std::string text = "n,N,t_iterative,t_direct,speedup,mask_length,max_abs_diff\n";
    for (std::size_t n : opt.sizes) {
      const BenchRow row = bench_one(n, opt.seed, opt.iterations);
      const std::string line = std::to_string(row.n) + "," + std::to_string(row.iterations) + "," +
                               format_double(row.t_iterative) + "," + format_double(row.t_direct) + "," +
                               format_double(row.speedup) + "," + std::to_string(row.mask_length) + "," +
                               format_double(row.max_abs_diff) + "\n";
      out << line << std::flush;
      text += line;
    }
    write_text(opt.output, text);
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& log) {
  CLI::App app{"Iterative filtering signal decomposition"};
  app.name("fif");
  app.require_subcommand(1);

  DecomposeOptions dec;
  double gamma_value = 0.0;
  std::string cache_path;
  auto* d = app.add_subcommand("decompose", "Split a signal into IMFs and a trend");
  d->add_option("--input", dec.input, "Signal file")->required();
  d->add_option("--output-dir", dec.output_dir, "Directory for imf_*.csv, trend.csv, report.json")->required();
  d->add_option("--format", dec.format)->check(CLI::IsMember({"csv", "f64le"}));
  d->add_option("--filter", dec.filter, "triangular | triangular-self-convolved | tabulated:<path>");
  d->add_option("--mask-strategy", dec.mask_strategy)->check(CLI::IsMember({"extrema", "spectral"}));
  d->add_option("--nu", dec.nu);
  d->add_option("--delta", dec.delta);
  d->add_option("--max-inner-iter", dec.max_inner_iter);
  d->add_option("--max-imfs", dec.max_imfs);
  d->add_option("--eta", dec.eta);
  d->add_option("--mode", dec.mode)->check(CLI::IsMember({"direct", "iterative"}));
  auto* d_gamma = d->add_option("--gamma", gamma_value, "Pass bins whose damping stays above 1-gamma");
  auto* d_cache = d->add_option("--eigen-cache", cache_path, "Eigenvalue cache file, loaded and updated");

  SpectrumOptions spec;
  double spec_gamma = 0.0;
  auto* s = app.add_subcommand("spectrum", "Eigenvalues and damping factors of a filter");
  s->add_option("--filter", spec.filter);
  s->add_option("--length", spec.length, "Half support l")->required();
  s->add_option("--n", spec.n, "Period")->required();
  s->add_option("--iterations", spec.iterations);
  auto* s_gamma = s->add_option("--gamma", spec_gamma);
  s->add_flag("--self-convolve", spec.self_convolve);
  s->add_option("--output", spec.output)->required();

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time iterative against direct inner loops");
  b->add_option("--sizes", bench.sizes)->delimiter(',')->required();
  b->add_option("--seed", bench.seed);
  b->add_option("--iterations", bench.iterations);
  b->add_option("--output", bench.output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    log << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (d->parsed()) {
    if (*d_gamma) dec.gamma = gamma_value;
    if (*d_cache) dec.eigen_cache = cache_path;
    return cmd_decompose(dec, log);
  }
  if (s->parsed()) {
    if (*s_gamma) spec.gamma = spec_gamma;
    return cmd_spectrum(spec, log);
  }
  return cmd_bench(bench, out, log);
}

}  // namespace fif
