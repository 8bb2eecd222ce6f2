/*
Copyright 2026 The fasthaar Authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "fasthaar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>

#include "fasthaar/error.hpp"
#include "fasthaar/haar.hpp"
#include "fasthaar/image2d.hpp"
#include "fasthaar/io.hpp"
#include "fasthaar/metrics.hpp"
#include "fasthaar/multilevel.hpp"
#include "fasthaar/plot.hpp"
#include "fasthaar/random.hpp"

namespace fasthaar::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Pad { kNone, kZero };

constexpr double kRoundtripTolerance = 1e-9;
constexpr double kCompareThresholdDb = -90.0;
// Gain applied to the 2-D difference before it is centred on mid-gray.
constexpr double kDifferenceDisplayGain = 1e12;

struct Options {
  Mode mode = Mode::kFast;
  std::size_t levels = 1;
  Pad pad = Pad::kNone;
  std::string in;
  std::string out;
  std::string plot;
  std::size_t n = 1024;
  std::uint64_t seed = 42;
};

std::string fmt(double v) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, end);
}

std::string fmt_db(double v) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, end);
}

// Appends one zero to odd-length input when padding is enabled.
std::pair<Signal, bool> apply_pad(Signal x, Pad pad) {
  if (pad == Pad::kNone && x.size() % 2 != 0) {
    throw Error(Errc::kOddLength, "input has odd length " +
                                      std::to_string(x.size()) +
                                      " (use --pad zero)");
  }
  if (pad == Pad::kZero && x.size() % 2 != 0) {
    auto samples = std::move(x).release();
    samples.push_back(0.0);
    return {Signal(std::move(samples)), true};
  }
  return {std::move(x), false};
}

GrayImage pad_image(const GrayImage& img, Pad pad) {
  if (pad != Pad::kZero ||
      (img.width() % 2 == 0 && img.height() % 2 == 0)) {
    return img;
  }
  const std::size_t w = img.width() + img.width() % 2;
  const std::size_t h = img.height() + img.height() % 2;
  std::vector<double> pixels(w * h, 0.0);
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) pixels[y * w + x] = img.at(x, y);
  }
  return GrayImage(w, h, std::move(pixels));
}

Signal input_signal(const Options& opt) {
  if (!opt.in.empty()) return io::read_signal_csv(opt.in);
  return Signal(random_samples(opt.n, opt.seed));
}

Signal drop_tail(const Signal& x, std::size_t length) {
  const auto& s = x.samples();
  return Signal(std::vector<double>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(std::min(length, s.size()))));
}

double max_abs_diff(const Signal& a, const Signal& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

fs::path detail_file(std::size_t levels, std::size_t j) {
  return levels == 1 ? fs::path("detail.csv")
                     : fs::path("detail_level" + std::to_string(j) + ".csv");
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  const auto [x, padded] = apply_pad(io::read_signal_csv(opt.in), opt.pad);
  const std::size_t input_length = padded ? x.size() - 1 : x.size();
  const auto tree = decompose(x, opt.levels, opt.mode);

  const fs::path dir(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  io::write_signal_csv(tree.final_approx, dir / "approx.csv");
  for (std::size_t j = 0; j < tree.levels; ++j) {
    io::write_signal_csv(tree.details[j], dir / detail_file(tree.levels, j));
  }
  const json meta = {{"mode", std::string(mode_name(opt.mode))},
                     {"levels", tree.levels},
                     {"original_length", input_length},
                     {"transformed_length", tree.original_length},
                     {"padded", padded}};
  io::write_file(dir / "meta.json", meta.dump(2) + "\n");

  out << "levels=" << tree.levels << " length=" << tree.original_length
      << " padded=" << (padded ? "true" : "false") << " out=" << dir.string()
      << "\n";
  return kExitOk;
}

int cmd_synthesize(const Options& opt, std::ostream& out) {
  const fs::path dir(opt.in);
  std::size_t levels = opt.levels;
  std::optional<std::size_t> keep;
  if (fs::exists(dir / "meta.json")) {
    json meta;
    try {
      meta = json::parse(io::read_file(dir / "meta.json"));
      levels = meta.at("levels").get<std::size_t>();
      if (meta.value("padded", false)) {
        keep = meta.at("original_length").get<std::size_t>();
      }
    } catch (const json::exception& e) {
      throw Error(Errc::kParseError, "meta.json: " + std::string(e.what()));
    }
  }

  if (levels < 1 || levels >= 63) {
    throw Error(Errc::kInvalidLevels, "levels must be in [1, 62]");
  }
  DecompositionTree tree;
  tree.levels = levels;
  tree.final_approx = io::read_signal_csv(dir / "approx.csv");
  for (std::size_t j = 0; j < levels; ++j) {
    tree.details.push_back(io::read_signal_csv(dir / detail_file(levels, j)));
  }
  tree.original_length = tree.final_approx.size() << levels;

  Signal x = reconstruct(tree, opt.mode);
  if (keep) x = drop_tail(x, *keep);
  io::write_signal_csv(x, opt.out);
  out << "length=" << x.size() << " out=" << opt.out << "\n";
  return kExitOk;
}

int cmd_roundtrip(const Options& opt, std::ostream& out) {
  const auto [x, padded] = apply_pad(io::read_signal_csv(opt.in), opt.pad);
  const auto tree = decompose(x, opt.levels, opt.mode);
  const auto y = reconstruct(tree, opt.mode);
  double max_err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    max_err = std::max(max_err, std::abs(x[i] - y[i]));
  }
  const bool ok = max_err <= kRoundtripTolerance;
  out << "max_abs_error=" << fmt(max_err) << "\n";
  out << "status=" << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitOk : kExitDomain;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  const auto [x, padded] = apply_pad(input_signal(opt), opt.pad);
  const auto oracle = direct_analysis(x);
  const auto candidate = fast_analysis(x);
  const auto approx = pointwise_error_db(candidate.approx, oracle.approx);
  const auto detail = pointwise_error_db(candidate.detail, oracle.detail);

  if (!opt.out.empty()) {
    std::string csv = "band,index,direct,fast,abs_diff,error_db\n";
    auto rows = [&](const char* band, const Signal& ref, const Signal& cand,
                    const ErrorReport& report) {
      for (std::size_t k = 0; k < ref.size(); ++k) {
        csv += std::string(band) + "," + std::to_string(k) + "," + fmt(ref[k]) +
               "," + fmt(cand[k]) + "," + fmt(std::abs(cand[k] - ref[k])) +
               "," + fmt(report.pointwise_db[k]) + "\n";
      }
    };
    rows("approx", oracle.approx, candidate.approx, approx);
    rows("detail", oracle.detail, candidate.detail, detail);
    io::write_file(opt.out, csv);
  }
  if (!opt.plot.empty()) {
    plot::emit_svg_plot({{"approximation", approx.pointwise_db},
                         {"detail", detail.pointwise_db}},
                        opt.plot,
                        {"fast vs direct analysis error", "coefficient index",
                         "error (dB)"});
  }

  const bool ok = approx.max_db <= kCompareThresholdDb &&
                  detail.max_db <= kCompareThresholdDb;
  out << "length=" << x.size() << "\n";
  out << "approx_max_db=" << fmt_db(approx.max_db) << "\n";
  out << "detail_max_db=" << fmt_db(detail.max_db) << "\n";
  out << "approx_max_abs_diff="
      << fmt(max_abs_diff(candidate.approx, oracle.approx)) << "\n";
  out << "detail_max_abs_diff="
      << fmt(max_abs_diff(candidate.detail, oracle.detail)) << "\n";
  out << "threshold_db=" << fmt_db(kCompareThresholdDb) << "\n";
  out << "status=" << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitOk : kExitDomain;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const auto cmp = complexity_report(opt.n, opt.levels, {true, 11}, opt.seed);
  out << std::left << std::setw(8) << "mode" << std::right << std::setw(14)
      << "mul" << std::setw(14) << "add" << std::setw(14) << "total"
      << std::setw(14) << "positions" << std::setw(16) << "median_s" << "\n";
  auto row = [&](const char* name, const OpReport& r, double secs) {
    out << std::left << std::setw(8) << name << std::right << std::setw(14)
        << r.mul_count << std::setw(14) << r.add_count << std::setw(14)
        << r.total << std::setw(14) << r.path_evaluations << std::setw(16)
        << std::scientific << std::setprecision(3) << secs
        << std::defaultfloat << "\n";
  };
  row("direct", cmp.baseline, cmp.wall_clock_baseline.value_or(0.0));
  row("fast", cmp.fast, cmp.wall_clock_fast.value_or(0.0));
  out << "n=" << opt.n << " levels=" << opt.levels << "\n";
  out << "mul_ratio=" << fmt(cmp.mul_ratio) << "\n";
  out << "total_ratio=" << fmt(cmp.total_ratio) << "\n";
  return kExitOk;
}

int cmd_image(const Options& opt, std::ostream& out) {
  const GrayImage img = pad_image(
      opt.in.empty() ? synthetic_image(64, 64, opt.seed) : io::read_pgm(opt.in),
      opt.pad);
  const auto direct = analyze2d(img, Mode::kDirect);
  const auto fast = analyze2d(img, Mode::kFast);
  const auto diff = difference_image(direct.ll, fast.ll);

  const fs::path dir(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  io::write_pgm(lowpass_display(direct), dir / "ll_direct.pgm");
  io::write_pgm(lowpass_display(fast), dir / "ll_fast.pgm");

  std::string csv;
  double max_abs = 0.0;
  std::vector<double> display(diff.pixels().size());
  for (std::size_t y = 0; y < diff.height(); ++y) {
    for (std::size_t x = 0; x < diff.width(); ++x) {
      const double d = diff.at(x, y);
      max_abs = std::max(max_abs, std::abs(d));
      display[y * diff.width() + x] = 128.0 + kDifferenceDisplayGain * d;
      if (x > 0) csv.push_back(',');
      csv += fmt(d);
    }
    csv.push_back('\n');
  }
  io::write_file(dir / "ll_difference.csv", csv);
  io::write_pgm(GrayImage(diff.width(), diff.height(), std::move(display)),
                dir / "ll_difference_display.pgm");

  out << "width=" << img.width() << " height=" << img.height() << "\n";
  out << "ll_max_abs_difference=" << fmt(max_abs) << "\n";
  out << "difference_display_gain=" << fmt(kDifferenceDisplayGain) << "\n";
  return kExitOk;
}

void add_mode(CLI::App* cmd, Options& opt) {
  cmd->add_option("--mode", opt.mode, "direct | fast")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Mode>{{"direct", Mode::kDirect},
                                      {"fast", Mode::kFast}}));
}

void add_levels(CLI::App* cmd, Options& opt) {
  cmd->add_option("--levels", opt.levels, "decomposition levels");
}

void add_pad(CLI::App* cmd, Options& opt) {
  cmd->add_option("--pad", opt.pad, "none | zero: pad odd-length input")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Pad>{{"none", Pad::kNone}, {"zero", Pad::kZero}}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Haar wavelet transforms: direct filter bank vs polyphase fast form",
               "fasthaar"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "write approximation/detail CSVs");
  add_mode(analyze, opt);
  add_levels(analyze, opt);
  add_pad(analyze, opt);
  analyze->add_option("--in", opt.in, "input signal CSV")->required();
  analyze->add_option("--out", opt.out, "output directory")->required();

  auto* synth = app.add_subcommand("synthesize", "rebuild a signal from bands");
  add_mode(synth, opt);
  add_levels(synth, opt);
  synth->add_option("--in", opt.in, "directory written by analyze")->required();
  synth->add_option("--out", opt.out, "output signal CSV")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "analyze + synthesize, report error");
  add_mode(roundtrip, opt);
  add_levels(roundtrip, opt);
  add_pad(roundtrip, opt);
  roundtrip->add_option("--in", opt.in, "input signal CSV")->required();

  auto* compare = app.add_subcommand("compare", "fast vs direct error in dB");
  add_pad(compare, opt);
  compare->add_option("--in", opt.in, "input signal CSV (default: random)");
  compare->add_option("--out", opt.out, "report CSV");
  compare->add_option("--plot", opt.plot, "SVG plot of the dB curves");
  compare->add_option("--n", opt.n, "random signal length");
  compare->add_option("--seed", opt.seed, "random seed");

  auto* bench = app.add_subcommand("bench", "operation counts and timings");
  add_levels(bench, opt);
  bench->add_option("--n", opt.n, "signal length");
  bench->add_option("--seed", opt.seed, "random seed");

  auto* image = app.add_subcommand("image", "2-D lowpass comparison");
  add_pad(image, opt);
  image->add_option("--in", opt.in, "input PGM (default: synthetic 64x64)");
  image->add_option("--out", opt.out, "output directory")->required();
  image->add_option("--seed", opt.seed, "seed for the synthetic image");

  auto* version = app.add_subcommand("version", "print version");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fasthaar: error: Usage: " << e.what() << "\n";
    return kExitIo;
  }

  try {
    if (*analyze) return cmd_analyze(opt, out);
    if (*synth) return cmd_synthesize(opt, out);
    if (*roundtrip) return cmd_roundtrip(opt, out);
    if (*compare) return cmd_compare(opt, out);
    if (*bench) return cmd_bench(opt, out);
    if (*image) return cmd_image(opt, out);
    if (*version) {
      out << "fasthaar " << kVersion << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "fasthaar: error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return is_domain_error(e.code()) ? kExitDomain : kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "fasthaar: error: IoError: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}

}  // namespace fasthaar::cli
