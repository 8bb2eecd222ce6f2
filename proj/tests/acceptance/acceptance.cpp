// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Criterion 8 (timing) is informative only.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fasthaar/cli.hpp"
#include "fasthaar/error.hpp"
#include "fasthaar/haar.hpp"
#include "fasthaar/image2d.hpp"
#include "fasthaar/io.hpp"
#include "fasthaar/metrics.hpp"
#include "fasthaar/multilevel.hpp"
#include "fasthaar/random.hpp"
#include "oracles.hpp"

using namespace fasthaar;

namespace {

constexpr std::size_t kCorpusSize = 1000;
constexpr std::uint64_t kCorpusSeed = 20260415;
constexpr double kEquivalenceTol = 1e-12;
constexpr double kApproxDbLimit = -90.0;
constexpr double kDetailDbLimit = -160.0;
constexpr double kImageTol = 1e-10;
constexpr double kEnergyTol = 1e-9;
constexpr double kRuntimeLimitSeconds = 10.0;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

// Seeded corpus: even lengths in [2, 4096], amplitudes from 1e-3 to 1e3.
std::vector<Signal> make_corpus() {
  Xoshiro256 rng(kCorpusSeed);
  std::vector<Signal> corpus;
  corpus.reserve(kCorpusSize);
  for (std::size_t i = 0; i < kCorpusSize; ++i) {
    const std::size_t n = 2 * (1 + rng.below(2048));
    const double amplitude = std::pow(10.0, 6.0 * rng.uniform() - 3.0);
    std::vector<double> x(n);
    for (auto& v : x) v = amplitude * rng.symmetric();
    corpus.emplace_back(std::move(x));
  }
  return corpus;
}

double scale_of(const Signal& x) {
  return std::max(1.0, oracle::max_abs(x.samples()));
}

// Largest J with 2^J dividing n.
std::size_t max_levels(std::size_t n) {
  return static_cast<std::size_t>(std::countr_zero(n));
}

double max_abs_diff(const GrayImage& a, const GrayImage& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    m = std::max(m, std::abs(a.pixels()[i] - b.pixels()[i]));
  }
  return m;
}

Outcome oracle_equivalence(const std::vector<Signal>& corpus) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& x : corpus) {
    const auto d = direct_analysis(x);
    const auto f = fast_analysis(x);
    const double err = std::max(oracle::max_abs_diff(d.approx, f.approx),
                                oracle::max_abs_diff(d.detail, f.detail)) /
                       scale_of(x);
    worst = std::max(worst, err);
    o.require(err <= kEquivalenceTol, "length " + std::to_string(x.size()));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < kRuntimeLimitSeconds, "runtime");
  o.note << "signals=" << corpus.size() << " worst_scaled_diff=" << worst
         << " (tol " << kEquivalenceTol << ") runtime_s=" << secs;
  return o;
}

Outcome error_rate(const std::vector<Signal>& corpus) {
  Outcome o;
  double worst_approx = kErrorFloorDb;
  double worst_detail = kErrorFloorDb;
  for (const auto& x : corpus) {
    const auto r = compare_transforms(x);
    worst_approx = std::max(worst_approx, r.approx.max_db);
    worst_detail = std::max(worst_detail, r.detail.max_db);
    o.require(r.approx.max_db <= kApproxDbLimit, "approx dB");
    o.require(r.detail.max_db <= kDetailDbLimit, "detail dB");
  }
  o.note << "worst approx_max_db=" << worst_approx << " (limit " << kApproxDbLimit
         << ") worst detail_max_db=" << worst_detail << " (limit "
         << kDetailDbLimit << ")";
  return o;
}

Outcome perfect_reconstruction(const std::vector<Signal>& corpus) {
  Outcome o;
  double worst = 0.0;
  for (const auto& x : corpus) {
    for (Mode a : {Mode::kDirect, Mode::kFast}) {
      const auto bands = analyze(x, a);
      for (Mode s : {Mode::kDirect, Mode::kFast}) {
        const double err = oracle::max_abs_diff(synthesize(bands, s), x) / scale_of(x);
        worst = std::max(worst, err);
        o.require(err <= kEquivalenceTol, "single-level " +
                                              std::string(mode_name(a)) + "/" +
                                              std::string(mode_name(s)));
      }
    }
  }
  // Multi-level: every J up to log2(N) on power-of-two lengths, and the
  // deepest admissible J on each corpus signal.
  double worst_ml = 0.0;
  std::size_t trees = 0;
  auto check_tree = [&](const Signal& x, std::size_t levels) {
    for (Mode m : {Mode::kDirect, Mode::kFast}) {
      const auto back = reconstruct(decompose(x, levels, m), m);
      const double err = oracle::max_abs_diff(back, x) / scale_of(x);
      worst_ml = std::max(worst_ml, err / static_cast<double>(levels));
      o.require(err <= static_cast<double>(levels) * kEquivalenceTol,
                "multilevel N=" + std::to_string(x.size()) +
                    " J=" + std::to_string(levels));
      ++trees;
    }
  };
  for (std::size_t log_n = 1; log_n <= 12; ++log_n) {
    const Signal x(random_samples(std::size_t{1} << log_n, 100 + log_n, 50.0));
    for (std::size_t j = 1; j <= log_n; ++j) check_tree(x, j);
  }
  for (const auto& x : corpus) check_tree(x, max_levels(x.size()));

  o.note << "worst_scaled_err=" << worst << " multilevel_trees=" << trees
         << " worst_err_per_level=" << worst_ml;
  return o;
}

Outcome complexity_claims() {
  Outcome o;
  std::ostringstream table;
  for (std::size_t n : {2, 8, 64, 1024}) {
    for (std::size_t levels : {1, 2, 3}) {
      if (n % (std::size_t{1} << levels) != 0) {
        bool rejected = false;
        try {
          complexity_report(n, levels);
        } catch (const Error& e) {
          rejected = e.code() == Errc::kInsufficientLength;
        }
        o.require(rejected, "N=" + std::to_string(n) + " levels=" +
                                std::to_string(levels) + " must be rejected");
        continue;
      }
      const auto c = complexity_report(n, levels);
      std::uint64_t s = 0;  // samples entering analysis, summed over levels
      for (std::size_t j = 0; j < levels; ++j) s += n >> j;

      const std::string tag = "N=" + std::to_string(n) + " J=" + std::to_string(levels);
      o.require(c.baseline.mul_count == 4 * s, tag + " direct mul");
      o.require(c.baseline.add_count == 2 * s, tag + " direct add");
      o.require(c.fast.mul_count == s, tag + " fast mul");
      o.require(c.fast.add_count == s, tag + " fast add");
      o.require(c.mul_ratio == 0.25, tag + " mul_ratio");
      o.require(3 * c.fast.total == c.baseline.total, tag + " total ratio 1/3");
      // N positions per path at full rate, N/2 after moving the decimator.
      o.require(c.baseline.path_evaluations == 2 * s, tag + " direct positions");
      o.require(c.fast.path_evaluations == s, tag + " fast positions");
      o.require(2 * c.fast.path_evaluations == c.baseline.path_evaluations,
                tag + " positions halve");
      table << tag << ":" << c.fast.mul_count << "/" << c.baseline.mul_count << " ";
    }
  }
  o.note << "mul fast/direct " << table.str() << "mul_ratio=0.25 total_ratio=1/3";
  return o;
}

Outcome image_experiment() {
  Outcome o;
  const auto img = synthetic_image(64, 64, 42);
  const auto direct = analyze2d(img, Mode::kDirect);
  const auto fast = analyze2d(img, Mode::kFast);
  const auto diff = difference_image(direct.ll, fast.ll);
  double ll_diff = 0.0;
  for (double p : diff.pixels()) ll_diff = std::max(ll_diff, std::abs(p));
  o.require(ll_diff <= kImageTol, "LL difference");

  double rt = 0.0;
  for (Mode m : {Mode::kDirect, Mode::kFast}) {
    rt = std::max(rt, max_abs_diff(synthesize2d(analyze2d(img, m), m), img));
  }
  o.require(rt <= kImageTol, "2-D roundtrip");

  // A constant image scales by exactly 2 up to double rounding of 1/sqrt(2)
  // (the closest result is 199.99999999999994 for 100): allow 2 ulp.
  double worst_ulps = 0.0;
  for (double value : {100.0, 37.5, 255.0, 1.0}) {
    const GrayImage flat(8, 8, value);
    for (Mode m : {Mode::kDirect, Mode::kFast}) {
      const auto q = analyze2d(flat, m);
      for (double p : q.ll.pixels()) {
        const double ulp = std::nextafter(2 * value, 1e300) - 2 * value;
        worst_ulps = std::max(worst_ulps, std::abs(p - 2 * value) / ulp);
      }
      for (const auto* band : {&q.lh, &q.hl, &q.hh}) {
        for (double p : band->pixels()) o.require(p == 0.0, "high band not zero");
      }
    }
  }
  o.require(worst_ulps <= 2.0, "constant LL scaling");
  o.note << "ll_max_abs_diff=" << ll_diff << " roundtrip_err=" << rt
         << " constant_ll_scale_err_ulps=" << worst_ulps
         << " high_bands=exact_zero";
  return o;
}

Outcome energy_conservation(const std::vector<Signal>& corpus) {
  Outcome o;
  double worst = 0.0;
  for (const auto& x : corpus) {
    const double e = oracle::energy(x);
    for (Mode m : {Mode::kDirect, Mode::kFast}) {
      const auto b = analyze(x, m);
      const double rel =
          std::abs(oracle::energy(b.approx) + oracle::energy(b.detail) - e) / e;
      worst = std::max(worst, rel);
      o.require(rel <= kEnergyTol, "single-level energy");

      const auto tree = decompose(x, max_levels(x.size()), m);
      double et = oracle::energy(tree.final_approx);
      for (const auto& d : tree.details) et += oracle::energy(d);
      const double rel_ml = std::abs(et - e) / e;
      worst = std::max(worst, rel_ml);
      o.require(rel_ml <= kEnergyTol, "multilevel energy");
    }
  }
  o.note << "worst_relative_energy_err=" << worst << " (tol " << kEnergyTol << ")";
  return o;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

Outcome cli_golden() {
  Outcome o;
  oracle::TempDir dir("acceptance");
  const std::filesystem::path data = FASTHAAR_TEST_DATA_DIR;

  // CSV bitwise roundtrip over arbitrary finite bit patterns.
  Xoshiro256 rng(7);
  std::vector<double> values;
  while (values.size() < 1000) {
    double v = 0.0;
    const std::uint64_t bits = rng.next();
    std::memcpy(&v, &bits, sizeof v);
    if (std::isfinite(v)) values.push_back(v);
  }
  io::write_signal_csv(Signal(values), dir / "bits.csv");
  const auto back = io::read_signal_csv(dir / "bits.csv");
  bool bitwise = back.size() == values.size();
  for (std::size_t i = 0; bitwise && i < values.size(); ++i) {
    bitwise = std::bit_cast<std::uint64_t>(back[i]) == std::bit_cast<std::uint64_t>(values[i]);
  }
  o.require(bitwise, "CSV bitwise roundtrip");

  // PGM pixel-exact roundtrip, P2 and P5.
  std::vector<double> px(37 * 23);
  for (auto& p : px) p = static_cast<double>(rng.below(256));
  const GrayImage img(37, 23, px);
  io::write_pgm(img, dir / "a.pgm");
  io::write_pgm(io::read_pgm(dir / "a.pgm"), dir / "b.pgm");
  o.require(io::read_pgm(dir / "a.pgm") == img, "PGM roundtrip");
  o.require(io::read_file(dir / "a.pgm") == io::read_file(dir / "b.pgm"),
            "PGM rewrite identical");
  io::write_file(dir / "p2.pgm", "P2\n2 2\n255\n0 64 128 255\n");
  o.require(io::read_pgm(dir / "p2.pgm").pixels() == std::vector<double>{0, 64, 128, 255},
            "P2 read");

  // Golden analyze output.
  auto r = cli_run({"analyze", "--in", (data / "ramp8.csv").string(), "--out",
                    (dir / "ramp").string(), "--mode", "fast"});
  o.require(r.code == 0, "analyze exit 0");
  for (const char* f : {"approx.csv", "detail.csv"}) {
    o.require(io::read_file(dir / "ramp" / f) ==
                  io::read_file(data / "golden/ramp8_fast" / f),
              std::string("golden ") + f);
  }

  r = cli_run({"compare", "--n", "1024", "--seed", "42", "--plot",
               (dir / "a.svg").string(), "--out", (dir / "report.csv").string()});
  o.require(r.code == 0, "compare exit 0");
  o.require(r.out.find("approx_max_db=") != std::string::npos &&
                r.out.find("detail_max_db=") != std::string::npos &&
                r.out.find("status=pass") != std::string::npos,
            "compare report fields");
  cli_run({"compare", "--n", "1024", "--seed", "42", "--plot", (dir / "b.svg").string()});
  o.require(io::read_file(dir / "a.svg") == io::read_file(dir / "b.svg"),
            "SVG byte-deterministic");

  r = cli_run({"bench", "--n", "1024", "--levels", "1"});
  o.require(r.code == 0 && r.out.find("mul_ratio=0.25\n") != std::string::npos,
            "bench mul_ratio");

  r = cli_run({"roundtrip", "--in", (data / "ramp8.csv").string()});
  o.require(r.code == 0 && r.out.find("status=pass") != std::string::npos,
            "roundtrip exit 0");
  o.require(cli_run({"roundtrip", "--in", (data / "odd5.csv").string()}).code == 1,
            "odd length exit 1");
  o.require(cli_run({"roundtrip", "--in", (data / "odd5.csv").string(), "--pad",
                     "zero"}).code == 0,
            "pad=zero exit 0");
  o.require(cli_run({"roundtrip", "--in", (dir / "missing.csv").string()}).code == 2,
            "missing file exit 2");
  o.require(cli_run({"roundtrip", "--bogus"}).code == 2, "unknown flag exit 2");

  o.note << "csv/pgm roundtrips, golden analyze, compare/bench/roundtrip exit codes, svg determinism";
  return o;
}

void timing_report() {
  for (std::size_t log_n : {16, 18}) {
    const std::size_t n = std::size_t{1} << log_n;
    const auto c = complexity_report(n, 1, {true, 11});
    const bool faster = *c.wall_clock_fast <= *c.wall_clock_baseline;
    std::printf("[INFO] AC8 wall-clock N=2^%zu: direct median %.3e s, fast median %.3e s, "
                "speedup %.2fx, fast<=direct: %s\n",
                log_n, *c.wall_clock_baseline, *c.wall_clock_fast,
                *c.wall_clock_baseline / *c.wall_clock_fast, faster ? "yes" : "no");
  }
}

}  // namespace

int main() {
  const auto corpus = make_corpus();
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {"AC2", "error-rate reproduction", [&] { return error_rate(corpus); }},
      {"AC3", "perfect reconstruction", [&] { return perfect_reconstruction(corpus); }},
      {"AC4", "complexity claims", complexity_claims},
      {"AC5", "image experiment", image_experiment},
      {"AC6", "energy conservation", [&] { return energy_conservation(corpus); }},
      {"AC7", "CLI and golden files", cli_golden},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.note.str().c_str());
    failures += o.pass ? 0 : 1;
  }
  timing_report();
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
