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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "fasthaar/cli.hpp"
#include "fasthaar/error.hpp"
#include "fasthaar/haar.hpp"
#include "fasthaar/image2d.hpp"
#include "fasthaar/io.hpp"
#include "fasthaar/metrics.hpp"
#include "fasthaar/multilevel.hpp"

namespace py = pybind11;
using namespace fasthaar;

namespace {

using Array1 = py::array_t<double, py::array::c_style | py::array::forcecast>;

Signal to_signal(const Array1& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-D array");
  return Signal(std::vector<double>(a.data(), a.data() + a.size()));
}

py::array_t<double> to_array(const Signal& x) {
  py::array_t<double> out(static_cast<py::ssize_t>(x.size()));
  std::copy(x.begin(), x.end(), out.mutable_data());
  return out;
}

GrayImage to_image(const Array1& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
  const auto h = static_cast<std::size_t>(a.shape(0));
  const auto w = static_cast<std::size_t>(a.shape(1));
  return GrayImage(w, h, std::vector<double>(a.data(), a.data() + a.size()));
}

py::array_t<double> to_array(const GrayImage& img) {
  py::array_t<double> out({static_cast<py::ssize_t>(img.height()),
                           static_cast<py::ssize_t>(img.width())});
  std::copy(img.pixels().begin(), img.pixels().end(), out.mutable_data());
  return out;
}

py::tuple to_tuple(const SubbandPair& bands) {
  return py::make_tuple(to_array(bands.approx), to_array(bands.detail));
}

SubbandPair to_bands(const Array1& approx, const Array1& detail) {
  return {to_signal(approx), to_signal(detail)};
}

py::dict to_dict(const ErrorReport& r) {
  py::dict d;
  d["pointwise_db"] = r.pointwise_db;
  d["max_db"] = r.max_db;
  d["reference_peak"] = r.reference_peak;
  d["floor_db"] = r.floor_db;
  return d;
}

py::dict to_dict(const OpReport& r) {
  py::dict d;
  d["mul_count"] = r.mul_count;
  d["add_count"] = r.add_count;
  d["total"] = r.total;
  d["path_evaluations"] = r.path_evaluations;
  d["label"] = r.label;
  return d;
}

py::dict to_dict(const QuadSubbands& q) {
  py::dict d;
  d["ll"] = to_array(q.ll);
  d["lh"] = to_array(q.lh);
  d["hl"] = to_array(q.hl);
  d["hh"] = to_array(q.hh);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Haar wavelet filter banks: direct convolution and polyphase fast form";

  static py::exception<Error> error_type(m, "FasthaarError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(errc_name(e.code())) + ": " + e.what();
      PyErr_SetString(error_type.ptr(), msg.c_str());
    }
  });

  py::enum_<Mode>(m, "Mode")
      .value("direct", Mode::kDirect)
      .value("fast", Mode::kFast);

  py::class_<ArithmeticSink>(m, "ArithmeticSink")
      .def(py::init<>())
      .def_readonly("mul_count", &ArithmeticSink::mul_count)
      .def_readonly("add_count", &ArithmeticSink::add_count)
      .def_readonly("path_evaluations", &ArithmeticSink::path_evaluations)
      .def("__repr__", [](const ArithmeticSink& s) {
        std::ostringstream os;
        os << "ArithmeticSink(mul_count=" << s.mul_count
           << ", add_count=" << s.add_count << ")";
        return os.str();
      });

  m.attr("INV_SQRT2") = kInvSqrt2;

  m.def("split_polyphase", [](const Array1& x) {
    const auto [even, odd] = split_polyphase(to_signal(x));
    return py::make_tuple(to_array(even), to_array(odd));
  });
  m.def("merge_polyphase", [](const Array1& even, const Array1& odd) {
    return to_array(merge_polyphase(to_signal(even), to_signal(odd)));
  });

  m.def("direct_analysis",
        [](const Array1& x, ArithmeticSink* sink) {
          return to_tuple(direct_analysis(to_signal(x), sink));
        },
        py::arg("x"), py::arg("sink") = nullptr);
  m.def("fast_analysis",
        [](const Array1& x, ArithmeticSink* sink) {
          return to_tuple(fast_analysis(to_signal(x), sink));
        },
        py::arg("x"), py::arg("sink") = nullptr);
  m.def("direct_synthesis",
        [](const Array1& a, const Array1& d, ArithmeticSink* sink) {
          return to_array(direct_synthesis(to_bands(a, d), sink));
        },
        py::arg("approx"), py::arg("detail"), py::arg("sink") = nullptr);
  m.def("fast_synthesis",
        [](const Array1& a, const Array1& d, ArithmeticSink* sink) {
          return to_array(fast_synthesis(to_bands(a, d), sink));
        },
        py::arg("approx"), py::arg("detail"), py::arg("sink") = nullptr);

  m.def("decompose",
        [](const Array1& x, std::size_t levels, Mode mode, ArithmeticSink* sink) {
          const auto tree = decompose(to_signal(x), levels, mode, sink);
          py::list details;
          for (const auto& d : tree.details) details.append(to_array(d));
          return py::make_tuple(details, to_array(tree.final_approx));
        },
        py::arg("x"), py::arg("levels"), py::arg("mode") = Mode::kFast,
        py::arg("sink") = nullptr,
        "Returns (details finest-first, final approximation).");
  m.def("reconstruct",
        [](const std::vector<Array1>& details, const Array1& final_approx,
           Mode mode, ArithmeticSink* sink) {
          DecompositionTree tree;
          tree.levels = details.size();
          for (const auto& d : details) tree.details.push_back(to_signal(d));
          tree.final_approx = to_signal(final_approx);
          tree.original_length = tree.final_approx.size() << std::min<std::size_t>(tree.levels, 62);
          return to_array(reconstruct(tree, mode, sink));
        },
        py::arg("details"), py::arg("final_approx"),
        py::arg("mode") = Mode::kFast, py::arg("sink") = nullptr);

  m.def("analyze2d",
        [](const Array1& img, Mode mode, ArithmeticSink* sink) {
          return to_dict(analyze2d(to_image(img), mode, sink));
        },
        py::arg("image"), py::arg("mode") = Mode::kFast,
        py::arg("sink") = nullptr);
  m.def("synthesize2d",
        [](const Array1& ll, const Array1& lh, const Array1& hl,
           const Array1& hh, Mode mode) {
          return to_array(synthesize2d(
              {to_image(ll), to_image(lh), to_image(hl), to_image(hh)}, mode));
        },
        py::arg("ll"), py::arg("lh"), py::arg("hl"), py::arg("hh"),
        py::arg("mode") = Mode::kFast);
  m.def("lowpass_display", [](const Array1& ll) {
    const GrayImage band = to_image(ll);
    const GrayImage zeros(band.width(), band.height(), 0.0);
    return to_array(lowpass_display({band, zeros, zeros, zeros}));
  });
  m.def("synthetic_image", [](std::size_t w, std::size_t h, std::uint64_t seed) {
    return to_array(synthetic_image(w, h, seed));
  });

  m.def("pointwise_error_db", [](const Array1& candidate, const Array1& oracle) {
    return to_dict(pointwise_error_db(to_signal(candidate), to_signal(oracle)));
  });
  m.def("compare_transforms", [](const Array1& x) {
    const auto r = compare_transforms(to_signal(x));
    return py::make_tuple(to_dict(r.approx), to_dict(r.detail));
  });
  m.def("complexity_report",
        [](std::size_t n, std::size_t levels, bool timing) {
          const auto c = complexity_report(n, levels, {timing, 11});
          py::dict d;
          d["baseline"] = to_dict(c.baseline);
          d["fast"] = to_dict(c.fast);
          d["mul_ratio"] = c.mul_ratio;
          d["total_ratio"] = c.total_ratio;
          d["wall_clock_baseline"] = c.wall_clock_baseline;
          d["wall_clock_fast"] = c.wall_clock_fast;
          return d;
        },
        py::arg("n"), py::arg("levels") = 1, py::arg("timing") = false);

  m.def("read_signal_csv", [](const std::filesystem::path& p) {
    return to_array(io::read_signal_csv(p));
  });
  m.def("write_signal_csv", [](const Array1& x, const std::filesystem::path& p) {
    io::write_signal_csv(to_signal(x), p);
  });
  m.def("read_pgm", [](const std::filesystem::path& p) {
    return to_array(io::read_pgm(p));
  });
  m.def("write_pgm", [](const Array1& img, const std::filesystem::path& p) {
    io::write_pgm(to_image(img), p);
  });

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out;
          std::ostringstream err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        "Runs a CLI command in-process; returns (exit_code, stdout, stderr).");
}
