#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "fif/error.hpp"
#include "fif/filters.hpp"
#include "fif/inner_loop.hpp"
#include "fif/masklen.hpp"
#include "fif/outer_loop.hpp"
#include "fif/spectrum.hpp"

namespace py = pybind11;
using namespace fif;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-d array");
  return {a.data(), a.data() + a.size()};
}

Array to_array(std::span<const double> v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

FilterShape shape_from(const std::string& name) {
  if (name == "triangular") return FilterShape::triangular();
  if (name == "triangular-self-convolved") return FilterShape::triangular_self_convolved();
  throw Error(Errc::InvalidConfig, "unknown filter shape '" + name + "'");
}

InnerMode mode_from(const std::string& name) {
  if (name == "direct") return InnerMode::Direct;
  if (name == "iterative") return InnerMode::Iterative;
  throw Error(Errc::InvalidConfig, "unknown mode '" + name + "'");
}

DiscreteFilter make_filter(const std::string& shape, std::size_t half_support, std::size_t n, bool doubly) {
  auto f = sample_filter(shape_from(shape), half_support, n);
  return doubly ? self_convolve(f) : f;
}

}  // namespace

PYBIND11_MODULE(_fif, m) {
  m.doc() = "Iterative filtering decomposition";

  static py::exception<Error> fif_error(m, "FifError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = fif_error;
      py::object inst = err(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(fif_error.ptr(), inst.ptr());
    }
  });

  m.def(
      "filter_weights",
      [](const std::string& shape, std::size_t half_support, std::size_t n, bool doubly) {
        return to_array(make_filter(shape, half_support, n, doubly).weights());
      },
      py::arg("shape"), py::arg("half_support"), py::arg("n"), py::arg("doubly") = true);

  m.def(
      "eigenvalues",
      [](const std::string& shape, std::size_t half_support, std::size_t n, bool doubly) {
        return to_array(filter_eigenvalues(make_filter(shape, half_support, n, doubly)).values());
      },
      py::arg("shape"), py::arg("half_support"), py::arg("n"), py::arg("doubly") = true);

  m.def(
      "apply",
      [](const Array& s, const std::string& shape, std::size_t half_support, std::size_t iterations,
         const std::string& mode) {
        const auto x = to_vector(s);
        const auto f = make_filter(shape, half_support, x.size(), true);
        py::gil_scoped_release release;
        const auto out = mode_from(mode) == InnerMode::Direct ? apply_direct(x, filter_eigenvalues(f), iterations)
                                                             : apply_iterative(x, f, iterations);
        py::gil_scoped_acquire acquire;
        return to_array(out);
      },
      py::arg("s"), py::arg("shape"), py::arg("half_support"), py::arg("iterations"), py::arg("mode") = "direct");

  m.def(
      "mask_length",
      [](const Array& s, double nu, const std::string& strategy) {
        const auto x = to_vector(s);
        if (strategy == "extrema") return mask_length_extrema(x, nu);
        if (strategy == "spectral") return mask_length_spectral(x, nu);
        throw Error(Errc::InvalidConfig, "unknown mask strategy '" + strategy + "'");
      },
      py::arg("s"), py::arg("nu") = 1.6, py::arg("strategy") = "extrema");

  m.def("n0_from_rhs", &n0_from_rhs, py::arg("rhs"));

  m.def(
      "decompose",
      [](const Array& s, double delta, std::size_t max_iterations, std::size_t max_imfs, double eta, double nu,
         const std::string& mode, std::optional<double> gamma, const std::string& shape,
         const std::string& strategy) {
        OuterConfig cfg;
        cfg.inner.delta = delta;
        cfg.inner.max_iterations = max_iterations;
        cfg.inner.mode = mode_from(mode);
        cfg.inner.gamma = gamma;
        cfg.max_imfs = max_imfs;
        cfg.eta = eta;
        cfg.mask_strategy.nu = nu;
        if (strategy == "spectral") {
          cfg.mask_strategy.kind = MaskKind::SpectralPeak;
        } else if (strategy != "extrema") {
          throw Error(Errc::InvalidConfig, "unknown mask strategy '" + strategy + "'");
        }
        cfg.filter_shape = shape_from(shape);
        Signal input(to_vector(s));
        Decomposition d;
        {
          py::gil_scoped_release release;
          d = decompose(input, cfg);
        }
        py::list imfs;
        for (const auto& rec : d.imfs) {
          py::dict item;
          item["imf"] = to_array(rec.imf.samples());
          item["mask_length"] = rec.mask_length;
          item["iterations"] = rec.iterations_used;
          item["sd"] = rec.final_sd;
          item["significant"] = rec.significant;
          item["averaged_out"] = rec.averaged_out;
          imfs.append(item);
        }
        py::dict out;
        out["imfs"] = imfs;
        out["trend"] = to_array(d.trend.samples());
        out["termination"] = std::string(to_string(d.termination));
        return out;
      },
      py::arg("s"), py::kw_only(), py::arg("delta") = 1e-3, py::arg("max_iterations") = 200,
      py::arg("max_imfs") = 50, py::arg("eta") = 0.0, py::arg("nu") = 1.6, py::arg("mode") = "direct",
      py::arg("gamma") = py::none(), py::arg("shape") = "triangular", py::arg("strategy") = "extrema");
}
