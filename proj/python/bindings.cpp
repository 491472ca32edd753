#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "sepfft/dense.hpp"
#include "sepfft/layout.hpp"
#include "sepfft/oracle.hpp"
#include "sepfft/transform.hpp"
#include "sepfft/twiddle.hpp"

namespace py = pybind11;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
  return std::vector<double>(a.data(), a.data() + a.size());
}

Array to_array(const std::vector<double>& v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Array to_array(const sepfft::dense::DenseMatrix& m) {
  Array out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

sepfft::SplitSignal to_signal(const Array& re, const Array& im) {
  return {to_vector(re), to_vector(im)};
}

py::tuple to_tuple(const sepfft::SplitSignal& s) {
  return py::make_tuple(to_array(s.re), to_array(s.im));
}

sepfft::Variant parse_variant(const std::string& algo) {
  if (algo == "dit") return sepfft::Variant::DIT;
  if (algo == "dif") return sepfft::Variant::DIF;
  throw std::invalid_argument("algo must be 'dit' or 'dif'");
}

sepfft::FftPlan plan_for(const sepfft::SplitSignal& s, const std::string& algo) {
  const int m = sepfft::check_split_signal(s);
  return sepfft::FftPlan(m, parse_variant(algo));
}

const char* kind_name(sepfft::RotationKind k) {
  switch (k) {
    case sepfft::RotationKind::Identity:
      return "identity";
    case sepfft::RotationKind::QuarterTurn:
      return "quarter_turn";
    case sepfft::RotationKind::Generic:
      return "generic";
  }
  return "generic";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Radix-2 DFT kernels over separate real/imaginary channels";

  py::class_<sepfft::FftPlan>(m, "Plan")
      .def(py::init([](int stages, const std::string& algo) {
             return sepfft::FftPlan(stages, parse_variant(algo));
           }),
           py::arg("m"), py::arg("algo") = "dit")
      .def_property_readonly("m", &sepfft::FftPlan::m)
      .def_property_readonly("size", &sepfft::FftPlan::size)
      .def_property_readonly("algo", [](const sepfft::FftPlan& p) {
        return std::string(sepfft::to_string(p.variant()));
      })
      .def("forward", [](const sepfft::FftPlan& p, const Array& re, const Array& im) {
        const auto s = to_signal(re, im);
        sepfft::SplitSignal y;
        {
          py::gil_scoped_release release;
          y = sepfft::forward(p, s);
        }
        return to_tuple(y);
      }, py::arg("re"), py::arg("im"))
      .def("inverse", [](const sepfft::FftPlan& p, const Array& re, const Array& im) {
        const auto s = to_signal(re, im);
        sepfft::SplitSignal y;
        {
          py::gil_scoped_release release;
          y = sepfft::inverse(p, s);
        }
        return to_tuple(y);
      }, py::arg("re"), py::arg("im"));

  m.def("fft", [](const Array& re, const Array& im, const std::string& algo) {
    const auto s = to_signal(re, im);
    return to_tuple(sepfft::forward(plan_for(s, algo), s));
  }, py::arg("re"), py::arg("im"), py::arg("algo") = "dit",
     "Forward DFT of separate channels; returns (re, im).");

  m.def("ifft", [](const Array& re, const Array& im, const std::string& algo) {
    const auto s = to_signal(re, im);
    return to_tuple(sepfft::inverse(plan_for(s, algo), s));
  }, py::arg("re"), py::arg("im"), py::arg("algo") = "dit",
     "Inverse DFT (1/N scaled); returns (re, im).");

  m.def("naive_dft", [](const Array& re, const Array& im) {
    return to_tuple(sepfft::oracle::naive_dft(to_signal(re, im)));
  }, py::arg("re"), py::arg("im"), "O(N^2) reference DFT, any N >= 1.");

  m.def("interleave", [](const Array& re, const Array& im) {
    return to_array(sepfft::interleave(to_signal(re, im)).vec());
  }, py::arg("re"), py::arg("im"));

  m.def("deinterleave", [](const Array& data) {
    return to_tuple(sepfft::deinterleave(std::span<const double>(to_vector(data))));
  }, py::arg("data"));

  m.def("permute_pairwise_bitrev", [](const Array& data) {
    const sepfft::InterleavedBuffer buf(to_vector(data));
    return to_array(sepfft::permute_pairwise_bitrev(buf).vec());
  }, py::arg("data"));

  m.def("bit_reverse_index", &sepfft::bit_reverse_index, py::arg("n"), py::arg("bits"));

  m.def("rotation_block", [](int stage, std::uint64_t q) {
    const auto w = sepfft::rotation_block(stage, q);
    return py::make_tuple(w.c, w.s, kind_name(w.kind));
  }, py::arg("stage"), py::arg("q"), "Returns (cos, sin, kind).");

  m.def("count_flops", [](int stages) {
    const auto f = sepfft::count_flops(sepfft::FftPlan(stages, sepfft::Variant::DIT));
    py::dict d;
    d["real_mults"] = f.real_mults;
    d["real_adds"] = f.real_adds;
    d["generic_rotations"] = f.generic_rotations;
    d["quarter_turns"] = f.quarter_turns;
    d["identity_rotations"] = f.identity_rotations;
    d["executed_real_mults"] = f.executed_real_mults;
    d["executed_real_adds"] = f.executed_real_adds;
    return d;
  }, py::arg("m"));

  m.def("verify_factorization", [](int stages, const std::string& algo) {
    return sepfft::dense::verify_factorization(stages, parse_variant(algo));
  }, py::arg("m"), py::arg("algo") = "dit",
     "Max-abs deviation of the dense stage product from the DFT matrix.");

  m.def("build_perm_S", [](int s) { return to_array(sepfft::dense::build_perm_S(s)); },
        py::arg("m"));
  m.def("build_W", [](int s, int i) { return to_array(sepfft::dense::build_W(s, i)); },
        py::arg("m"), py::arg("stage"));
  m.def("build_D", [](int s, int i) { return to_array(sepfft::dense::build_D(s, i)); },
        py::arg("m"), py::arg("stage"));
  m.def("build_E_interleaved", [](std::size_t n) {
    return to_array(sepfft::dense::build_E_interleaved(n));
  }, py::arg("n"));
}
