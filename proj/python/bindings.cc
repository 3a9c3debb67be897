// Copyright 2026 The phasefold Authors
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

#include <sstream>

#include "phasefold/cancel.h"
#include "phasefold/fold.h"
#include "phasefold/harness.h"
#include "phasefold/oracle/dense.h"
#include "phasefold/qasm.h"
#include "pybind11/complex.h"
#include "pybind11/numpy.h"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

namespace py = pybind11;
using namespace phasefold;

namespace {

const char *kind_name(GateKind k) {
    switch (k) {
        case GateKind::CX:
            return "cx";
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::Rz:
            return "rz";
    }
    return "?";
}

py::dict stats_dict(const CircuitStats &s) {
    py::dict d;
    d["num_qubits"] = s.num_qubits;
    d["total_gates"] = s.total_gates;
    d["t_count"] = s.t_count;
    d["rz_count"] = s.rz_count;
    d["cx_count"] = s.cx_count;
    d["h_count"] = s.h_count;
    d["x_count"] = s.x_count;
    return d;
}

py::dict report_dict(const FoldReport &r) {
    py::dict d;
    d["merges"] = r.merges;
    d["rotations_in"] = r.rotations_in;
    d["rotations_out"] = r.rotations_out;
    d["t_before"] = r.t_before;
    d["t_after"] = r.t_after;
    d["width"] = r.width;
    d["seed"] = r.seed;
    d["merge_pairs"] = r.merge_pairs;
    return d;
}

Angle to_angle(py::handle a) {
    if (py::isinstance<py::tuple>(a)) {
        auto t = a.cast<std::pair<int64_t, int64_t>>();
        return Angle::exact(t.first, t.second);
    }
    return Angle::radians(a.cast<double>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Randomized phase folding for Clifford+T circuits.";

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<uint32_t>(), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def("__len__", &Circuit::size)
        .def("h", [](Circuit &c, uint32_t q) { c.h(q); })
        .def("x", [](Circuit &c, uint32_t q) { c.x(q); })
        .def("cx", [](Circuit &c, uint32_t control, uint32_t target) { c.cx(control, target); })
        .def(
            "rz", [](Circuit &c, py::object angle, uint32_t q) { c.rz(to_angle(angle), q); },
            py::arg("angle"), py::arg("qubit"),
            "Angle is either radians or an exact (num, den) pair meaning num*pi/den.")
        .def("t", [](Circuit &c, uint32_t q) { c.rz(Angle::t(), q); })
        .def("tdg", [](Circuit &c, uint32_t q) { c.rz(Angle::tdg(), q); })
        .def("s", [](Circuit &c, uint32_t q) { c.rz(Angle::s(), q); })
        .def("z", [](Circuit &c, uint32_t q) { c.rz(Angle::z(), q); })
        .def("gates",
             [](const Circuit &c) {
                 py::list out;
                 for (const Gate &g : c) {
                     if (g.kind() == GateKind::CX) {
                         out.append(py::make_tuple("cx", g.control().index, g.target().index));
                     } else if (g.is_rotation()) {
                         out.append(py::make_tuple("rz", g.qubit().index, g.angle().str()));
                     } else {
                         out.append(py::make_tuple(kind_name(g.kind()), g.qubit().index));
                     }
                 }
                 return out;
             })
        .def("stats", [](const Circuit &c) { return stats_dict(c.stats()); })
        .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; })
        .def("__repr__", [](const Circuit &c) {
            return "<phasefold.Circuit qubits=" + std::to_string(c.num_qubits()) +
                   " gates=" + std::to_string(c.size()) + ">";
        });

    m.def(
        "parse_qasm",
        [](const std::string &text, bool decompose_ccx) {
            ParseResult r = parse_qasm(text, ParseOptions{decompose_ccx});
            if (!r.ok()) {
                std::string msg;
                for (const auto &d : r.diagnostics) {
                    msg += d.str() + "\n";
                }
                throw py::value_error(msg);
            }
            return std::move(*r.circuit);
        },
        py::arg("text"), py::arg("decompose_ccx") = false);
    m.def("emit_qasm", &emit_qasm);

    m.def(
        "cancel_adjacent",
        [](const Circuit &c) {
            CancelReport r;
            Circuit out = cancel_adjacent(c, &r);
            return py::make_tuple(std::move(out), r.pairs_cancelled);
        },
        "Returns (circuit, pairs_cancelled).");

    m.def(
        "fold",
        [](const Circuit &c, unsigned width, uint64_t seed) {
            FoldResult r = fold(c, FoldOptions{width, seed, true});
            return py::make_tuple(std::move(r.circuit), report_dict(r.report));
        },
        py::arg("circuit"), py::arg("width") = kMaxWidth, py::arg("seed") = 0,
        "Returns (circuit, report).");

    m.def(
        "optimize",
        [](const Circuit &c, unsigned width, uint64_t seed, bool precancel, unsigned rounds) {
            OptimizeResult r = optimize(c, OptimizeOptions{width, seed, precancel, rounds});
            py::dict d = report_dict(r.report);
            d["merges"] = r.merges;
            d["pairs_cancelled"] = r.pairs_cancelled;
            d["pass_ns"] = r.pass_ns;
            return py::make_tuple(std::move(r.circuit), d);
        },
        py::arg("circuit"), py::arg("width") = kMaxWidth, py::arg("seed") = 0, py::arg("precancel") = true,
        py::arg("rounds") = 1, "Returns (circuit, report).");

    m.def(
        "required_width",
        [](uint64_t m, double eps) {
            WidthChoice w = required_width(m, eps);
            return py::make_tuple(w.width, w.capped);
        },
        py::arg("num_gates"), py::arg("epsilon"), "Returns (width, capped).");

    m.def("simulate", [](const Circuit &c) {
        oracle::DenseUnitary u = oracle::simulate(c);
        size_t dim = u.dim();
        py::array_t<std::complex<double>> out({dim, dim});
        auto view = out.mutable_unchecked<2>();
        for (size_t r = 0; r < dim; r++) {
            for (size_t col = 0; col < dim; col++) {
                view(r, col) = u(r, col);
            }
        }
        return out;
    });
    m.def("equivalent", &oracle::equivalent, py::arg("a"), py::arg("b"), py::arg("tol") = kVerifyTolerance);
    m.def("random_circuit", &random_circuit, py::arg("num_qubits"), py::arg("num_gates"), py::arg("seed"));
    m.def("tchain_cx_circuit", &tchain_cx_circuit, py::arg("num_gates"), py::arg("seed"));
}
