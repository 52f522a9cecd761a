#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qss/cli.hpp"
#include "qss/protocol.hpp"

namespace py = pybind11;
using namespace qss;

namespace {

std::vector<Amplitude> to_amps(const std::vector<std::complex<double>>& v) { return v; }

LinearCode make_code(const FieldPtr& field, const std::vector<std::vector<uint32_t>>& rows) {
    return LinearCode(GFMatrix::from_rows(field, rows));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact simulator for LOCC-assisted quantum secret sharing built from "
              "classical linear codes";

    // error taxonomy
    auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<NonPrimeCharacteristic>(m, "NonPrimeCharacteristic", err);
    py::register_exception<ReduciblePolynomial>(m, "ReduciblePolynomial", err);
    py::register_exception<NoBuiltinPolynomial>(m, "NoBuiltinPolynomial", err);
    py::register_exception<FieldMismatch>(m, "FieldMismatch", err);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", err);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", err);
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", err);
    py::register_exception<EmptySelection>(m, "EmptySelection", err);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", err);
    py::register_exception<InvalidSubset>(m, "InvalidSubset", err);
    py::register_exception<NotAssisted>(m, "NotAssisted", err);
    py::register_exception<SupportLeak>(m, "SupportLeak", err);
    py::register_exception<DegenerateState>(m, "DegenerateState", err);
    py::register_exception<ParseError>(m, "ParseError", err);

    py::class_<Budgets>(m, "Budgets")
        .def(py::init<>())
        .def_readwrite("max_codewords", &Budgets::max_codewords)
        .def_readwrite("max_subset_sites", &Budgets::max_subset_sites)
        .def_readwrite("max_amplitudes", &Budgets::max_amplitudes);

    py::class_<Field, std::shared_ptr<Field>>(m, "Field")
        .def(py::init([](uint32_t p, uint32_t m) {
                 return std::const_pointer_cast<Field>(Field::make(p, m));
             }),
             py::arg("p"), py::arg("m") = 1)
        .def(py::init([](uint32_t p, uint32_t m, const std::vector<uint32_t>& poly) {
                 return std::const_pointer_cast<Field>(Field::make(p, m, poly));
             }),
             py::arg("p"), py::arg("m"), py::arg("poly"))
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("m", &Field::m)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("modulus", &Field::modulus)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("trace", &Field::trace)
        .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
        .def("__repr__", &Field::to_string);

    py::class_<GFVector>(m, "GFVector")
        .def(py::init<FieldPtr, std::vector<uint32_t>>(), py::arg("field"), py::arg("values"))
        .def_property_readonly("field", &GFVector::field)
        .def("__len__", &GFVector::size)
        .def("__getitem__",
             [](const GFVector& v, size_t i) {
                 if (i >= v.size()) throw py::index_error();
                 return v[i];
             })
        .def("values",
             [](const GFVector& v) {
                 return std::vector<uint32_t>(v.values().begin(), v.values().end());
             })
        .def("hamming_weight", &GFVector::hamming_weight)
        .def("__eq__", [](const GFVector& a, const GFVector& b) { return a == b; })
        .def("__repr__", [](const GFVector& v) { return "(" + v.to_string() + ")"; });

    py::class_<GFMatrix>(m, "GFMatrix")
        .def(py::init(&GFMatrix::from_rows), py::arg("field"), py::arg("rows"))
        .def_property_readonly("rows", &GFMatrix::rows)
        .def_property_readonly("cols", &GFMatrix::cols)
        .def_property_readonly("field", &GFMatrix::field)
        .def("at", &GFMatrix::at)
        .def("__repr__", &GFMatrix::to_string);

    m.def("encode_word", &encode_word, py::arg("x"), py::arg("G"));
    m.def("mat_vec", &mat_vec);
    m.def("rank", &rank);
    m.def("solve", &solve, py::arg("M"), py::arg("rhs"),
          "canonical solution of M.z^T = rhs (free variables zero), or None");
    m.def("select_columns", &select_columns, py::arg("G"), py::arg("cols"),
          "submatrix of the 0-based columns");
    m.def("transpose", &transpose);
    m.def("kernel_basis", &kernel_basis);

    py::class_<LinearCode>(m, "LinearCode")
        .def(py::init(&make_code), py::arg("field"), py::arg("generator_rows"))
        .def(py::init<GFMatrix>(), py::arg("generator"))
        .def_property_readonly("n", &LinearCode::n)
        .def_property_readonly("k", &LinearCode::k)
        .def_property_readonly("q", &LinearCode::q)
        .def_property_readonly("field", &LinearCode::field)
        .def_property_readonly("generator", &LinearCode::generator)
        .def("codeword", &LinearCode::codeword)
        .def("message", &LinearCode::message)
        .def("__repr__", [](const LinearCode& c) {
            return "LinearCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) +
                   ", q=" + std::to_string(c.q()) + ")";
        });

    m.def("min_distance", &min_distance, py::arg("code"), py::arg("budgets") = Budgets{});
    m.def("distance_via_rank", &distance_via_rank, py::arg("code"),
          py::arg("budgets") = Budgets{});
    m.def("is_mds", &is_mds, py::arg("code"), py::arg("budgets") = Budgets{});

    py::class_<SubsetReport>(m, "SubsetReport")
        .def_readonly("subset_b", &SubsetReport::subset_b)
        .def_readonly("rank_gb", &SubsetReport::rank_gb)
        .def_readonly("assisted", &SubsetReport::assisted);

    m.def("is_locc_assisting", &is_locc_assisting, py::arg("code"), py::arg("subset_a"),
          "rank criterion for the complement of the 0-based measuring subset");
    m.def("enumerate_assisting", &enumerate_assisting, py::arg("code"),
          py::arg("budgets") = Budgets{});

    m.def("load_code_spec", &load_code_spec, py::arg("json_text"));
    m.def("load_code_file", &load_code_file, py::arg("path"));
    m.def("code_spec_to_json", &code_spec_to_json, py::arg("code"));

    py::class_<Secret>(m, "Secret")
        .def(py::init([](FieldPtr f, uint32_t k, const std::vector<std::complex<double>>& amps) {
                 return Secret(std::move(f), k, to_amps(amps));
             }),
             py::arg("field"), py::arg("k"), py::arg("amps"))
        .def_static("normalized",
                    [](FieldPtr f, uint32_t k, const std::vector<std::complex<double>>& amps) {
                        return Secret::normalized(std::move(f), k, to_amps(amps));
                    })
        .def_static("basis", &Secret::basis)
        .def_static("random",
                    [](FieldPtr f, uint32_t k, uint64_t seed) {
                        Rng rng(seed);
                        return Secret::random(std::move(f), k, rng);
                    },
                    py::arg("field"), py::arg("k"), py::arg("seed"))
        .def_property_readonly("k", &Secret::k)
        .def_property_readonly("dim", &Secret::dim)
        .def("amps", [](const Secret& s) {
            return std::vector<std::complex<double>>(s.amps().begin(), s.amps().end());
        });

    py::class_<MeasurementRecord>(m, "MeasurementRecord")
        .def_readonly("subset_a", &MeasurementRecord::subset_a)
        .def_readonly("outcomes", &MeasurementRecord::outcomes)
        .def_readonly("probability", &MeasurementRecord::probability);

    py::class_<StateVector>(m, "StateVector")
        .def(py::init([](FieldPtr f, uint32_t sites,
                         const std::vector<std::complex<double>>& amps) {
                 return StateVector(std::move(f), sites, to_amps(amps));
             }),
             py::arg("field"), py::arg("sites"), py::arg("amps"))
        .def_static("basis", &StateVector::basis)
        .def_property_readonly("sites", &StateVector::sites)
        .def_property_readonly("dim", &StateVector::dim)
        .def("amps",
             [](const StateVector& s) {
                 return std::vector<std::complex<double>>(s.amps().begin(), s.amps().end());
             })
        .def("apply_fourier", py::overload_cast<uint32_t>(&StateVector::apply_fourier))
        .def("apply_fourier_adjoint", &StateVector::apply_fourier_adjoint)
        .def("apply_z", py::overload_cast<uint32_t, uint32_t>(&StateVector::apply_z),
             py::arg("site"), py::arg("z"))
        .def("fourier_outcome_distribution", &StateVector::fourier_outcome_distribution)
        .def("measure_fourier",
             [](const StateVector& s, const std::vector<uint32_t>& a, uint64_t seed) {
                 Rng rng(seed);
                 return s.measure_fourier(a, rng);
             },
             py::arg("subset_a"), py::arg("seed"))
        .def("project_fourier", &StateVector::project_fourier, py::arg("subset_a"),
             py::arg("outcome"))
        .def("dump", &StateVector::dump);

    m.def("encode_secret", &encode_secret, py::arg("secret"), py::arg("code"),
          py::arg("budgets") = Budgets{});
    m.def("fidelity", py::overload_cast<const Secret&, const Secret&>(&fidelity));
    m.def("fidelity", py::overload_cast<const StateVector&, const StateVector&>(&fidelity));

    py::class_<DecodeIsometry, std::shared_ptr<DecodeIsometry>>(m, "DecodeIsometry")
        .def(py::init<const LinearCode&, const std::vector<uint32_t>&>(), py::arg("code"),
             py::arg("subset_b"))
        .def_property_readonly("subset_b", &DecodeIsometry::subset_b)
        .def_property_readonly("rank_gb", &DecodeIsometry::rank_gb)
        .def("apply", &DecodeIsometry::apply)
        .def("codeword_index", &DecodeIsometry::codeword_index);

    m.def("compute_correction", &compute_correction, py::arg("code"), py::arg("subset_a"),
          py::arg("outcomes_a"));

    py::class_<ProtocolTranscript>(m, "ProtocolTranscript")
        .def_readonly("subset_a", &ProtocolTranscript::subset_a)
        .def_readonly("subset_b", &ProtocolTranscript::subset_b)
        .def_readonly("secret", &ProtocolTranscript::secret)
        .def_readonly("outcomes_a", &ProtocolTranscript::outcomes_a)
        .def_readonly("correction_z", &ProtocolTranscript::correction_z)
        .def_readonly("outcome_probability", &ProtocolTranscript::outcome_probability)
        .def_readonly("recovered", &ProtocolTranscript::recovered)
        .def_readonly("fidelity", &ProtocolTranscript::fidelity)
        .def_readonly("seed", &ProtocolTranscript::seed);

    m.def("run_protocol",
          [](const LinearCode& code, const std::vector<uint32_t>& subset_a, const Secret& secret,
             uint64_t seed) { return run_protocol(code, subset_a, secret, seed); },
          py::arg("code"), py::arg("subset_a"), py::arg("secret"), py::arg("seed"),
          "one full dealer->measure->correct->decode run; subset_a is 0-based");
    m.def("transcript_to_json", &transcript_to_json, py::arg("transcript"), py::arg("code"));

    py::class_<CollisionWitness>(m, "CollisionWitness")
        .def_readonly("x1", &CollisionWitness::x1)
        .def_readonly("x2", &CollisionWitness::x2)
        .def_readonly("state_overlap", &CollisionWitness::state_overlap);

    py::class_<RankCriterionReport>(m, "RankCriterionReport")
        .def_readonly("subset_a", &RankCriterionReport::subset_a)
        .def_readonly("subset_b", &RankCriterionReport::subset_b)
        .def_readonly("rank_gb", &RankCriterionReport::rank_gb)
        .def_readonly("k", &RankCriterionReport::k)
        .def_readonly("assisted", &RankCriterionReport::assisted)
        .def_readonly("trials", &RankCriterionReport::trials)
        .def_readonly("min_fidelity", &RankCriterionReport::min_fidelity)
        .def_readonly("witness", &RankCriterionReport::witness)
        .def_readonly("passed", &RankCriterionReport::pass);

    m.def("verify_rank_criterion", &verify_rank_criterion, py::arg("code"), py::arg("subset_a"),
          py::arg("trials") = 20, py::arg("base_seed") = kDefaultSeed,
          py::arg("budgets") = Budgets{},
          "both directions of the recovery criterion for one 0-based subset A");
}
