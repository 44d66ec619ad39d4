#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eftlab/sweep.hpp"

namespace py = pybind11;
using namespace eftlab;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Dyadic parse_dyadic(const std::string& text) {
  auto d = Dyadic::parse(text);
  if (!d) throw py::value_error("not a dyadic literal: '" + text + "'");
  return *d;
}

}  // namespace

PYBIND11_MODULE(_eftlab, m) {
  m.doc() = "Parametric floating-point laboratory: exact dyadic arithmetic, six "
            "rounding modes, FastTwoSum/ExtractScalar traces, condition predicates "
            "and exhaustive sweeps";

  py::class_<FormatConfig>(m, "FormatConfig")
      .def(py::init<int, int, int>(), py::arg("p"), py::arg("emin"), py::arg("emax"))
      .def_readonly("precision", &FormatConfig::precision)
      .def_readonly("emin", &FormatConfig::emin)
      .def_readonly("emax", &FormatConfig::emax)
      .def("unit_roundoff", &FormatConfig::unit_roundoff)
      .def("max_finite", &FormatConfig::max_finite)
      .def("min_positive", &FormatConfig::min_positive)
      .def("id", &FormatConfig::id)
      .def_static("parse",
                  [](const std::string& text) {
                    auto fmt = FormatConfig::parse(text);
                    if (!fmt) throw py::value_error("not a format id: '" + text + "'");
                    return *fmt;
                  })
      .def(py::self == py::self)
      .def("__repr__",
           [](const FormatConfig& f) { return "FormatConfig(" + f.id() + ")"; });

  py::class_<Dyadic>(m, "Dyadic")
      .def(py::init(&parse_dyadic), py::arg("literal"))
      .def(py::init([](long long v) { return Dyadic(v); }), py::arg("value"))
      .def_static("pow2", &Dyadic::pow2, py::arg("k"))
      .def_property_readonly("mant", [](const Dyadic& d) { return to_py_int(d.mant()); })
      .def_property_readonly("exp2", &Dyadic::exp2)
      .def("is_zero", &Dyadic::is_zero)
      .def("sign", &Dyadic::sign)
      .def("is_power_of_two", &Dyadic::is_power_of_two)
      .def("floor_log2", &Dyadic::floor_log2)
      .def("abs", &Dyadic::abs)
      .def("ldexp", &Dyadic::ldexp, py::arg("k"))
      .def("__add__", [](const Dyadic& a, const Dyadic& b) { return a + b; })
      .def("__sub__", [](const Dyadic& a, const Dyadic& b) { return a - b; })
      .def("__neg__", [](const Dyadic& a) { return -a; })
      .def("__eq__", [](const Dyadic& a, const Dyadic& b) { return a == b; })
      .def("__lt__", [](const Dyadic& a, const Dyadic& b) { return a < b; })
      .def("__le__", [](const Dyadic& a, const Dyadic& b) { return a <= b; })
      .def("__gt__", [](const Dyadic& a, const Dyadic& b) { return a > b; })
      .def("__ge__", [](const Dyadic& a, const Dyadic& b) { return a >= b; })
      .def("__hash__",
           [](const Dyadic& d) { return py::hash(py::make_tuple(d.mant().str(), d.exp2())); })
      .def("__str__", &Dyadic::str)
      .def("__repr__", [](const Dyadic& d) { return "Dyadic('" + d.str() + "')"; });

  py::class_<Fp>(m, "Fp")
      .def("is_finite", &Fp::is_finite)
      .def("is_inf", &Fp::is_inf)
      .def("is_zero", &Fp::is_zero)
      .def_property_readonly("M", [](const Fp& x) { return to_py_int(x.significand()); })
      .def_property_readonly("E", &Fp::exponent)
      .def("odd_significand", &Fp::odd_significand)
      .def("sign", &Fp::sign)
      .def("value", &Fp::value, py::arg("fmt"))
      .def("str", &Fp::str, py::arg("fmt"))
      .def_static("zero", &Fp::zero, py::arg("fmt"))
      .def_static("pos_inf", &Fp::pos_inf)
      .def_static("neg_inf", &Fp::neg_inf)
      .def_static("largest", &Fp::largest, py::arg("fmt"))
      .def_static("smallest", &Fp::smallest, py::arg("fmt"))
      .def_static("finite", &Fp::finite, py::arg("M"), py::arg("E"), py::arg("fmt"))
      .def("__eq__", [](const Fp& a, const Fp& b) { return a == b; })
      .def("__repr__", [](const Fp& x) {
        if (!x.is_finite()) return std::string(x.sign() > 0 ? "Fp(+inf)" : "Fp(-inf)");
        return "Fp(M=" + x.significand().str() + ", E=" + std::to_string(x.exponent()) + ")";
      });

  py::implicitly_convertible<std::string, Dyadic>();
  py::implicitly_convertible<long long, Dyadic>();

  m.def("parse_dyadic", &parse_dyadic, py::arg("literal"));
  m.def("ufp", &eftlab::ufp);
  m.def("ulp", py::overload_cast<const Dyadic&, const FormatConfig&>(&eftlab::ulp),
        py::arg("r"), py::arg("fmt"));
  m.def("h_lsb", &h_lsb, py::arg("r"));
  m.def("is_multiple_of", &is_multiple_of, py::arg("r"), py::arg("g"));
  m.def("in_format", &in_format, py::arg("r"), py::arg("fmt"));
  m.def("to_fp_exact", &to_fp_exact, py::arg("r"), py::arg("fmt"));
  m.def("pred", &pred, py::arg("x"), py::arg("fmt"));
  m.def("succ", &succ, py::arg("x"), py::arg("fmt"));
  m.def("format_cardinality",
        [](const FormatConfig& fmt) { return to_py_int(format_cardinality(fmt)); },
        py::arg("fmt"));
  m.def("enumerate_format", &enumerate_format, py::arg("fmt"));

  py::enum_<RoundingMode>(m, "RoundingMode")
      .value("RD", RoundingMode::RD)
      .value("RU", RoundingMode::RU)
      .value("RZ", RoundingMode::RZ)
      .value("RNE", RoundingMode::RNE)
      .value("RNA", RoundingMode::RNA)
      .value("RO", RoundingMode::RO);
  m.def("parse_mode", &parse_mode, py::arg("name"));
  m.def("mode_name", &mode_name, py::arg("mode"));

  m.def("round", &eftlab::round, py::arg("r"), py::arg("mode"), py::arg("fmt"));
  m.def("round_down", &round_down, py::arg("r"), py::arg("fmt"));
  m.def("round_up", &round_up, py::arg("r"), py::arg("fmt"));
  m.def("is_faithful_result", &is_faithful_result, py::arg("r"), py::arg("x"), py::arg("fmt"));
  m.def("double_round_ro", &double_round_ro, py::arg("r"), py::arg("wide"), py::arg("narrow"));

  py::class_<ModeTriple>(m, "ModeTriple")
      .def(py::init<RoundingMode, RoundingMode, RoundingMode>(), py::arg("o1"), py::arg("o2"),
           py::arg("o3"))
      .def_readwrite("o1", &ModeTriple::o1)
      .def_readwrite("o2", &ModeTriple::o2)
      .def_readwrite("o3", &ModeTriple::o3)
      .def("__eq__", [](const ModeTriple& a, const ModeTriple& b) { return a == b; })
      .def("__repr__", [](const ModeTriple& t) {
        return std::string("ModeTriple(") + mode_name(t.o1) + "," + mode_name(t.o2) + "," +
               mode_name(t.o3) + ")";
      });

  py::class_<FtsTrace>(m, "FtsTrace")
      .def_readonly("a", &FtsTrace::a)
      .def_readonly("b", &FtsTrace::b)
      .def_readonly("x", &FtsTrace::x)
      .def_readonly("z", &FtsTrace::z)
      .def_readonly("y", &FtsTrace::y)
      .def_readonly("delta", &FtsTrace::delta)
      .def_readonly("eft", &FtsTrace::eft)
      .def_readonly("overflow", &FtsTrace::overflow);

  py::class_<RoundingError>(m, "RoundingError")
      .def_readonly("delta", &RoundingError::delta)
      .def_readonly("in_format", &RoundingError::in_format)
      .def_readonly("overflow", &RoundingError::overflow);

  py::class_<SplitTrace>(m, "SplitTrace")
      .def_readonly("sigma", &SplitTrace::sigma)
      .def_readonly("x", &SplitTrace::x)
      .def_readonly("s", &SplitTrace::s)
      .def_readonly("x_h", &SplitTrace::x_h)
      .def_readonly("x_l", &SplitTrace::x_l)
      .def_readonly("exact_split", &SplitTrace::exact_split)
      .def_readonly("grid_ok", &SplitTrace::grid_ok)
      .def_readonly("overflow", &SplitTrace::overflow);

  m.def("fast_two_sum", &fast_two_sum, py::arg("a"), py::arg("b"), py::arg("modes"),
        py::arg("fmt"));
  m.def("rounding_error", &rounding_error, py::arg("a"), py::arg("b"), py::arg("mode"),
        py::arg("fmt"));
  m.def("extract_scalar", &extract_scalar, py::arg("sigma"), py::arg("x"), py::arg("modes"),
        py::arg("fmt"));

  py::enum_<ConditionId>(m, "ConditionId")
      .value("LEMMA_FAITH1", ConditionId::LemmaFaith1)
      .value("COROLLARY_FAITH1", ConditionId::CorollaryFaith1)
      .value("LEMMA_FAITH2", ConditionId::LemmaFaith2)
      .value("THEOREM_FAITH1", ConditionId::TheoremFaith1)
      .value("THEOREM_FAITH2", ConditionId::TheoremFaith2)
      .value("LEMMA_RTO1", ConditionId::LemmaRto1)
      .value("LEMMA_RTO3", ConditionId::LemmaRto3)
      .value("COROLLARY_RTO1", ConditionId::CorollaryRto1)
      .value("THEOREM_RTO1", ConditionId::TheoremRto1)
      .value("THEOREM_EXTRACT_SCALAR", ConditionId::TheoremExtractScalar)
      .value("PRIOR_DEKKER", ConditionId::PriorDekker)
      .value("PRIOR_BOLDO", ConditionId::PriorBoldo)
      .value("PRIOR_JEANNEROD", ConditionId::PriorJeannerod)
      .value("PRIOR_SIGN_RD", ConditionId::PriorSignRd)
      .value("PRIOR_SIGN_RU", ConditionId::PriorSignRu)
      .value("PRIOR_SIGN_RZ", ConditionId::PriorSignRz)
      .value("PRIOR_LINNAINMAA_PARITY", ConditionId::PriorLinnainmaaParity)
      .value("PRIOR_LINNAINMAA_H", ConditionId::PriorLinnainmaaH);
  py::enum_<GuaranteeClass>(m, "GuaranteeClass")
      .value("DELTA_IN_F", GuaranteeClass::DeltaInF)
      .value("EFT", GuaranteeClass::Eft)
      .value("SPLIT_EFT", GuaranteeClass::SplitEft);

  m.def("condition_name", &condition_name, py::arg("cond"));
  m.def("parse_condition", &parse_condition, py::arg("name"));
  m.def("guarantee_class", &guarantee_class, py::arg("cond"));
  m.def("check", &check, py::arg("cond"), py::arg("a"), py::arg("b"), py::arg("fmt"),
        py::arg("extra") = std::nullopt);
  m.def(
      "check_detailed",
      [](ConditionId cond, const Fp& a, const Fp& b, const FormatConfig& fmt,
         const std::optional<Fp>& extra) {
        ConditionBreakdown br = check_detailed(cond, a, b, fmt, extra);
        py::dict out;
        out["satisfied"] = br.satisfied;
        py::dict cj;
        for (const auto& [name, value] : br.conjuncts) cj[py::str(name)] = value;
        out["conjuncts"] = cj;
        return out;
      },
      py::arg("cond"), py::arg("a"), py::arg("b"), py::arg("fmt"),
      py::arg("extra") = std::nullopt);
  m.def("exponent_gap_bound", &exponent_gap_bound, py::arg("cond"), py::arg("fmt"));

  py::enum_<SweepTarget>(m, "SweepTarget")
      .value("DELTA_IN_F", SweepTarget::DeltaInF)
      .value("FTS_EFT", SweepTarget::FtsEft)
      .value("SPLIT_EFT", SweepTarget::SplitEft)
      .value("DOUBLE_ROUND", SweepTarget::DoubleRound);

  m.def("uniform_triples", &uniform_triples);
  m.def("mixed_triples", &mixed_triples);
  m.def("adversarial_triples", &adversarial_triples,
        py::arg("fixed_o1") = std::optional<RoundingMode>());

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<FormatConfig>(), py::arg("fmt"))
      .def_readwrite("fmt", &SweepSpec::fmt)
      .def_readwrite("target", &SweepSpec::target)
      .def_readwrite("condition", &SweepSpec::condition)
      .def_readwrite("modes", &SweepSpec::modes)
      .def_readwrite("triples", &SweepSpec::triples)
      .def_readwrite("adversarial_fr", &SweepSpec::adversarial_fr)
      .def_readwrite("adversarial_fixed_o1", &SweepSpec::adversarial_fixed_o1)
      .def_readwrite("pair_filter", &SweepSpec::pair_filter)
      .def_readwrite("split_k", &SweepSpec::split_k)
      .def_readwrite("split_control", &SweepSpec::split_control)
      .def_readwrite("wide_fmt", &SweepSpec::wide_fmt)
      .def_readwrite("dr_mant_bits", &SweepSpec::dr_mant_bits)
      .def_readwrite("dr_qmin", &SweepSpec::dr_qmin)
      .def_readwrite("dr_qmax", &SweepSpec::dr_qmax)
      .def_readwrite("max_violations", &SweepSpec::max_violations)
      .def_readwrite("jobs", &SweepSpec::jobs)
      .def_readwrite("pair_budget", &SweepSpec::pair_budget);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("pairs_total", &SweepReport::pairs_total)
      .def_readonly("pairs_condition_true", &SweepReport::pairs_condition_true)
      .def_readonly("evaluations", &SweepReport::evaluations)
      .def_readonly("violations_total", &SweepReport::violations_total)
      .def_readonly("overflow_total", &SweepReport::overflow_total)
      .def_readonly("guarantee_holds_outside_condition",
                    &SweepReport::guarantee_holds_outside_condition)
      .def_readonly("control_failures_total", &SweepReport::control_failures_total)
      .def_readonly("control_witness_checked",
                    &SweepReport::control_witness_checked)
      .def_readonly("control_witness_found", &SweepReport::control_witness_found)
      .def_readonly("wall_ms", &SweepReport::wall_ms)
      .def_property_readonly("violations",
                             [](const SweepReport& r) {
                               py::list out;
                               for (const Json& v : r.violations) out.append(json_to_py(v));
                               return out;
                             })
      .def_property_readonly("control_failures",
                             [](const SweepReport& r) {
                               py::list out;
                               for (const Json& v : r.control_failures) out.append(json_to_py(v));
                               return out;
                             })
      .def("to_dict", [](const SweepReport& r) { return json_to_py(report_to_json(r)); })
      .def("to_json", [](const SweepReport& r) { return report_to_json(r).dump(2); });

  m.def("run_sweep", &run_sweep, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep_delta", &sweep_delta, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep_fts", &sweep_fts, py::arg("spec"), py::call_guard<py::gil_scoped_release>());
  m.def("sweep_split", py::overload_cast<const SweepSpec&>(&sweep_split), py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep_double_round", &sweep_double_round, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("reports_equivalent", &reports_equivalent, py::arg("lhs"), py::arg("rhs"));
  m.def("emit_report",
        [](const SweepReport& rep, const std::string& format, const std::string& path) {
          if (format == "json")
            emit_report(rep, ReportFormat::Json, path);
          else if (format == "csv")
            emit_report(rep, ReportFormat::Csv, path);
          else
            throw py::value_error("format must be 'json' or 'csv'");
        },
        py::arg("report"), py::arg("format"), py::arg("path"));
  m.def("parse_report", &parse_report, py::arg("path"));

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
}
