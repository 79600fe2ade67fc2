// Python face of the core library. Exact rationals cross the boundary as
// strings ("17/5"); bound checks become plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "symci/census.hpp"
#include "symci/errors.hpp"
#include "symci/factpat.hpp"
#include "symci/ff.hpp"
#include "symci/report.hpp"
#include "symci/symsys.hpp"
#include "symci/upoly.hpp"
#include "symci/valueset.hpp"

namespace py = pybind11;

namespace {

using symci::census::kDefaultWorkCeiling;
using symci::ff::FieldCtx;
using symci::ff::Fq;

py::dict check_dict(const symci::report::BoundCheck& c) {
  using symci::report::rat_str;
  py::dict d;
  d["name"] = c.name;
  d["D"] = c.D.str();
  d["delta"] = c.delta.str();
  d["main_term"] = rat_str(c.main_term);
  d["bound"] = rat_str(c.bound);
  d["observed"] = rat_str(c.observed);
  d["deviation"] = rat_str(c.deviation);
  d["pass"] = c.pass;
  d["vacuous"] = c.vacuous;
  d["hypothesis_met"] = c.hypothesis_met;
  d["slack"] = c.slack;
  return d;
}

py::list checks_list(const std::vector<symci::report::BoundCheck>& checks) {
  py::list out;
  for (const auto& c : checks) out.append(check_dict(c));
  return out;
}

symci::upoly::UPoly poly_from_coeffs(const FieldCtx& F, std::vector<Fq> coeffs) {
  return symci::upoly::UPoly::make(F, std::move(coeffs));
}

symci::valueset::CoeffWindow window_from_args(const FieldCtx& F, std::uint32_t n,
                                              std::uint32_t s, const std::vector<Fq>& a) {
  return symci::valueset::make_window(F, n, s, a);
}

symci::valueset::ChiMethod chi_method(const std::string& name) {
  if (name == "subsets") return symci::valueset::ChiMethod::subsets;
  if (name == "pointcount") return symci::valueset::ChiMethod::pointcount;
  throw symci::Error("chi method must be 'subsets' or 'pointcount', got '" + name + "'");
}

symci::census::IneqSet ineq_from_spec(const std::string& spec, std::uint32_t r) {
  using symci::census::IneqSet;
  if (spec == "none" || spec.empty()) return IneqSet::none();
  if (spec == "all") return IneqSet::all_pairs(r);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto semi = spec.find(';', pos);
    const std::string item = spec.substr(pos, semi == std::string::npos ? semi : semi - pos);
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw symci::Error("inequality spec expects i-j pairs separated by ';', got '" + item + "'");
    pairs.emplace_back(std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return IneqSet::from_pairs(std::move(pairs), r);
}

symci::symsys::SymSystem system_from_lines(const FieldCtx& F, std::uint32_t r, std::uint32_t s,
                                           const std::vector<std::string>& lines) {
  std::vector<symci::symsys::MPoly> polys;
  for (const auto& line : lines) polys.push_back(symci::symsys::MPoly::parse(F, s, line));
  return symci::symsys::make_system(F, std::move(polys), r, /*enforce_range=*/false);
}

py::dict count_report_dict(const symci::census::CountReport& rep) {
  py::dict d;
  d["q"] = rep.q;
  d["r"] = rep.r;
  d["m"] = rep.m;
  d["s"] = rep.s;
  d["d"] = rep.d;
  d["ineq"] = rep.ineq.to_string(rep.r);
  d["affine_count"] = rep.affine_count;
  d["distinct_count"] = rep.distinct_count;
  d["has_infinity"] = rep.has_infinity;
  if (rep.has_infinity) d["infinity_count"] = rep.infinity_count;
  d["work"] = rep.work;
  return d;
}

py::list census_rows(const symci::factpat::Census& c) {
  std::map<symci::upoly::FactPattern, symci::factpat::CensusTally> full;
  for (const auto& lam : symci::factpat::enumerate_patterns(c.family.n)) full[lam] = {0, 0};
  for (const auto& [lam, tally] : c.tallies) full[lam] = tally;
  py::list rows;
  for (auto it = full.rbegin(); it != full.rend(); ++it)
    rows.append(py::make_tuple(it->first.to_string(), it->second.total, it->second.squarefree));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact point counts, factorization censuses, and value-set averages";

  py::register_exception<symci::Error>(m, "CoreError");

  py::class_<FieldCtx>(m, "Field")
      .def_readonly("p", &FieldCtx::p)
      .def_readonly("k", &FieldCtx::k)
      .def_readonly("q", &FieldCtx::q)
      .def("__repr__", [](const FieldCtx& F) {
        return "Field(p=" + std::to_string(F.p) + ", k=" + std::to_string(F.k) + ")";
      });

  m.def("field", &symci::ff::build_field, py::arg("p"), py::arg("k") = 1,
        py::return_value_policy::reference,
        "cached arithmetic context for F_{p^k}; the same object per (p, k)");

  m.def(
      "factorization_pattern",
      [](const FieldCtx& F, std::vector<Fq> coeffs) {
        return symci::upoly::factorization_pattern(poly_from_coeffs(F, std::move(coeffs)))
            .to_string();
      },
      py::arg("field"), py::arg("coeffs"),
      "degree pattern of a monic polynomial, coefficients low-to-high");

  m.def(
      "value_set_cardinality",
      [](const FieldCtx& F, std::vector<Fq> coeffs) {
        return symci::valueset::value_set_cardinality(poly_from_coeffs(F, std::move(coeffs)));
      },
      py::arg("field"), py::arg("coeffs"), "|{f(c) : c in F_q}|");

  m.def(
      "mu", [](std::uint32_t n) { return symci::report::rat_str(symci::valueset::mu(n)); },
      py::arg("n"), "sum_{r=1}^n (-1)^(r-1)/r! as an exact rational string");

  m.def(
      "average_value_set_direct",
      [](const FieldCtx& F, std::uint32_t n, std::uint32_t s, const std::vector<Fq>& a,
         std::uint64_t work_ceiling, unsigned workers) {
        return symci::report::rat_str(symci::valueset::average_value_set_direct(
            window_from_args(F, n, s, a), work_ceiling, workers));
      },
      py::arg("field"), py::arg("n"), py::arg("s"), py::arg("a"),
      py::arg("work_ceiling") = kDefaultWorkCeiling, py::arg("workers") = 1);

  m.def(
      "average_value_set_via_chi",
      [](const FieldCtx& F, std::uint32_t n, std::uint32_t s, const std::vector<Fq>& a,
         const std::string& method, std::uint64_t work_ceiling, unsigned workers) {
        return symci::report::rat_str(symci::valueset::average_value_set_via_chi(
            window_from_args(F, n, s, a), chi_method(method), work_ceiling, workers));
      },
      py::arg("field"), py::arg("n"), py::arg("s"), py::arg("a"),
      py::arg("method") = "subsets", py::arg("work_ceiling") = kDefaultWorkCeiling,
      py::arg("workers") = 1);

  m.def(
      "chi",
      [](const FieldCtx& F, std::uint32_t n, std::uint32_t s, const std::vector<Fq>& a,
         std::uint32_t r, const std::string& method, std::uint64_t work_ceiling,
         unsigned workers) {
        return symci::valueset::chi(window_from_args(F, n, s, a), r, chi_method(method),
                                    work_ceiling, workers);
      },
      py::arg("field"), py::arg("n"), py::arg("s"), py::arg("a"), py::arg("r"),
      py::arg("method") = "subsets", py::arg("work_ceiling") = kDefaultWorkCeiling,
      py::arg("workers") = 1,
      "number of r-subsets of F_q interpolating the window to degree <= n-s-1");

  m.def(
      "verify_value_set_bounds",
      [](const FieldCtx& F, std::uint32_t n, std::uint32_t s, const std::vector<Fq>& a,
         std::uint64_t work_ceiling, unsigned workers) {
        return checks_list(symci::valueset::verify_value_set_bounds(window_from_args(F, n, s, a),
                                                                    work_ceiling, workers));
      },
      py::arg("field"), py::arg("n"), py::arg("s"), py::arg("a"),
      py::arg("work_ceiling") = kDefaultWorkCeiling, py::arg("workers") = 1);

  m.def(
      "count_points",
      [](const FieldCtx& F, std::uint32_t r, std::uint32_t s,
         const std::vector<std::string>& polys, const std::string& ineq, bool infinity,
         std::uint64_t work_ceiling, std::uint32_t workers) {
        auto sys = system_from_lines(F, r, s, polys);
        auto rep = symci::census::count_points(sys, ineq_from_spec(ineq, r), work_ceiling, workers);
        if (infinity) symci::census::attach_infinity(rep, sys, work_ceiling, workers);
        py::dict d = count_report_dict(rep);
        d["in_theorem_range"] = sys.in_theorem_range;
        return d;
      },
      py::arg("field"), py::arg("r"), py::arg("s"), py::arg("polys"), py::arg("ineq") = "none",
      py::arg("infinity") = false, py::arg("work_ceiling") = kDefaultWorkCeiling,
      py::arg("workers") = 1,
      "exact zero count of a symmetric system given as Y-polynomial strings");

  m.def(
      "verify_count_bounds",
      [](const FieldCtx& F, std::uint32_t r, std::uint32_t s,
         const std::vector<std::string>& polys, const std::string& ineq, bool infinity,
         std::uint64_t work_ceiling, std::uint32_t workers) {
        auto sys = system_from_lines(F, r, s, polys);
        auto rep = symci::census::count_points(sys, ineq_from_spec(ineq, r), work_ceiling, workers);
        if (infinity) symci::census::attach_infinity(rep, sys, work_ceiling, workers);
        return checks_list(symci::census::verify_estimate(rep, sys));
      },
      py::arg("field"), py::arg("r"), py::arg("s"), py::arg("polys"), py::arg("ineq") = "all",
      py::arg("infinity") = false, py::arg("work_ceiling") = kDefaultWorkCeiling,
      py::arg("workers") = 1);

  m.def(
      "hypothesis_check",
      [](const FieldCtx& F, std::uint32_t r, std::uint32_t s,
         const std::vector<std::string>& polys, std::uint32_t max_ext,
         std::uint64_t work_ceiling) {
        auto sys = system_from_lines(F, r, s, polys);
        auto rep = symci::symsys::hypothesis_check(sys, max_ext, work_ceiling);
        py::dict d;
        d["q"] = rep.q;
        d["s"] = rep.s;
        d["m"] = rep.m;
        d["max_ext"] = rep.max_ext;
        d["work"] = rep.work;
        d["pass"] = rep.pass;
        d["summary"] = rep.summary();
        return d;
      },
      py::arg("field"), py::arg("r"), py::arg("s"), py::arg("polys"), py::arg("max_ext") = 2,
      py::arg("work_ceiling") = kDefaultWorkCeiling);

  m.def(
      "pattern_census",
      [](const FieldCtx& F, std::uint32_t n, const std::string& family_text,
         std::uint64_t work_ceiling, std::uint32_t workers) {
        auto fam = symci::factpat::load_family(F, n, family_text);
        auto c = symci::factpat::family_census(fam, work_ceiling, workers);
        py::dict d;
        d["q"] = fam.F->q;
        d["n"] = fam.n;
        d["s"] = fam.s;
        d["m"] = fam.m;
        d["in_theorem_range"] = fam.in_theorem_range;
        d["rows"] = census_rows(c);
        d["work"] = c.work;
        return d;
      },
      py::arg("field"), py::arg("n"), py::arg("family_text"),
      py::arg("work_ceiling") = kDefaultWorkCeiling, py::arg("workers") = 1,
      "factorization pattern tallies for a linear family ('c_1 .. c_s | alpha' lines)");

  m.def(
      "verify_pattern_bounds",
      [](const FieldCtx& F, std::uint32_t n, const std::string& family_text,
         std::uint64_t work_ceiling, std::uint32_t workers) {
        auto fam = symci::factpat::load_family(F, n, family_text);
        auto c = symci::factpat::family_census(fam, work_ceiling, workers);
        return checks_list(symci::factpat::verify_pattern_bounds(c));
      },
      py::arg("field"), py::arg("n"), py::arg("family_text"),
      py::arg("work_ceiling") = kDefaultWorkCeiling, py::arg("workers") = 1);
}
