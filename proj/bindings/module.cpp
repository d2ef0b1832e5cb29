#include "weylarr/catalog.hpp"
#include "weylarr/classical.hpp"
#include "weylarr/lattice.hpp"
#include "weylarr/restriction.hpp"
#include "weylarr/subsystem.hpp"
#include "weylarr/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace weylarr;

namespace {

py::dict system_summary(const std::string& name) {
    const RootSystem& rs = RootSystem::get(name);
    py::dict d;
    d["type"] = rs.id().str();
    d["rank"] = rs.rank();
    d["num_positive"] = rs.num_positive();
    d["coxeter_number"] = rs.coxeter_number();
    d["exponents"] = rs.exponents();
    d["highest_root"] = rs.highest_root().c;
    d["c_max"] = rs.c_max();
    d["simply_laced"] = rs.simply_laced();
    return d;
}

py::list positive_roots(const std::string& name) {
    const RootSystem& rs = RootSystem::get(name);
    py::list out;
    for (int i = 0; i < rs.num_positive(); ++i) {
        py::dict d;
        d["index"] = i;
        d["coeffs"] = rs.root(i).c;
        d["height"] = rs.root(i).height;
        d["normsq"] = rs.root(i).normsq.str();
        out.append(d);
    }
    return out;
}

py::dict classify(const std::string& name, const std::vector<int>& b1,
                  const std::vector<int>& b2) {
    const RootSystem& rs = RootSystem::get(name);
    PairClassification pc = classify_pair(rs, b1, b2);
    py::dict d;
    d["beta1"] = pc.beta1;
    d["beta2"] = pc.beta2;
    d["is_orthogonal"] = pc.is_orthogonal;
    d["is_a12"] = pc.is_a12;
    d["is_ro"] = pc.is_ro;
    d["span_type"] = pc.is_a12 ? "A1 x A1"
                               : (pc.span_irreducible ? pc.span_type.str() : "A1 x A1");
    return d;
}

py::list orbits(const std::string& name) {
    const RootSystem& rs = RootSystem::get(name);
    py::list out;
    for (const PairOrbit& o : pair_orbits(rs)) {
        py::dict d;
        d["size"] = o.members.size();
        d["ro"] = o.ro;
        d["representative"] = py::make_tuple(o.representative.first, o.representative.second);
        out.append(d);
    }
    return out;
}

py::dict restriction(const std::string& name, int i, int j) {
    const RootSystem& rs = RootSystem::get(name);
    const auto &b1 = rs.root(i).c, &b2 = rs.root(j).c;
    CardinalityCheck cc = verify_card_theorem(rs, b1, b2);
    py::dict d;
    d["ro"] = cc.ro;
    d["size_X"] = cc.size_x;
    d["size_H1"] = cc.size_h1;
    d["diff"] = cc.diff1;
    d["expected"] = cc.expected;
    d["passed"] = cc.passed;
    d["K0"] = cc.k0.str();
    d["K1"] = cc.k1.str();
    return d;
}

py::list restriction_char_poly(const std::string& name, int i, int j, int max_rank) {
    const RootSystem& rs = RootSystem::get(name);
    RestrictionClasses rc = restriction_classes(rs, {rs.root(i).c, rs.root(j).c});
    CharPoly chi = char_poly(rc.forms, rs.rank() - 2, max_rank);
    py::list out;
    for (long long c : chi.coeff) out.append(c);
    return out;
}

py::list verify_scope(const std::vector<std::string>& scope, const std::string& depth) {
    SuiteOptions opt;
    opt.depth = depth == "representatives" ? Depth::representatives : Depth::exhaustive;
    std::vector<RootSystemId> ids;
    for (const std::string& s : scope) ids.push_back(RootSystemId::parse(s));
    py::list out;
    py::object loads = py::module_::import("json").attr("loads");
    for (const CheckResult& r : run_suite(ids, opt)) out.append(loads(r.to_json().dump()));
    return out;
}

py::dict basis_restriction(const std::string& name, int i, int j) {
    const RootSystem& rs = RootSystem::get(name);
    BasisRestrictionResult br = verify_basis_restriction(rs, rs.root(i).c, rs.root(j).c);
    py::dict d;
    d["passed"] = br.passed;
    d["ro"] = br.ro;
    d["degrees"] = br.degrees;
    d["expected"] = br.expected;
    d["dropped"] = br.dropped;
    d["detail"] = br.detail;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact root-system and Weyl-arrangement restriction kernels";
    m.attr("__version__") = WEYLARR_VERSION;
    m.def("system", &system_summary, py::arg("type"),
          "summary of an irreducible root system (exponents, Coxeter number, highest root)");
    m.def("positive_roots", &positive_roots, py::arg("type"));
    m.def("classify_pair", &classify, py::arg("type"), py::arg("beta1"), py::arg("beta2"),
          "orthogonality / A1^2 / relatedly-orthogonal classification of a root pair");
    m.def("orbits", &orbits, py::arg("type"), "Weyl orbits of the A1^2 pairs");
    m.def("restriction", &restriction, py::arg("type"), py::arg("i"), py::arg("j"),
          "restriction cardinalities and K-sums for an A1^2 pair of root indices");
    m.def("restriction_char_poly", &restriction_char_poly, py::arg("type"), py::arg("i"),
          py::arg("j"), py::arg("max_rank") = 6,
          "coefficients of chi(A^X, t), ascending powers");
    m.def("basis_restriction", &basis_restriction, py::arg("type"), py::arg("i"), py::arg("j"),
          "Saito check of the restricted derivation basis (classical families)");
    m.def("verify", &verify_scope, py::arg("scope"), py::arg("depth") = "exhaustive",
          "run the verification suite; returns one record per check");
}
