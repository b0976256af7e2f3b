// Python bindings for the gelmod core. Structured results cross the boundary
// as plain dicts/lists; full CLI-style reports are available through run().

#include "gelmod/cli.hpp"
#include "gelmod/errors.hpp"
#include "gelmod/weylmodel.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gelmod;

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

std::vector<CoxeterDescriptor> computable_factors(const std::string& expr) {
    const ProductDescriptor pd = cli::parse_group(expr);
    std::vector<CoxeterDescriptor> out;
    for (const GroupFactor& f : pd.factors) out.push_back(f.desc());
    return out;
}

py::list fake_degrees_py(const std::string& expr) {
    py::list out;
    const ProductDescriptor pd = cli::parse_group(expr);
    for (const GroupFactor& f : pd.factors) {
        const CoxeterDescriptor g = f.desc();
        for (const FakeDegreeReport& r : fake_degree_reports(g)) {
            py::dict d;
            d["factor"] = g.name();
            d["label"] = r.label;
            std::vector<long long> coeffs;
            if (const auto deg = r.fakeDegree.degree())
                for (int k = 0; k <= *deg; ++k) coeffs.push_back(to_ll(r.fakeDegree.coeff(k)));
            d["fakeDegree"] = coeffs;
            d["p"] = r.p;
            d["firstMultiplicity"] = to_ll(r.firstMultiplicity);
            d["dim"] = to_ll(r.dim);
            out.append(std::move(d));
        }
    }
    return out;
}

py::dict verdict_py(const std::string& expr) {
    const Verdict v = gelfand_verdict(cli::parse_group(expr));
    py::dict d;
    d["isGelfand"] = v.isGelfand;
    d["method"] = v.method;
    py::list ws;
    for (const Witness& w : v.witnesses) {
        py::dict wd;
        wd["factor"] = w.factor;
        wd["label"] = w.label;
        wd["firstMultiplicity"] = to_ll(w.firstMultiplicity);
        ws.append(std::move(wd));
    }
    d["witnesses"] = std::move(ws);
    return d;
}

std::map<int, long long> model_dimensions_py(const std::string& expr) {
    const ProductDescriptor pd = cli::parse_group(expr);
    for (const GroupFactor& f : pd.factors)
        if (!f.computable())
            throw UnsupportedFamily("model needs computable factors; '" + f.name() +
                                    "' is classification-only");
    std::map<int, Int> dims = model_graded_dimensions(pd.factors[0].desc());
    for (size_t k = 1; k < pd.factors.size(); ++k)
        dims = convolve_graded(dims, model_graded_dimensions(pd.factors[k].desc()));
    std::map<int, long long> out;
    for (const auto& [deg, d] : dims) out[deg] = to_ll(d);
    return out;
}

py::tuple run_py(const std::string& subcommand, const std::string& group,
                 const std::string& format, int maxDegree, long long cap) {
    cli::Options opt;
    opt.format = cli::parse_format(format);
    if (maxDegree >= 0) opt.maxDegree = maxDegree;
    opt.cap = Int(cap);
    const cli::RunResult r = cli::run_command(subcommand, group, opt);
    return py::make_tuple(r.exitCode, r.output);
}

} // namespace

PYBIND11_MODULE(_gelmod, m) {
    m.doc() = "fake degrees and polynomial models of finite Coxeter groups";

    py::register_exception<Error>(m, "GelmodError");

    py::class_<CoxeterDescriptor>(m, "Group")
        .def_property_readonly("name", &CoxeterDescriptor::name)
        .def_property_readonly("rank", &CoxeterDescriptor::rank)
        .def_property_readonly("degrees", &CoxeterDescriptor::degrees)
        .def_property_readonly("order",
                               [](const CoxeterDescriptor& g) { return to_ll(g.order()); })
        .def_property_readonly("reflection_count", &CoxeterDescriptor::reflection_count)
        .def("__repr__",
             [](const CoxeterDescriptor& g) { return "<Group " + g.name() + ">"; });

    m.def("factors", &computable_factors,
          "computable factors of a group expression, e.g. 'A2xB2'", py::arg("group"));
    m.def("fake_degrees", &fake_degrees_py,
          "per-label reports: label, coefficients (constant term first), first "
          "occurrence, multiplicity, dimension",
          py::arg("group"));
    m.def("verdict", &verdict_py, "Gelfand verdict for a group expression",
          py::arg("group"));
    m.def("is_gelfand", [](const std::string& expr) {
        return gelfand_verdict(cli::parse_group(expr)).isGelfand;
    }, py::arg("group"));
    m.def("gelfand_dimension", [](const std::string& expr) {
        return to_ll(gelfand_dimension(cli::parse_group(expr)));
    }, py::arg("group"));
    m.def("model_dimensions", &model_dimensions_py,
          "graded dimensions of the polynomial model (products convolve factors)",
          py::arg("group"));
    m.def("run", &run_py, "run a CLI subcommand; returns (exit_code, output)",
          py::arg("subcommand"), py::arg("group"), py::arg("format") = "text",
          py::arg("max_degree") = -1, py::arg("cap") = 10000LL);
}
