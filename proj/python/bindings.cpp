#include "imprim/catalog.hpp"
#include "imprim/classifier.hpp"
#include "imprim/cli.hpp"
#include "imprim/codec.hpp"
#include "imprim/constructions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace imprim;

namespace {

SymmetricTriple load_triple(const std::string & source)
{
    // A leading brace marks an inline triple record; anything else is a catalog key.
    auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{')
        return decode_triple(parse_json(source));
    auto entry = catalog_lookup(source);
    if (! entry.triple)
        throw std::invalid_argument("catalog entry '" + source + "' is not a triple");
    return *entry.triple;
}

std::string analyze(const std::string & source, long p, const std::string & mode, std::size_t bound)
{
    auto report = analyze_triple(load_triple(source), p, bound);
    auto chosen = mode.empty() ? default_mode(p) : parse_mode(mode);
    return canonical_dump(encode_report(classify(std::move(report), chosen)));
}

std::vector<py::dict> rows(long p)
{
    std::vector<py::dict> out;
    for (const auto & row : feasible_f_rows(p))
        out.push_back(py::dict(py::arg("a") = row.a, py::arg("s") = row.s, py::arg("v") = row.v,
            py::arg("b") = row.b, py::arg("r") = row.r, py::arg("lambda") = row.lambda));
    return out;
}

py::tuple run(const std::vector<std::string> & args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_imprim, m)
{
    m.doc() = "Imprimitive symmetric graph analysis";
    m.def("analyze", &analyze, py::arg("source"), py::arg("p") = 3, py::arg("mode") = "",
        py::arg("bound") = default_bound,
        "Classify a catalog key or inline triple JSON; returns the report as canonical JSON text.");
    m.def("catalog_keys", &catalog_triple_keys, "Catalog keys that name triples.");
    m.def("feasible_f_rows", &rows, py::arg("p"), "Feasible rows for the prime p as dicts with keys a, s, v, b, r, lambda.");
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("run", &run, py::arg("args"), "Run the command line tool in-process; returns (code, stdout, stderr).");
}
