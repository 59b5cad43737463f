// Python bindings for the linform core.  Chains cross the boundary as spec
// strings ("lambda=2; blocks=2,2; tail=inf"); integers cross as Python ints
// of arbitrary size.

#include "linform/json_io.hpp"
#include "linform/recognize.hpp"
#include "linform/repcount.hpp"
#include "linform/sets.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace linform;

namespace {

py::int_ to_py(const Int& value)
{
    PyObject* object = PyLong_FromString(to_decimal(value).c_str(), nullptr, 10);
    if (!object)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(object);
}

Int from_py(const py::handle& value)
{
    return parse_decimal(py::str(value).cast<std::string>());
}

py::list to_py_list(const std::vector<Int>& values)
{
    py::list list;
    for (const Int& v : values)
        list.append(to_py(v));
    return list;
}

std::vector<Int> from_py_list(const py::sequence& values)
{
    std::vector<Int> out;
    out.reserve(values.size());
    for (const py::handle& v : values)
        out.push_back(from_py(v));
    return out;
}

py::list to_py_assignments(const std::vector<std::vector<Int>>& assignments)
{
    py::list list;
    for (const auto& a : assignments)
        list.append(to_py_list(a));
    return list;
}

py::dict report_dict(const CountReport& report)
{
    py::dict out;
    out["bound"] = to_py(report.bound);
    out["unique_checked"] = report.unique_checked;
    out["all_unique"] = report.all_unique;
    out["first_deviation"] =
        report.first_deviation ? py::object(to_py(*report.first_deviation)) : py::none();
    out["first_deviation_count"] = report.first_deviation_count;
    py::dict histogram;
    for (const auto& [count, total] : report.histogram)
        histogram[py::int_(count)] = total;
    out["histogram"] = histogram;
    if (report.zero_window)
        out["zero_window"] = py::make_tuple(to_py(report.zero_window->first),
                                            to_py(report.zero_window->second));
    else
        out["zero_window"] = py::none();
    out["zero_window_ok"] = report.zero_window_ok;
    out["max_sum"] = to_py(report.max_sum);
    out["complete"] = report.complete;
    out["ok"] = report.ok();
    out["witnesses"] = to_py_assignments(report.witnesses);
    return out;
}

py::dict witness_dict(const CollisionWitness& witness)
{
    py::dict out;
    out["target"] = to_py(witness.target);
    out["first"] = to_py_list(witness.first);
    out["second"] = to_py_list(witness.second);
    out["first_support"] = witness.first_support;
    out["second_support"] = witness.second_support;
    return out;
}

py::dict recognition_dict(const RecognitionResult& result)
{
    py::dict out;
    out["verdict"] = verdict_name(result.verdict);
    out["chain"] = result.chain ? py::object(py::str(to_spec_string(*result.chain)))
                                : py::none();
    out["confirmed_bound"] = to_py(result.confirmed_bound);
    out["reason"] = result.reason;
    out["offending"] = result.offending ? py::object(to_py(*result.offending)) : py::none();
    return out;
}

py::dict forced_dict(const ForcedPrefix& forced)
{
    py::dict out;
    out["feasible"] = forced.feasible();
    out["bound"] = forced.bound;
    out["elements"] = to_py_list(forced.elements);
    if (!forced.feasible()) {
        out["failure"] =
            forced.failure == ForcedPrefix::Failure::Collision ? "collision" : "uncovered";
        out["n"] = to_py(*forced.bad_n);
        out["witnesses"] = to_py_assignments(forced.witnesses);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(linform_py, m)
{
    m.doc() = "exact construction, verification and recognition of "
              "uniquely-representing linear-form systems";

    py::register_exception<Error>(m, "LinformError", PyExc_ValueError);

    m.def("validate_chain", [](const std::string& spec, bool allow_uk_one) {
        ParameterChain chain = parse_chain_spec(spec, allow_uk_one);
        py::dict out;
        out["lambda"] = chain.lambda;
        out["blocks"] = chain.blocks;
        out["tail"] = chain.terminator == Terminator::InfiniteV ? "inf" : "finite";
        out["spec"] = to_spec_string(chain);
        return out;
    }, py::arg("spec"), py::arg("allow_uk_one") = false);

    m.def("partial_products", [](const std::string& spec) {
        PartialProducts products = partial_products(parse_chain_spec(spec));
        return py::make_tuple(to_py_list(products.U), to_py_list(products.V));
    }, py::arg("spec"));

    m.def("exponent_set", [](const std::string& spec) {
        return to_py_list(build_exponent_set(parse_chain_spec(spec)).elements);
    }, py::arg("spec"));

    m.def("position_set", [](const std::string& spec, const py::object& bound) {
        std::optional<Int> limit;
        if (!bound.is_none())
            limit = from_py(bound);
        return to_py_list(build_position_set(parse_chain_spec(spec), limit).elements);
    }, py::arg("spec"), py::arg("bound") = py::none());

    m.def("mixed_radix_digits", [](const py::handle& m_value,
                                   const std::vector<std::uint64_t>& radices) {
        return mixed_radix_digits(from_py(m_value), radices);
    }, py::arg("m"), py::arg("radices"));

    m.def("decompose_exponent", [](const py::handle& m_value, const std::string& spec) {
        auto [s, t] = decompose_exponent(from_py(m_value), parse_chain_spec(spec));
        return py::make_tuple(to_py(s), to_py(t));
    }, py::arg("m"), py::arg("spec"));

    m.def("build_coefficients", [](const std::string& spec) {
        return to_py_list(build_coefficients(parse_chain_spec(spec)).values);
    }, py::arg("spec"));

    m.def("element_membership", [](const py::handle& x, const std::string& spec) {
        return element_membership(from_py(x), parse_chain_spec(spec));
    }, py::arg("x"), py::arg("spec"));

    m.def("enumerate_elements", [](const std::string& spec, const py::handle& bound) {
        return to_py_list(enumerate_elements(parse_chain_spec(spec), from_py(bound)));
    }, py::arg("spec"), py::arg("bound"));

    m.def("represent", [](const py::handle& n, const std::string& spec) {
        Representation rep = represent(from_py(n), parse_chain_spec(spec));
        py::dict out;
        for (const auto& entry : rep.entries)
            out[to_py(entry.coeff)] = to_py(entry.element);
        return out;
    }, py::arg("n"), py::arg("spec"));

    m.def("evaluate", [](const py::dict& assignment) {
        Int sum = 0;
        for (const auto& [coeff, element] : assignment)
            sum += from_py(coeff) * from_py(element);
        return to_py(sum);
    }, py::arg("assignment"));

    m.def("count_range", [](const py::sequence& coeffs, const py::sequence& elements,
                            std::size_t bound, unsigned cap) {
        Counts counts = count_range(from_py_list(coeffs), from_py_list(elements), bound, cap);
        return std::vector<unsigned>(counts.begin(), counts.end());
    }, py::arg("coeffs"), py::arg("elements"), py::arg("bound"), py::arg("cap") = 2);

    m.def("brute_force_count", [](const py::sequence& coeffs, const py::sequence& elements,
                                  const py::handle& n) {
        return brute_force_count(from_py_list(coeffs), from_py_list(elements), from_py(n));
    }, py::arg("coeffs"), py::arg("elements"), py::arg("n"));

    m.def("verify_unique_range", [](const std::string& spec, const std::string& which) {
        if (which != "i" && which != "ii")
            fail(Errc::InvalidArgument, "case must be 'i' or 'ii'");
        VerifyCase mode = which == "i" ? VerifyCase::I : VerifyCase::II;
        return report_dict(verify_unique_range(parse_chain_spec(spec), mode));
    }, py::arg("spec"), py::arg("case"));

    m.def("collision_from_witness",
          [](const py::sequence& coeffs, const std::vector<std::size_t>& first_indices,
             const std::vector<std::size_t>& second_indices, const py::sequence& first2,
             const py::sequence& second2) {
              return witness_dict(collision_from_witness(from_py_list(coeffs), first_indices,
                                                         second_indices, from_py_list(first2),
                                                         from_py_list(second2)));
          },
          py::arg("coeffs"), py::arg("first_indices"), py::arg("second_indices"),
          py::arg("first_elements"), py::arg("second_elements"));

    m.def("find_collision", [](const py::sequence& coeffs, const py::sequence& elements,
                               std::size_t bound) -> py::object {
        auto witness = find_collision(from_py_list(coeffs), from_py_list(elements), bound);
        if (!witness)
            return py::none();
        return witness_dict(*witness);
    }, py::arg("coeffs"), py::arg("elements"), py::arg("bound"));

    m.def("recover_base", [](const py::sequence& coeffs) {
        return to_py(recover_base(from_py_list(coeffs)));
    }, py::arg("coeffs"));

    m.def("extract_exponents", [](const py::sequence& coeffs, const py::handle& base) {
        return to_py_list(extract_exponents(from_py_list(coeffs), from_py(base)));
    }, py::arg("coeffs"), py::arg("base"));

    m.def("recover_blocks", [](const py::sequence& exponents, bool allow_uk_one) {
        return recover_blocks(from_py_list(exponents), allow_uk_one);
    }, py::arg("exponents"), py::arg("allow_uk_one") = false);

    m.def("recognize", [](const py::sequence& coeffs, const py::sequence& prefix,
                          const py::handle& prefix_bound) {
        return recognition_dict(
            recognize(from_py_list(coeffs), from_py_list(prefix), from_py(prefix_bound)));
    }, py::arg("coeffs"), py::arg("a_prefix"), py::arg("prefix_bound"));

    m.def("forced_elements", [](const py::sequence& coeffs, std::size_t bound) {
        return forced_dict(forced_elements(from_py_list(coeffs), bound));
    }, py::arg("coeffs"), py::arg("bound"));

    m.def("search_all", [](unsigned max_m, std::uint64_t max_coeff, std::size_t bound) {
        SearchReport report = search_all(max_m, max_coeff, bound);
        py::dict out;
        out["candidates"] = report.candidates;
        py::list survivors;
        for (const auto& entry : report.survivors) {
            py::dict row;
            row["coeffs"] = to_py_list(entry.coeffs);
            row["elements"] = to_py_list(entry.forced.elements);
            row["result"] = recognition_dict(entry.result);
            survivors.append(row);
        }
        out["survivors"] = survivors;
        return out;
    }, py::arg("max_m"), py::arg("max_coeff"), py::arg("bound"));
}
