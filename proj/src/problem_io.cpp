#include "bidisk/problem_io.hpp"

#include <fstream>

namespace bidisk {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ProblemFormatError(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

cplx complex_from(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail("complex numbers are [re, im] arrays");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> complex_list(const json& j) {
    if (!j.is_array()) fail("expected an array of complex numbers");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(complex_from(v));
    return out;
}

int int_from(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

std::string type_of(const json& j) {
    const json& t = field(j, "type");
    if (!t.is_string()) fail("'type' must be a string");
    return t.get<std::string>();
}

// Library validation failures are reported as format errors.
template <class Fn>
auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ProblemFormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw ProblemFormatError(e.what());
    }
}

} // namespace

BoundaryFunction boundary_from_json(const json& j) {
    return guarded([&] {
        const std::string type = type_of(j);
        if (type == "fourier") {
            const json& coeffs = field(j, "coeffs");
            if (!coeffs.is_object()) fail("fourier coeffs must be an object keyed by mode");
            std::map<int, cplx> modes;
            for (const auto& [key, value] : coeffs.items()) {
                std::size_t used = 0;
                int k = 0;
                try {
                    k = std::stoi(key, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != key.size() || key.empty()) fail("bad fourier mode '" + key + "'");
                modes[k] += complex_from(value);
            }
            return BoundaryFunction::fourier(std::move(modes));
        }
        if (type == "two_arc")
            return BoundaryFunction::two_arc(complex_from(field(j, "upper")), complex_from(field(j, "lower")));
        if (type == "samples") return BoundaryFunction::samples(complex_list(field(j, "values")));
        fail("unknown boundary type '" + type + "'");
    });
}

SourceFunction source_from_json(const json& j) {
    return guarded([&] {
        const std::string type = type_of(j);
        if (type == "constant") return SourceFunction::constant(complex_from(field(j, "value")));
        if (type == "radial") return SourceFunction::radial(complex_list(field(j, "coeffs")));
        if (type == "poly") {
            const json& terms = field(j, "terms");
            if (!terms.is_array()) fail("poly terms must be an array");
            std::vector<PolyTerm> out;
            for (const auto& t : terms) out.push_back({int_from(t, "i"), int_from(t, "j"), complex_from(field(t, "c"))});
            return SourceFunction::poly(std::move(out));
        }
        fail("unknown source type '" + type + "'");
    });
}

QuadratureConfig quadrature_from_json(const json& j) {
    if (!j.is_object()) fail("quad must be an object");
    QuadratureConfig q;
    if (j.contains("n_theta")) q.n_theta = int_from(j, "n_theta");
    if (j.contains("n_radial")) q.n_radial = int_from(j, "n_radial");
    if (j.contains("per_arc")) {
        if (!j["per_arc"].is_boolean()) fail("per_arc must be a boolean");
        q.per_arc = j["per_arc"].get<bool>();
    }
    guarded([&] {
        q.validate();
        return 0;
    });
    return q;
}

BiharmonicProblem problem_from_json(const json& j) {
    if (!j.is_object()) fail("problem must be a JSON object");
    BiharmonicProblem p{boundary_from_json(field(j, "f")), boundary_from_json(field(j, "h")),
                        j.contains("g") ? source_from_json(j["g"]) : SourceFunction::constant(0.0), QuadratureConfig{}};
    if (j.contains("quad")) p.quad = quadrature_from_json(j["quad"]);
    return p;
}

BiharmonicProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open problem file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return problem_from_json(j);
}

json to_json(const BoundaryFunction& b) {
    return std::visit(
        [](const auto& d) -> json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FourierData>) {
                json coeffs = json::object();
                for (const auto& [k, c] : d.coeffs) coeffs[std::to_string(k)] = complex_json(c);
                return {{"type", "fourier"}, {"coeffs", coeffs}};
            } else if constexpr (std::is_same_v<T, TwoArcData>) {
                return {{"type", "two_arc"}, {"upper", complex_json(d.upper)}, {"lower", complex_json(d.lower)}};
            } else {
                json values = json::array();
                for (cplx v : d.values) values.push_back(complex_json(v));
                return {{"type", "samples"}, {"values", values}};
            }
        },
        b.data());
}

json to_json(const SourceFunction& g) {
    return std::visit(
        [](const auto& d) -> json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantSource>) {
                return {{"type", "constant"}, {"value", complex_json(d.value)}};
            } else if constexpr (std::is_same_v<T, RadialSource>) {
                json coeffs = json::array();
                for (cplx c : d.coeffs) coeffs.push_back(complex_json(c));
                return {{"type", "radial"}, {"coeffs", coeffs}};
            } else {
                json terms = json::array();
                for (const auto& t : d.terms) terms.push_back({{"i", t.i}, {"j", t.j}, {"c", complex_json(t.c)}});
                return {{"type", "poly"}, {"terms", terms}};
            }
        },
        g.data());
}

json to_json(const QuadratureConfig& q) {
    return {{"n_theta", q.n_theta}, {"n_radial", q.n_radial}, {"per_arc", q.per_arc}};
}

json to_json(const BiharmonicProblem& p) {
    return {{"f", to_json(p.f)}, {"h", to_json(p.h)}, {"g", to_json(p.g)}, {"quad", to_json(p.quad)}};
}

} // namespace bidisk
