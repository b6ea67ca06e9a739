#include "bidisk/source.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bidisk {

namespace {

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

} // namespace

SourceFunction::SourceFunction(Variant data) : data_(std::move(data)) {
    std::visit(
        [](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, ConstantSource>) {
                if (!finite(d.value)) throw std::invalid_argument("constant source: non-finite value");
            } else if constexpr (std::is_same_v<D, RadialSource>) {
                if (!std::all_of(d.coeffs.begin(), d.coeffs.end(), finite)) {
                    throw std::invalid_argument("radial source: non-finite coefficient");
                }
            } else {
                for (const auto& t : d.terms) {
                    if (t.i < 0 || t.j < 0 || t.i + t.j > kMaxPolyDegree) {
                        throw std::invalid_argument("poly source: term degree (" + std::to_string(t.i) + "," +
                                                    std::to_string(t.j) + ") outside total degree 0.." +
                                                    std::to_string(kMaxPolyDegree));
                    }
                    if (!finite(t.c)) throw std::invalid_argument("poly source: non-finite coefficient");
                }
            }
        },
        data_);
}

SourceFunction SourceFunction::constant(cplx value) { return SourceFunction(ConstantSource{value}); }
SourceFunction SourceFunction::radial(std::vector<cplx> coeffs) {
    return SourceFunction(RadialSource{std::move(coeffs)});
}
SourceFunction SourceFunction::poly(std::vector<PolyTerm> terms) {
    return SourceFunction(PolySource{std::move(terms)});
}

cplx SourceFunction::operator()(cplx w) const {
    if (const auto* c = std::get_if<ConstantSource>(&data_)) {
        return c->value;
    }
    if (const auto* r = std::get_if<RadialSource>(&data_)) {
        const double s = std::norm(w);
        cplx acc{};
        for (auto it = r->coeffs.rbegin(); it != r->coeffs.rend(); ++it) {
            acc = acc * s + *it;
        }
        return acc;
    }
    const auto& p = std::get<PolySource>(data_);
    double xp[kMaxPolyDegree + 1];
    double yp[kMaxPolyDegree + 1];
    xp[0] = yp[0] = 1.0;
    for (int n = 1; n <= kMaxPolyDegree; ++n) {
        xp[n] = xp[n - 1] * w.real();
        yp[n] = yp[n - 1] * w.imag();
    }
    cplx acc{};
    for (const auto& t : p.terms) {
        acc += t.c * (xp[t.i] * yp[t.j]);
    }
    return acc;
}

bool SourceFunction::is_zero() const {
    return std::visit(
        [](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, ConstantSource>) {
                return d.value == cplx{};
            } else if constexpr (std::is_same_v<D, RadialSource>) {
                return std::all_of(d.coeffs.begin(), d.coeffs.end(), [](cplx c) { return c == cplx{}; });
            } else {
                return std::all_of(d.terms.begin(), d.terms.end(), [](const PolyTerm& t) { return t.c == cplx{}; });
            }
        },
        data_);
}

SourceFunction SourceFunction::scaled(cplx factor) const {
    return std::visit(
        [&](auto d) -> SourceFunction {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, ConstantSource>) {
                d.value *= factor;
            } else if constexpr (std::is_same_v<D, RadialSource>) {
                for (auto& c : d.coeffs) c *= factor;
            } else {
                for (auto& t : d.terms) t.c *= factor;
            }
            return SourceFunction(std::move(d));
        },
        data_);
}

SourceFunction SourceFunction::conjugated() const {
    return std::visit(
        [&](auto d) -> SourceFunction {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, ConstantSource>) {
                d.value = std::conj(d.value);
            } else if constexpr (std::is_same_v<D, RadialSource>) {
                for (auto& c : d.coeffs) c = std::conj(c);
            } else {
                for (auto& t : d.terms) t.c = std::conj(t.c);
            }
            return SourceFunction(std::move(d));
        },
        data_);
}

double sup_norm(const SourceFunction& g) {
    if (const auto* c = std::get_if<ConstantSource>(&g.data())) {
        return std::abs(c->value);
    }
    constexpr int n_r = 128;
    constexpr int n_t = 256;
    double best = std::abs(g(cplx{}));
    for (int i = 1; i <= n_r; ++i) {
        const double r = static_cast<double>(i) / n_r;
        for (int j = 0; j < n_t; ++j) {
            best = std::max(best, std::abs(g(std::polar(r, 2.0 * std::numbers::pi * j / n_t))));
        }
    }
    return best * 1.001;
}

} // namespace bidisk
