#include "bidisk/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bidisk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSupGrid = 4096;
constexpr double kSupSafety = 1.001;

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

cplx eval_modes(const std::map<int, cplx>& modes, double theta) {
    cplx acc{};
    for (const auto& [k, c] : modes) {
        acc += c * std::polar(1.0, k * theta);
    }
    return acc;
}

std::map<int, cplx> interpolation_modes(const std::vector<cplx>& v) {
    const int n = static_cast<int>(v.size());
    const int half = n / 2;
    std::map<int, cplx> modes;
    for (int k = -half + 1; k <= half; ++k) {
        cplx acc{};
        for (int j = 0; j < n; ++j) {
            acc += v[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * kPi * k * j / n);
        }
        modes[k] = acc / static_cast<double>(n);
    }
    const cplx nyquist = modes[half];
    modes[half] = 0.5 * nyquist;
    modes[-half] = 0.5 * nyquist;
    return modes;
}

} // namespace

BoundaryFunction::BoundaryFunction(Variant data) : data_(std::move(data)) {
    validate();
    if (const auto* s = std::get_if<SampledData>(&data_)) {
        sample_modes_ = interpolation_modes(s->values);
    }
}

void BoundaryFunction::validate() const {
    if (const auto* f = std::get_if<FourierData>(&data_)) {
        for (const auto& [k, c] : f->coeffs) {
            if (std::abs(k) > kMaxFourierDegree) {
                throw std::invalid_argument("fourier boundary data: |k| = " + std::to_string(std::abs(k)) +
                                            " exceeds " + std::to_string(kMaxFourierDegree));
            }
            if (!finite(c)) {
                throw std::invalid_argument("fourier boundary data: non-finite coefficient");
            }
        }
    } else if (const auto* t = std::get_if<TwoArcData>(&data_)) {
        if (!finite(t->upper) || !finite(t->lower)) {
            throw std::invalid_argument("two_arc boundary data: non-finite value");
        }
    } else if (const auto* s = std::get_if<SampledData>(&data_)) {
        if (s->values.size() < 64 || !is_power_of_two(s->values.size())) {
            throw std::invalid_argument("sampled boundary data: N must be a power of two >= 64, got " +
                                        std::to_string(s->values.size()));
        }
        if (!std::all_of(s->values.begin(), s->values.end(), finite)) {
            throw std::invalid_argument("sampled boundary data: non-finite sample");
        }
    }
}

BoundaryFunction BoundaryFunction::fourier(std::map<int, cplx> coeffs) {
    return BoundaryFunction(FourierData{std::move(coeffs)});
}

BoundaryFunction BoundaryFunction::constant(cplx value) { return fourier({{0, value}}); }

BoundaryFunction BoundaryFunction::two_arc(cplx upper, cplx lower) {
    return BoundaryFunction(TwoArcData{upper, lower});
}

BoundaryFunction BoundaryFunction::samples(std::vector<cplx> values) {
    return BoundaryFunction(SampledData{std::move(values)});
}

cplx BoundaryFunction::operator()(double theta) const {
    if (const auto* f = std::get_if<FourierData>(&data_)) {
        return eval_modes(f->coeffs, theta);
    }
    if (const auto* t = std::get_if<TwoArcData>(&data_)) {
        const double a = theta - 2.0 * kPi * std::floor(theta / (2.0 * kPi));
        return a < kPi ? t->upper : t->lower;
    }
    return eval_modes(sample_modes_, theta);
}

std::vector<double> BoundaryFunction::breakpoints() const {
    if (is_two_arc()) {
        return {0.0, kPi};
    }
    return {};
}

std::map<int, cplx> BoundaryFunction::fourier_coefficients(int max_degree) const {
    if (const auto* f = std::get_if<FourierData>(&data_)) {
        return f->coeffs;
    }
    if (const auto* t = std::get_if<TwoArcData>(&data_)) {
        // (1/2pi)[int_0^pi upper e^{-ik t} dt + int_pi^2pi lower e^{-ik t} dt]
        std::map<int, cplx> out;
        out[0] = 0.5 * (t->upper + t->lower);
        for (int k = 1; k <= max_degree; k += 2) {
            const cplx ck = (t->upper - t->lower) / cplx(0.0, kPi * k);
            out[k] = ck;
            out[-k] = -ck;
        }
        return out;
    }
    return sample_modes_;
}

BoundaryFunction BoundaryFunction::scaled(cplx factor) const {
    return std::visit(
        [&](const auto& d) -> BoundaryFunction {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FourierData>) {
                FourierData out = d;
                for (auto& [k, c] : out.coeffs) c *= factor;
                return BoundaryFunction(std::move(out));
            } else if constexpr (std::is_same_v<D, TwoArcData>) {
                return BoundaryFunction(TwoArcData{d.upper * factor, d.lower * factor});
            } else {
                SampledData out = d;
                for (auto& v : out.values) v *= factor;
                return BoundaryFunction(std::move(out));
            }
        },
        data_);
}

BoundaryFunction BoundaryFunction::shifted(cplx offset) const {
    return std::visit(
        [&](const auto& d) -> BoundaryFunction {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FourierData>) {
                FourierData out = d;
                out.coeffs[0] += offset;
                return BoundaryFunction(std::move(out));
            } else if constexpr (std::is_same_v<D, TwoArcData>) {
                return BoundaryFunction(TwoArcData{d.upper + offset, d.lower + offset});
            } else {
                SampledData out = d;
                for (auto& v : out.values) v += offset;
                return BoundaryFunction(std::move(out));
            }
        },
        data_);
}

BoundaryFunction BoundaryFunction::conjugated() const {
    return std::visit(
        [&](const auto& d) -> BoundaryFunction {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FourierData>) {
                // conj(sum c_k e^{ik t}) = sum conj(c_{-k}) e^{ik t}
                FourierData out;
                for (const auto& [k, c] : d.coeffs) out.coeffs[-k] = std::conj(c);
                return BoundaryFunction(std::move(out));
            } else if constexpr (std::is_same_v<D, TwoArcData>) {
                return BoundaryFunction(TwoArcData{std::conj(d.upper), std::conj(d.lower)});
            } else {
                SampledData out = d;
                for (auto& v : out.values) v = std::conj(v);
                return BoundaryFunction(std::move(out));
            }
        },
        data_);
}

BoundaryFunction operator+(const BoundaryFunction& a, const BoundaryFunction& b) {
    const auto& da = a.data();
    const auto& db = b.data();
    if (const auto* fa = std::get_if<FourierData>(&da)) {
        if (const auto* fb = std::get_if<FourierData>(&db)) {
            auto coeffs = fa->coeffs;
            for (const auto& [k, c] : fb->coeffs) coeffs[k] += c;
            return BoundaryFunction::fourier(std::move(coeffs));
        }
    }
    if (const auto* ta = std::get_if<TwoArcData>(&da)) {
        if (const auto* tb = std::get_if<TwoArcData>(&db)) {
            return BoundaryFunction::two_arc(ta->upper + tb->upper, ta->lower + tb->lower);
        }
    }
    if (const auto* sa = std::get_if<SampledData>(&da)) {
        if (const auto* sb = std::get_if<SampledData>(&db); sb && sb->values.size() == sa->values.size()) {
            auto values = sa->values;
            for (std::size_t i = 0; i < values.size(); ++i) values[i] += sb->values[i];
            return BoundaryFunction::samples(std::move(values));
        }
    }
    throw std::invalid_argument("boundary function sum: representations differ");
}

double sup_norm(const BoundaryFunction& b) {
    if (const auto* t = std::get_if<TwoArcData>(&b.data())) {
        return std::max(std::abs(t->upper), std::abs(t->lower));
    }
    if (const auto* f = std::get_if<FourierData>(&b.data())) {
        if (f->coeffs.empty()) {
            return 0.0;
        }
        if (f->coeffs.size() == 1 && f->coeffs.begin()->first == 0) {
            return std::abs(f->coeffs.begin()->second);
        }
    }
    double best = 0.0;
    for (int j = 0; j < kSupGrid; ++j) {
        best = std::max(best, std::abs(b(2.0 * kPi * j / kSupGrid)));
    }
    return best * kSupSafety;
}

double sup_norm_sum(const BoundaryFunction& a, const BoundaryFunction& b) {
    const auto* ta = std::get_if<TwoArcData>(&a.data());
    const auto* tb = std::get_if<TwoArcData>(&b.data());
    if (ta && tb) {
        return std::max(std::abs(ta->upper + tb->upper), std::abs(ta->lower + tb->lower));
    }
    double best = 0.0;
    for (int j = 0; j < kSupGrid; ++j) {
        const double t = 2.0 * kPi * j / kSupGrid;
        best = std::max(best, std::abs(a(t) + b(t)));
    }
    // A jump in either summand: sample just inside each arc end as well.
    for (const auto& src : {a.breakpoints(), b.breakpoints()}) {
        for (double t : src) {
            for (double eps : {-1e-12, 1e-12}) {
                best = std::max(best, std::abs(a(t + eps) + b(t + eps)));
            }
        }
    }
    return best * kSupSafety;
}

} // namespace bidisk
