#pragma once

#include <functional>

#include "nlscanon/util.hpp"

namespace nlscanon {

// Value and first/second space and first time derivatives of a complex field
// at one point. For fields on (xi, tau), read x as xi and t as tau.
struct FieldDerivs {
    complex_t value{};
    complex_t d_x{};
    complex_t d_xx{};
    complex_t d_t{};
};

// An evaluable complex amplitude over one space and one time coordinate,
// optionally carrying analytic derivatives. Evaluators are pure and
// thread-safe.
class ComplexField {
public:
    using Eval = std::function<complex_t(double x, double t)>;
    using EvalDerivs = std::function<FieldDerivs(double x, double t)>;

    ComplexField() = default;
    explicit ComplexField(Eval eval) : eval_(std::move(eval)) {}
    ComplexField(Eval eval, EvalDerivs derivs)
        : eval_(std::move(eval)), derivs_(std::move(derivs)) {}
    static ComplexField with_derivs(EvalDerivs derivs) {
        ComplexField f;
        f.derivs_ = std::move(derivs);
        f.eval_ = [d = f.derivs_](double x, double t) { return d(x, t).value; };
        return f;
    }

    complex_t operator()(double x, double t) const { return eval_(x, t); }
    bool has_derivatives() const { return static_cast<bool>(derivs_); }
    FieldDerivs derivs(double x, double t) const { return derivs_(x, t); }

private:
    Eval eval_;
    EvalDerivs derivs_;
};

} // namespace nlscanon
