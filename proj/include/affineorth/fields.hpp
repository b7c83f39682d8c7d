#pragma once

// Scalar fields on a chart with first/second partial derivatives.
//
// A ScalarField is an immutable evaluable function on chart points. It either
// carries exact analytic partials (closed-form fields) or falls back to
// central differences with its own step size. Second partials are always
// obtained by differencing first partials with the same step.

#include <cmath>
#include <functional>
#include <span>
#include <string>

#include "affineorth/errors.hpp"
#include "affineorth/point.hpp"

namespace affineorth {

inline constexpr double kDefaultFdStep = 1e-5;

struct DifferentiationConfig {
    double fd_step = kDefaultFdStep;
    bool richardson = false;

    void validate() const {
        if (!(fd_step > 0.0) || fd_step > 1e-2)
            throw PreconditionError("DifferentiationConfig: fd_step must lie in (0, 1e-2]");
    }
};

// Central difference of g at offset 0, optionally with one Richardson step.
// g maps an offset along the differentiation direction to a sample value.
template <class F>
double central_difference(F&& g, const DifferentiationConfig& cfg) {
    const double h = cfg.fd_step;
    const double d_h = (g(h) - g(-h)) / (2.0 * h);
    if (!cfg.richardson)
        return d_h;
    const double d_h2 = (g(h / 2.0) - g(-h / 2.0)) / h;
    return (4.0 * d_h2 - d_h) / 3.0;
}

class ScalarField {
public:
    using Evaluator = std::function<double(const Point&)>;
    using PartialFn = std::function<double(std::size_t, const Point&)>;
    using DomainPredicate = std::function<bool(const Point&)>;

    // Field differentiated by central differences.
    static ScalarField from_function(Evaluator f, double fd_step = kDefaultFdStep) {
        return ScalarField(std::move(f), nullptr, nullptr, fd_step);
    }

    // Field with supplied analytic partials; df(axis, p) = ∂_axis f(p).
    static ScalarField with_exact_partials(Evaluator f, PartialFn df,
                                           double fd_step = kDefaultFdStep) {
        return ScalarField(std::move(f), std::move(df), nullptr, fd_step);
    }

    static ScalarField constant(double value) {
        return with_exact_partials([value](const Point&) { return value; },
                                   [](std::size_t, const Point&) { return 0.0; });
    }

    static ScalarField coordinate(std::size_t axis) {
        return with_exact_partials(
            [axis](const Point& p) {
                if (axis >= p.dim())
                    throw ShapeError("coordinate field: axis out of range");
                return p[axis];
            },
            [axis](std::size_t i, const Point&) { return i == axis ? 1.0 : 0.0; });
    }

    // Same field restricted to points where dom holds; evaluating elsewhere
    // raises EvaluationError. label is used in error messages.
    ScalarField restricted(DomainPredicate dom, std::string label = "") const;

    bool in_domain(const Point& p) const { return !domain_ || domain_(p); }

    double operator()(const Point& p) const {
        if (domain_ && !domain_(p))
            throw EvaluationError("field evaluated outside its domain" +
                                  (label_.empty() ? "" : " (" + label_ + ")") + " at " +
                                  p.to_string());
        const double v = eval_(p);
        if (!std::isfinite(v))
            throw EvaluationError("field produced a non-finite value at " + p.to_string());
        return v;
    }

    double partial(std::size_t axis, const Point& p) const {
        if (axis >= p.dim())
            throw ShapeError("partial: axis out of range");
        double v;
        if (exact_partial_) {
            v = exact_partial_(axis, p);
        } else {
            const ScalarField& f = *this;
            v = central_difference(
                [&](double t) { return f(p.shifted(axis, t)); },
                DifferentiationConfig{fd_step_, false});
        }
        if (!std::isfinite(v))
            throw EvaluationError("partial derivative is non-finite at " + p.to_string());
        return v;
    }

    // ∂_a ∂_b f, by differencing first partials with the field's own step.
    double second_partial(std::size_t a, std::size_t b, const Point& p) const {
        if (a >= p.dim() || b >= p.dim())
            throw ShapeError("second_partial: axis out of range");
        const double h = fd_step_;
        const double v =
            (partial(a, p.shifted(b, h)) - partial(a, p.shifted(b, -h))) / (2.0 * h);
        if (!std::isfinite(v))
            throw EvaluationError("second partial is non-finite at " + p.to_string());
        return v;
    }

    bool has_exact_partials() const { return static_cast<bool>(exact_partial_); }
    double fd_step() const { return fd_step_; }
    const DomainPredicate& domain() const { return domain_; }

private:
    ScalarField(Evaluator f, PartialFn df, DomainPredicate dom, double fd_step)
        : eval_(std::move(f)), exact_partial_(std::move(df)), domain_(std::move(dom)),
          fd_step_(fd_step) {
        if (!(fd_step_ > 0.0))
            throw PreconditionError("ScalarField: fd_step must be positive");
    }

    Evaluator eval_;
    PartialFn exact_partial_;
    DomainPredicate domain_;
    double fd_step_;
    std::string label_;

    friend ScalarField restrict_impl(const ScalarField&, DomainPredicate, std::string);
};

// Pointwise combinators. Exact partials propagate through product/chain rules
// whenever every input carries them; otherwise the result differentiates by
// central differences on the composite.
ScalarField add(const ScalarField& a, const ScalarField& b);
ScalarField multiply(const ScalarField& a, const ScalarField& b);
ScalarField scale(const ScalarField& a, double c);

// 1/a; requires a > 0 on the domain.
ScalarField reciprocal(const ScalarField& a);

// a^t; non-integer t requires a > 0. t = 0 and t = 1 are exact special cases.
ScalarField power(const ScalarField& a, double t);

// The field p ↦ ∂_axis a(p). Its own partials fall back to differencing.
ScalarField derivative(const ScalarField& a, std::size_t axis);

// Max over probes and axes of the relative disagreement between supplied
// exact partials and central differences. Zero for fields without exact
// partials. Denominator is clamped at 1 so near-zero derivatives do not
// inflate the ratio.
double max_partial_inconsistency(const ScalarField& f, std::span<const Point> probes);

} // namespace affineorth
