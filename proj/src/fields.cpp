#include "affineorth/fields.hpp"

#include <algorithm>
#include <cmath>

namespace affineorth {

ScalarField restrict_impl(const ScalarField& f, ScalarField::DomainPredicate dom,
                          std::string label) {
    ScalarField g = f;
    if (g.domain_) {
        auto prev = g.domain_;
        g.domain_ = [prev, dom](const Point& p) { return prev(p) && dom(p); };
    } else {
        g.domain_ = std::move(dom);
    }
    g.label_ = std::move(label);
    return g;
}

ScalarField ScalarField::restricted(DomainPredicate dom, std::string label) const {
    return restrict_impl(*this, std::move(dom), std::move(label));
}

namespace {

ScalarField::DomainPredicate merge_domains(const ScalarField& a, const ScalarField& b) {
    const auto& da = a.domain();
    const auto& db = b.domain();
    if (da && db)
        return [da, db](const Point& p) { return da(p) && db(p); };
    return da ? da : db;
}

double merged_step(const ScalarField& a, const ScalarField& b) {
    return std::min(a.fd_step(), b.fd_step());
}

bool is_integer(double t) { return std::floor(t) == t && std::isfinite(t); }

} // namespace

ScalarField add(const ScalarField& a, const ScalarField& b) {
    auto eval = [a, b](const Point& p) { return a(p) + b(p); };
    ScalarField out =
        (a.has_exact_partials() && b.has_exact_partials())
            ? ScalarField::with_exact_partials(
                  eval,
                  [a, b](std::size_t i, const Point& p) {
                      return a.partial(i, p) + b.partial(i, p);
                  },
                  merged_step(a, b))
            : ScalarField::from_function(eval, merged_step(a, b));
    if (auto dom = merge_domains(a, b))
        out = out.restricted(dom);
    return out;
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
    auto eval = [a, b](const Point& p) { return a(p) * b(p); };
    ScalarField out =
        (a.has_exact_partials() && b.has_exact_partials())
            ? ScalarField::with_exact_partials(
                  eval,
                  [a, b](std::size_t i, const Point& p) {
                      return a.partial(i, p) * b(p) + a(p) * b.partial(i, p);
                  },
                  merged_step(a, b))
            : ScalarField::from_function(eval, merged_step(a, b));
    if (auto dom = merge_domains(a, b))
        out = out.restricted(dom);
    return out;
}

ScalarField scale(const ScalarField& a, double c) { return multiply(ScalarField::constant(c), a); }

ScalarField reciprocal(const ScalarField& a) {
    auto eval = [a](const Point& p) {
        const double v = a(p);
        if (!(v > 0.0))
            throw EvaluationError("reciprocal: field is not strictly positive at " +
                                  p.to_string());
        return 1.0 / v;
    };
    ScalarField out =
        a.has_exact_partials()
            ? ScalarField::with_exact_partials(
                  eval,
                  [a](std::size_t i, const Point& p) {
                      const double v = a(p);
                      return -a.partial(i, p) / (v * v);
                  },
                  a.fd_step())
            : ScalarField::from_function(eval, a.fd_step());
    if (const auto& dom = a.domain())
        out = out.restricted(dom);
    return out;
}

ScalarField power(const ScalarField& a, double t) {
    if (t == 0.0) {
        ScalarField one = ScalarField::constant(1.0);
        if (const auto& dom = a.domain())
            one = one.restricted(dom);
        return one;
    }
    if (t == 1.0)
        return a;

    const bool integer_exponent = is_integer(t);
    auto eval = [a, t, integer_exponent](const Point& p) {
        const double v = a(p);
        if (!integer_exponent && !(v > 0.0))
            throw EvaluationError("power: non-integer exponent of a non-positive value at " +
                                  p.to_string());
        return std::pow(v, t);
    };
    ScalarField out =
        a.has_exact_partials()
            ? ScalarField::with_exact_partials(
                  eval,
                  [a, t, integer_exponent](std::size_t i, const Point& p) {
                      const double v = a(p);
                      if (!integer_exponent && !(v > 0.0))
                          throw EvaluationError(
                              "power: non-integer exponent of a non-positive value at " +
                              p.to_string());
                      return t * std::pow(v, t - 1.0) * a.partial(i, p);
                  },
                  a.fd_step())
            : ScalarField::from_function(eval, a.fd_step());
    if (const auto& dom = a.domain())
        out = out.restricted(dom);
    return out;
}

ScalarField derivative(const ScalarField& a, std::size_t axis) {
    ScalarField out = ScalarField::from_function(
        [a, axis](const Point& p) { return a.partial(axis, p); }, a.fd_step());
    if (const auto& dom = a.domain())
        out = out.restricted(dom);
    return out;
}

double max_partial_inconsistency(const ScalarField& f, std::span<const Point> probes) {
    if (!f.has_exact_partials())
        return 0.0;
    double worst = 0.0;
    for (const Point& p : probes) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            const double exact = f.partial(i, p);
            const double fd = central_difference(
                [&](double t) { return f(p.shifted(i, t)); },
                DifferentiationConfig{f.fd_step(), false});
            const double denom = std::max({1.0, std::abs(exact), std::abs(fd)});
            worst = std::max(worst, std::abs(exact - fd) / denom);
        }
    }
    return worst;
}

} // namespace affineorth
