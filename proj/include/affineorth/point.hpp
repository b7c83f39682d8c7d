#pragma once

// Chart points: fixed-dimension tuples of finite reals.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "affineorth/errors.hpp"

namespace affineorth {

class Point {
public:
    explicit Point(std::vector<double> coords) : c_(std::move(coords)) {
        if (c_.empty())
            throw ShapeError("Point: dimension must be at least 1");
        for (double x : c_)
            if (!std::isfinite(x))
                throw EvaluationError("Point: non-finite coordinate");
    }

    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

    static Point zero(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }

    Point shifted(std::size_t axis, double delta) const {
        std::vector<double> c = c_;
        c[axis] += delta;
        return Point(std::move(c));
    }

    bool operator==(const Point& o) const { return c_ == o.c_; }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < c_.size(); ++i)
            os << (i ? ", " : "") << c_[i];
        os << ")";
        return os.str();
    }

private:
    std::vector<double> c_;
};

} // namespace affineorth
