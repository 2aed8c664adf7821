// grid.hpp
// --------
// Periodic scalar fields on a uniform grid over the unit torus [0,1).
// Values live at x_i = i/n; all index arithmetic wraps mod n.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace nlhj {

class GridFunction {
public:
    GridFunction() = default;
    explicit GridFunction(int n, double fill = 0.0);

    static GridFunction sample(int n, const std::function<double(double)>& f);
    static GridFunction constant(int n, double c) { return GridFunction(n, c); }

    int size() const { return n_; }
    double h() const { return 1.0 / n_; }
    double x(int i) const { return static_cast<double>(i) / n_; }

    double& operator[](int i) { return v_[static_cast<size_t>(i)]; }
    double operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    // Wrapped access: at(i) == at(i mod n) for any integer i.
    double at(int64_t i) const { return v_[static_cast<size_t>(wrap(i))]; }
    int wrap(int64_t i) const {
        int64_t m = i % n_;
        return static_cast<int>(m < 0 ? m + n_ : m);
    }

    // Periodic linear interpolation at an arbitrary point (torus coordinates).
    double interp(double xq) const;

    double max() const;
    double min() const;
    double sup_norm() const;
    double mean() const;

    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

private:
    int n_ = 0;
    std::vector<double> v_;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double s, const GridFunction& a);
GridFunction operator+(const GridFunction& a, double c);

// Centered first derivative (u_{i+1} - u_{i-1}) / 2h.
GridFunction central_diff(const GridFunction& u);
// Second difference (u_{i+1} - 2u_i + u_{i-1}) / h^2.
GridFunction second_diff(const GridFunction& u);
// Max forward difference-quotient magnitude, max_i |u_{i+1}-u_i|/h.
double forward_lipschitz(const GridFunction& u);

double sup_dist(const GridFunction& a, const GridFunction& b);

// Distance on the torus, |x-y| with wraparound, in [0, 1/2].
double torus_dist(double x, double y);

}  // namespace nlhj
