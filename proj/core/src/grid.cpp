#include "nlhj/grid.hpp"

#include <algorithm>
#include <numeric>

namespace nlhj {

GridFunction::GridFunction(int n, double fill) : n_(n), v_(static_cast<size_t>(n), fill) {
    if (n <= 0) throw std::invalid_argument("GridFunction: grid size must be positive");
}

GridFunction GridFunction::sample(int n, const std::function<double(double)>& f) {
    GridFunction g(n);
    for (int i = 0; i < n; ++i) g[i] = f(g.x(i));
    return g;
}

double GridFunction::interp(double xq) const {
    double t = xq * n_;
    double fl = std::floor(t);
    double frac = t - fl;
    int base = wrap(static_cast<int64_t>(fl));
    int next = base + 1 == n_ ? 0 : base + 1;
    return (1.0 - frac) * v_[base] + frac * v_[next];
}

double GridFunction::max() const { return *std::max_element(v_.begin(), v_.end()); }
double GridFunction::min() const { return *std::min_element(v_.begin(), v_.end()); }

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (double t : v_) m = std::max(m, std::abs(t));
    return m;
}

double GridFunction::mean() const {
    double s = 0.0, c = 0.0;
    for (double t : v_) {  // Kahan
        double y = t - c;
        double u = s + y;
        c = (u - s) - y;
        s = u;
    }
    return s / n_;
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    GridFunction r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    GridFunction r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

GridFunction operator*(double s, const GridFunction& a) {
    GridFunction r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

GridFunction operator+(const GridFunction& a, double c) {
    GridFunction r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + c;
    return r;
}

GridFunction central_diff(const GridFunction& u) {
    int n = u.size();
    GridFunction r(n);
    double inv2h = 0.5 * n;
    for (int i = 0; i < n; ++i) r[i] = (u.at(i + 1) - u.at(i - 1)) * inv2h;
    return r;
}

GridFunction second_diff(const GridFunction& u) {
    int n = u.size();
    GridFunction r(n);
    double invh2 = static_cast<double>(n) * n;
    for (int i = 0; i < n; ++i) r[i] = (u.at(i + 1) - 2.0 * u[i] + u.at(i - 1)) * invh2;
    return r;
}

double forward_lipschitz(const GridFunction& u) {
    int n = u.size();
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, std::abs(u.at(i + 1) - u[i]));
    return m * n;
}

double sup_dist(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sup_dist: size mismatch");
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double torus_dist(double x, double y) {
    double d = std::abs(x - y);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

}  // namespace nlhj
