// levy.hpp
// --------
// Jump measures, jump functions, and the nonlocal operator
//
//   I u(x) = \int ( u(x + j(x,z)) - u(x) - 1_{|z|<1} <j(x,z), Du(x)> ) nu(dz)
//
// discretized on the periodic grid. A QuadraturePlan splits the z-axis into
// three zones:
//   core     |z| <  delta : replaced by the second-order surrogate
//                           (1/2) u''(x) m2(x),  m2(x) = \int_{|z|<delta} j(x,z)^2 nu(dz)
//   annulus  delta <= |z| < R : explicit nodes, gradient compensator active
//                           exactly on |z| < 1
//   tail     |z| >= R     : explicit nodes out to r_max; the remaining mass
//                           nu(|z| > r_max) acts through the periodic average,
//                           remainder * (mean(u) - u(x))
// Atoms and tabulated nodes are always placed exactly, regardless of zone.
// Displaced evaluations use periodic linear interpolation (convex weights),
// which keeps every off-diagonal coefficient of the discrete operator
// nonnegative.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlhj/grid.hpp"

namespace nlhj {

struct LevyAtom {
    double z = 0.0;
    double w = 0.0;
};

class LevyMeasure {
public:
    enum class Kind { None, Atoms, PowerDensity, Tabulated };

    static LevyMeasure none();
    static LevyMeasure atoms(std::vector<LevyAtom> atoms, double c_nu_declared = 0.0);
    // Density scale * |z|^{-(1+s)} dz on the line, s in (0,2).
    static LevyMeasure power_density(double s, double scale = 1.0, double c_nu_declared = 0.0);
    static LevyMeasure tabulated(std::vector<LevyAtom> nodes, double c_nu_declared = 0.0);

    Kind kind() const { return kind_; }
    const std::vector<LevyAtom>& point_masses() const { return atoms_; }
    double s() const { return s_; }
    double scale() const { return scale_; }
    bool has_density() const { return kind_ == Kind::PowerDensity; }
    bool is_zero() const { return kind_ == Kind::None; }

    // \int (1 ^ z^2) nu(dz), in closed form.
    double integrability_value() const;
    // Declared bound for the integrability integral.
    double c_nu() const { return c_nu_; }

    // Density-only helpers (zero for atomic/tabulated kinds), both sides:
    double density_mass(double a, double b) const;           // nu(a < |z| < b)
    double density_second_moment(double a, double b) const;  // \int_{a<|z|<b} z^2 nu
    double density_abs_first_moment(double a, double b) const;  // \int_{a<|z|<b} |z| nu
    // One-sided signed first moment over [a,b], 0 < a < b (right half-line).
    double density_first_moment_right(double a, double b) const;

    double tail_cutoff = 8.0;  // default zone boundary R for plans

private:
    Kind kind_ = Kind::None;
    std::vector<LevyAtom> atoms_;
    double s_ = 0.0;
    double scale_ = 0.0;
    double c_nu_ = 0.0;
};

class JumpFunction {
public:
    // General jump j(x,z); declared growth constant C_j for |j| <= C_j |z|
    // and |j(x,z)-j(y,z)| <= C_j |x-y| |z|.
    static JumpFunction identity();
    // j(x,z) = factor(x) * z.
    static JumpFunction scaled(std::function<double(double)> factor, double c_j,
                               std::optional<double> c0 = std::nullopt);
    static JumpFunction general(std::function<double(double, double)> j, double c_j,
                                std::optional<double> c0 = std::nullopt);

    double operator()(double x, double z) const { return eval_(x, z); }
    bool x_independent() const { return x_independent_; }
    bool linear_in_z() const { return static_cast<bool>(factor_); }
    double factor_at(double x) const { return factor_ ? factor_(x) : 1.0; }

    double c_j = 1.0;
    std::optional<double> c0;   // full-range x-Lipschitz constant, when declared
    std::optional<double> c_r;  // tail x-Lipschitz constant, when declared

private:
    std::function<double(double, double)> eval_;
    std::function<double(double)> factor_;
    bool x_independent_ = true;
};

struct PlanNode {
    double z = 0.0;       // representative jump size (cell centroid or atom)
    double w = 0.0;       // nu-mass carried by the node
    bool compensated = false;  // true iff |z| < 1
};

struct Displacement {
    int base = 0;       // wrapped grid index of the left interpolation node
    double frac = 0.0;  // in [0,1); weights (1-frac, frac)
};

class QuadraturePlan {
public:
    int n = 0;
    double delta = 0.0;
    double r = 0.0;      // zone boundary between annulus and tail
    double r_max = 0.0;  // last explicitly resolved jump size
    std::vector<PlanNode> nodes;
    std::vector<double> edges;  // cell edges used for the density (one side)

    std::vector<double> m2;    // per grid point, core second-moment mass
    std::vector<double> beta;  // per grid point, compensator drift sum_{|z|<1} w j(x,z)

    double node_mass = 0.0;        // sum of node weights
    double remainder_mass = 0.0;   // nu(|z| > r_max), density part
    double tail_mass_beyond_r = 0.0;  // nu(|z| >= R), density part; the recorded
                                      // truncation bound is 2*||phi||_inf times this

    bool shift_invariant = false;
    // shift_invariant: one displacement per node, target = i + base (relative).
    std::vector<Displacement> disp;
    // general: disp_xy[i][k] with absolute wrapped base index.
    std::vector<std::vector<Displacement>> disp_xy;

    int annulus_node_count() const;
    int tail_node_count() const;
    double cfl_mass() const { return node_mass + remainder_mass; }
};

struct PlanOptions {
    int nodes_per_decade = 64;
    double r_max_factor = 16.0;        // r_max = max(r_max_factor * R, r_max_min)
    double r_max_min = 128.0;
    std::vector<double> forced_edges;  // extra cell edges (e.g. for split tests)
};

QuadraturePlan build_quadrature_plan(const LevyMeasure& measure, const JumpFunction& jump,
                                     int n, double delta, double r,
                                     const PlanOptions& opts = {});

// I phi on the whole grid; dphi and d2phi must be consistent derivatives of
// phi (analytic samples or central differences).
GridFunction apply_operator(const QuadraturePlan& plan, const GridFunction& phi,
                            const GridFunction& dphi, const GridFunction& d2phi,
                            int nthreads = 1);

// Single-point form I(u, p, x_i) with an explicit compensator slope p; the
// core surrogate uses the discrete second difference of u.
double apply_u_form(const QuadraturePlan& plan, const GridFunction& u, double p, int i);

// Split at delta_split in (0,1): the first component integrates the smooth
// test data (phi, dphi, d2phi) over |z| < delta_split, the second integrates
// u itself outside, with compensator slope p on delta_split <= |z| < 1.
// delta_split must equal the plan's core radius or one of its cell edges.
std::pair<double, double> apply_operator_split(const QuadraturePlan& plan,
                                               const GridFunction& phi, const GridFunction& dphi,
                                               const GridFunction& d2phi, const GridFunction& u,
                                               double p, int i, double delta_split);

// Quadrature on the same zone structure but with exact (callable) evaluation
// of the displaced values; no grid, no interpolation. Used by refined
// reference computations.
struct AnalyticOperatorOptions {
    double delta = 0.025;
    double r = 8.0;
    int nodes_per_decade = 64;
    double r_max_factor = 16.0;
    double r_max_min = 128.0;
};

double apply_operator_analytic(const LevyMeasure& measure, const JumpFunction& jump,
                               const std::function<double(double)>& f,
                               const std::function<double(double)>& df,
                               const std::function<double(double)>& d2f, double f_mean, double x,
                               const AnalyticOperatorOptions& opts);

struct ConditionCheck {
    std::string name;
    double worst_ratio = 0.0;  // measured / declared; violation when > 1 + 1e-9
    double declared = 0.0;
    double value = 0.0;  // measured quantity behind the worst ratio
    bool pass = true;
    std::string note;
};

struct ValidationReport {
    std::vector<ConditionCheck> checks;
    bool pass = true;
    const ConditionCheck* find(const std::string& name) const;
};

struct SamplePlan {
    std::vector<double> xs;  // base points on the torus
    std::vector<double> zs;  // jump sizes probed for pointwise bounds
    static SamplePlan standard();
};

// Numerical audit of the standing assumptions: integrability of 1 ^ z^2
// against the declared bound, linear growth and x-Lipschitz bounds of the
// jump function, and the tail / full-range x-Lipschitz integrals.
ValidationReport validate_levy_spec(const LevyMeasure& measure, const JumpFunction& jump,
                                    const SamplePlan& samples);

}  // namespace nlhj
