#pragma once

#include "qwalk/enumerate.hpp"
#include "qwalk/model.hpp"
#include "qwalk/series.hpp"

#include <string>
#include <vector>

namespace qwalk {

// Kernel of the step-by-step functional equation,
//   K(x,y;t) = x^a y^p (1 - t S(x,y)),
// where S is the step polynomial, a the largest left move and p the
// largest down move.  Stored as the exact pair (t^0 part, t^1 part).
struct Kernel {
    StepSet steps;
    int x_shift;  // a
    int y_shift;  // p
    LaurentPoly head;  // x^a y^p
    LaurentPoly tail;  // -x^a y^p S(x,y)

    int x_degree() const;
    int y_degree() const;
    TSeries as_series(int order) const;
    // Coefficient of y^m as a series in t with univariate-in-x coefficients.
    TSeries y_coeff_series(int m, int order) const;
    // Coefficient of x^i with the roles of the variables swapped, so the
    // result is again a univariate series (in the remaining variable).
    TSeries x_coeff_series_swapped(int i, int order) const;
};

Kernel build_kernel(const StepSet& steps);

// K(xv, yv); both arguments must have nonnegative-exponent coefficients.
TSeries kernel_at(const Kernel& k, const TSeries& xv, const TSeries& yv);

// The unique root in y vanishing at t = 0, by Newton iteration from
// y = 0.  Requires largest_down_move == 1; when the kernel is quadratic
// in y the result is cross-checked against the quadratic formula
// evaluated with sqrt_series.
TSeries y_root_vanishing(const Kernel& k, int order);

// Elementary symmetric functions of the two y-roots, read off the kernel
// coefficients: e1 = Y0 + Y1, e2 = Y0 * Y1.  Quadratic-in-y kernels only.
struct KernelSymmetric {
    TSeries e1, e2;
};
KernelSymmetric symmetric_functions(const Kernel& k, int order);

struct OrbitPair {
    TSeries x_part, y_part;
    std::string provenance;  // "start", or the involution that produced it
    // Certified by the conservative valuation rule: both components have
    // nonnegative t-valuation, so they may be substituted into the main
    // equation for any quadrant model.  Pairs with a negative-valuation
    // component may still be substitutable for specific step sets; such
    // substitutions are justified case by case with a degree bound.
    bool substitutable = false;
    int verified_order = 0;  // K(X,Y) == 0 checked through this order
};

// Alternately applies the two root-swapping involutions to (x, Y0),
// collecting the pairs that cancel the kernel, until the orbit closes or
// max_size pairs were produced.  Requires a kernel quadratic in both
// variables.  Throws when the working order is too low to decide that a
// pair repeats.
std::vector<OrbitPair> orbit(const Kernel& k, int max_size, int order);

// K * Q - RHS for the model's own functional equation, with Q and its
// boundary sections taken from the table.  Zero through the table order
// iff the table satisfies the equation.
TSeries functional_equation_residual(const ModelSpec& model, const WalkTable& table);

// Same residual built from the generic equation for a y-symmetric step
// set with small horizontal variations (any start point).
TSeries generic_equation_residual(const WalkTable& table);

struct IdentityResult {
    std::string name;
    int order_checked = 0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityResult> items;
    bool all_pass() const;
};

// Runs the kernel-method identities that the model's boundary series
// satisfy, each verified through the largest order the inputs support:
// the root relation R(x) + R(Y0) = x Y0; for the square model the mirror
// difference R(x) - R(1/x) = (x - 1/x) Y0; for Kreweras' model the second
// root relation, the product of the two root relations, its positive
// part (which is the quadratic equation for Q(x,0)), and the quadratic
// equation itself.  root_order controls how far the kernel roots are
// expanded.
IdentityReport verify_kernel_identities(const ModelSpec& model, const WalkTable& table,
                                        int root_order);

// Evaluates a symmetric polynomial f(u,v) (u mapped to x, v to y,
// nonnegative exponents) at the two kernel roots and reports whether the
// coefficients involve only nonpositive x-exponents and whether the
// exponent-0 part equals f(0,0).  The result may carry finitely many
// negative t-powers (the root sum itself does); they must have no
// exponent-0 part.
struct SymmetricEvalCheck {
    bool xbar_only = false;
    bool constant_part_matches = false;
    int valuation = 0;  // informational
    int order_checked = 0;
    bool pass() const { return xbar_only && constant_part_matches; }
};
SymmetricEvalCheck check_symmetric_root_evaluation(const LaurentPoly& f, const TSeries& y0,
                                                   const TSeries& y1);

}  // namespace qwalk
