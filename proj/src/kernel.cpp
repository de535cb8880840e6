#include "qwalk/kernel.hpp"

#include <algorithm>

namespace qwalk {

int Kernel::x_degree() const {
    return std::max(head.is_zero() ? 0 : head.max_ex(), tail.is_zero() ? 0 : tail.max_ex());
}

int Kernel::y_degree() const {
    return std::max(head.is_zero() ? 0 : head.max_ey(), tail.is_zero() ? 0 : tail.max_ey());
}

TSeries Kernel::as_series(int order) const {
    return TSeries::from_poly(head, order) + TSeries::term(tail, 1, order);
}

TSeries Kernel::y_coeff_series(int m, int order) const {
    return TSeries::from_poly(head.coeff_of_y(m), order) +
           TSeries::term(tail.coeff_of_y(m), 1, order);
}

TSeries Kernel::x_coeff_series_swapped(int i, int order) const {
    return TSeries::from_poly(head.coeff_of_x(i).swap_xy().promoted(Vars::X), order) +
           TSeries::term(tail.coeff_of_x(i).swap_xy().promoted(Vars::X), 1, order);
}

Kernel build_kernel(const StepSet& steps) {
    Kernel k{steps, steps.largest_left_move(), steps.largest_down_move(),
             LaurentPoly(Vars::XY), LaurentPoly(Vars::XY)};
    k.head = LaurentPoly::monomial(Rat(1), k.x_shift, k.y_shift, Vars::XY);
    k.tail = -(k.head * steps.step_polynomial());
    return k;
}

namespace {

// Sum of c * xv^i * yv^j over the monomials of p; exponents must be
// nonnegative.
TSeries eval_bivariate(const LaurentPoly& p, const TSeries& xv, const TSeries& yv, int order) {
    int max_i = 0, max_j = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m.ex < 0 || m.ey < 0)
            throw SeriesError("eval_bivariate: negative exponent");
        max_i = std::max(max_i, m.ex);
        max_j = std::max(max_j, m.ey);
    }
    std::vector<TSeries> xp{TSeries::one(order, xv.vars())};
    for (int i = 1; i <= max_i; ++i) xp.push_back(xp.back() * xv);
    std::vector<TSeries> yp{TSeries::one(order, yv.vars())};
    for (int j = 1; j <= max_j; ++j) yp.push_back(yp.back() * yv);

    bool first = true;
    TSeries acc;
    for (const auto& [m, c] : p.terms()) {
        TSeries term = (xp[static_cast<std::size_t>(m.ex)] * yp[static_cast<std::size_t>(m.ey)]) * c;
        acc = first ? term : acc + term;
        first = false;
    }
    if (first) acc = TSeries::zero(xv.vars(), order);
    return acc;
}

}  // namespace

TSeries kernel_at(const Kernel& k, const TSeries& xv, const TSeries& yv) {
    const int order = std::min(xv.order(), yv.order());
    return eval_bivariate(k.head, xv, yv, order) +
           eval_bivariate(k.tail, xv, yv, order).shifted_t(1);
}

namespace {

// Splits a monomial coefficient c * x^e * y^f * t^v into its square root;
// all parts must be even/square.
LaurentPoly monomial_sqrt(const LaurentPoly& lead, int tval, int* half_tval) {
    const auto& [mono, c] = *lead.terms().begin();
    if (tval % 2 != 0 || mono.ex % 2 != 0 || mono.ey % 2 != 0)
        throw SeriesError("quadratic formula: leading discriminant term is not a square");
    Rat root;
    {
        BigInt num = c.get_num(), den = c.get_den();
        if (sgn(num) < 0 || mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
            mpz_perfect_square_p(den.get_mpz_t()) == 0)
            throw SeriesError("quadratic formula: leading discriminant term is not a square");
        BigInt rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        root = Rat(rn) / Rat(rd);
    }
    *half_tval = tval / 2;
    return LaurentPoly::monomial(root, mono.ex / 2, mono.ey / 2, lead.vars());
}

// Root of a y^2 + b y + c vanishing at t = 0, via the quadratic formula
// in the rationalized form 2c / (-b - sqrt(b^2 - 4ac)).  The denominator
// keeps a monomial leading coefficient (the kernel head), so it is
// invertible in the Laurent coefficient ring even when a itself is not.
TSeries quadratic_vanishing_root(const TSeries& a, const TSeries& b, const TSeries& c) {
    const TSeries disc = b * b - a * c * Rat(4);
    if (disc.known_zero()) throw SeriesError("quadratic formula: zero discriminant");
    const LaurentPoly lead = disc.coeff_poly(disc.valuation());
    if (!lead.is_monomial())
        throw SeriesError("quadratic formula: discriminant lead is not a monomial");
    int half_tval = 0;
    const LaurentPoly m = monomial_sqrt(lead, disc.valuation(), &half_tval);
    const LaurentPoly m_inv_sq =
        LaurentPoly::monomial(Rat(1) / (lead.terms().begin()->second),
                              -lead.terms().begin()->first.ex, -lead.terms().begin()->first.ey,
                              lead.vars());
    const TSeries normalized = (disc * m_inv_sq).shifted_t(-disc.valuation());
    const TSeries sqrt_disc = (sqrt_series(normalized) * m).shifted_t(half_tval);
    for (int sign = -1; sign <= 1; sign += 2) {
        const TSeries den = -b + sqrt_disc * Rat(sign);
        if (den.known_zero() || den.valuation() != 0 || !den.coeff_poly(0).is_monomial()) continue;
        const TSeries root = c * Rat(2) * den.reciprocal();
        if (root.known_zero() || root.valuation() >= 1) return root;
    }
    throw SeriesError("quadratic formula: no root vanishing at t = 0");
}

}  // namespace

TSeries y_root_vanishing(const Kernel& k, int order) {
    if (k.steps.largest_down_move() != 1)
        throw SeriesError("y_root_vanishing: largest down move must be 1 (got " +
                          std::to_string(k.steps.largest_down_move()) + ")");
    const int deg = k.y_degree();
    SeriesPoly p;
    for (int m = 0; m <= deg; ++m) p.coeffs.push_back(k.y_coeff_series(m, order));
    const TSeries root = newton_root(p, LaurentPoly(Vars::X), order);

    if (deg == 2) {
        const TSeries alt = quadratic_vanishing_root(p.coeffs[2], p.coeffs[1], p.coeffs[0]);
        const int check = std::min(order, alt.order());
        if (!equal_through(root, alt, check))
            throw SeriesError("y_root_vanishing: quadratic-formula cross-check failed");
    }
    return root;
}

KernelSymmetric symmetric_functions(const Kernel& k, int order) {
    if (k.y_degree() != 2)
        throw SeriesError("symmetric_functions: kernel is not quadratic in y");
    const TSeries a = k.y_coeff_series(2, order);
    const TSeries a_inv = a.reciprocal();
    return KernelSymmetric{-k.y_coeff_series(1, order) * a_inv,
                           k.y_coeff_series(0, order) * a_inv};
}

namespace {

constexpr int kOrbitDecisionFloor = 4;

bool pairs_equal(const OrbitPair& a, const OrbitPair& b, int* decided_through) {
    const int through = std::min(std::min(a.x_part.order(), b.x_part.order()),
                                 std::min(a.y_part.order(), b.y_part.order()));
    *decided_through = through;
    return equal_through(a.x_part, b.x_part, through) &&
           equal_through(a.y_part, b.y_part, through);
}

OrbitPair make_pair(const Kernel& k, TSeries xv, TSeries yv, std::string provenance) {
    OrbitPair pair{std::move(xv), std::move(yv), std::move(provenance), false, 0};
    const TSeries residual = kernel_at(k, pair.x_part, pair.y_part);
    if (!residual.known_zero())
        throw SeriesError("orbit: pair does not cancel the kernel");
    pair.verified_order = residual.order();
    pair.substitutable = (pair.x_part.known_zero() || pair.x_part.valuation() >= 0) &&
                         (pair.y_part.known_zero() || pair.y_part.valuation() >= 0);
    return pair;
}

// The other root of K(X, y) = 0 in y: product of roots = c(X)/a(X).
TSeries other_y(const Kernel& k, const TSeries& xv, const TSeries& yv, int coeff_order) {
    const DegreeBound bound = [&k](long) { return static_cast<long>(k.x_degree()); };
    const TSeries a = substitute(k.y_coeff_series(2, coeff_order), xv, bound);
    const TSeries c = substitute(k.y_coeff_series(0, coeff_order), xv, bound);
    return c * a.reciprocal() * yv.reciprocal();
}

TSeries other_x(const Kernel& k, const TSeries& xv, const TSeries& yv, int coeff_order) {
    const DegreeBound bound = [&k](long) { return static_cast<long>(k.y_degree()); };
    const TSeries a = substitute(k.x_coeff_series_swapped(2, coeff_order), yv, bound);
    const TSeries c = substitute(k.x_coeff_series_swapped(0, coeff_order), yv, bound);
    return c * a.reciprocal() * xv.reciprocal();
}

}  // namespace

std::vector<OrbitPair> orbit(const Kernel& k, int max_size, int order) {
    if (k.x_degree() != 2 || k.y_degree() != 2)
        throw SeriesError("orbit: kernel must be quadratic in both variables");
    const int coeff_order = order + 8;  // slack for the coefficient substitutions

    std::vector<OrbitPair> pairs;
    pairs.push_back(make_pair(k, TSeries::from_poly(LaurentPoly::var_x(), order),
                              y_root_vanishing(k, order), "start"));

    bool apply_psi = true;
    while (static_cast<int>(pairs.size()) < max_size) {
        const OrbitPair& last = pairs.back();
        OrbitPair next =
            apply_psi
                ? make_pair(k, last.x_part, other_y(k, last.x_part, last.y_part, coeff_order),
                            "psi")
                : make_pair(k, other_x(k, last.x_part, last.y_part, coeff_order), last.y_part,
                            "phi");
        apply_psi = !apply_psi;

        bool repeated = false;
        for (const auto& seen : pairs) {
            int through = 0;
            if (pairs_equal(next, seen, &through)) {
                if (through < kOrbitDecisionFloor)
                    throw SeriesError(
                        "orbit: truncation order too low to decide repetition (compared through "
                        "t^" + std::to_string(through) + ")");
                repeated = true;
                break;
            }
        }
        if (repeated) break;
        pairs.push_back(std::move(next));
    }
    return pairs;
}

namespace {

TSeries x_zero_part(const TSeries& s) {
    std::vector<LaurentPoly> out;
    for (int n = s.valuation(); n <= s.order(); ++n) out.push_back(s.coeff_poly(n).keep_x_zero());
    return TSeries::from_coeffs(s.vars(), s.valuation(), s.order(), std::move(out));
}

}  // namespace

TSeries functional_equation_residual(const ModelSpec& model, const WalkTable& table) {
    const int n = table.max_len();
    const Kernel k = build_kernel(model.steps);
    const TSeries q = series_from_table(table);
    const TSeries qx0 = x_axis_section(table);
    const TSeries q0y = y_axis_section(table);
    const LaurentPoly x = LaurentPoly::var_x(Vars::XY);
    const LaurentPoly y = LaurentPoly::var_y();

    TSeries rhs = TSeries::zero(Vars::XY, n);
    switch (model.id) {
        case Model::Square:
        case Model::Kreweras:
            // K Q = xy - x t Q(x,0) - y t Q(0,y)
            rhs = TSeries::from_poly(x * y, n) - (qx0 * x).shifted_t(1) - (q0y * y).shifted_t(1);
            break;
        case Model::Diagonal: {
            // K Q = xy - t(1+x^2) Q(x,0) - t(1+y^2) Q(0,y) + t Q(0,0)
            const TSeries q00 = origin_section(table);
            const LaurentPoly one_x2 = LaurentPoly::one(Vars::XY) + x * x;
            const LaurentPoly one_y2 = LaurentPoly::one(Vars::XY) + y * y;
            rhs = TSeries::from_poly(x * y, n) - (qx0 * one_x2).shifted_t(1) -
                  (q0y * one_y2).shifted_t(1) + q00.shifted_t(1);
            break;
        }
        case Model::Knight:
            // K Q = x^2 y^2 - t x^3 Q(x,0) - t y^3 Q(0,y)
            rhs = TSeries::from_poly(x * x * y * y, n) - (qx0 * (x * x * x)).shifted_t(1) -
                  (q0y * (y * y * y)).shifted_t(1);
            break;
    }
    return k.as_series(n) * q - rhs;
}

TSeries generic_equation_residual(const WalkTable& table) {
    const StepSet& steps = table.steps();
    if (!steps.y_symmetric() || !steps.small_horizontal())
        throw SeriesError(
            "generic_equation_residual: step set must be y-symmetric with small horizontal "
            "variations");
    const int n = table.max_len();
    const int p = steps.largest_down_move();
    const Point start = table.start();
    const CriterionReport crit = analyze(steps);
    const LaurentPoly x = LaurentPoly::var_x(Vars::XY);
    const LaurentPoly y = LaurentPoly::var_y();
    const LaurentPoly xbar = LaurentPoly::monomial(Rat(1), -1, 0, Vars::XY);

    // K = x y^p (1 - t P0(y) - t (x + 1/x) P1(y))
    const LaurentPoly xyp = LaurentPoly::monomial(Rat(1), 1, p, Vars::XY);
    const LaurentPoly k_tail = -(xyp * (*crit.p0 + (x + xbar) * *crit.p1));
    const TSeries kq = (TSeries::from_poly(xyp, n) + TSeries::term(k_tail, 1, n)) *
                       series_from_table(table);

    TSeries rhs = TSeries::from_poly(
        LaurentPoly::monomial(Rat(1), 1 + start.x, p + start.y, Vars::XY), n);
    rhs = rhs - (y_axis_section(table) *
                 (LaurentPoly::monomial(Rat(1), 0, p, Vars::XY) * *crit.p1))
                    .shifted_t(1);
    for (const auto& s : steps.steps()) {
        if (s.dy >= 0) continue;
        const int j = -s.dy;
        for (int m = 0; m < j; ++m) {
            TSeries qm = y_coeff_section(table, m);
            if (s.dx == 1) qm = qm - x_zero_part(qm);
            rhs = rhs -
                  (qm * LaurentPoly::monomial(Rat(1), 1 - s.dx, p + m - j, Vars::XY)).shifted_t(1);
        }
    }
    return kq - rhs;
}

bool IdentityReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const IdentityResult& r) { return r.pass; });
}

IdentityReport verify_kernel_identities(const ModelSpec& model, const WalkTable& table,
                                        int root_order) {
    if (model.id != Model::Kreweras && model.id != Model::Square)
        throw SeriesError("verify_kernel_identities: only the square and Kreweras models");
    IdentityReport report;
    const auto push = [&report](const std::string& name, const TSeries& residual) {
        report.items.push_back(IdentityResult{name, residual.order(), residual.known_zero()});
    };

    const Kernel k = build_kernel(model.steps);
    const TSeries y0 = y_root_vanishing(k, root_order);
    const LaurentPoly x = LaurentPoly::var_x();
    const LaurentPoly xbar = LaurentPoly::monomial(Rat(1), -1);

    // R(x) = x t Q(x,0), known one order past the table.
    const TSeries r = (x_axis_section(table) * x).shifted_t(1);
    const DegreeBound walk_bound = [](long m) { return m; };
    const TSeries r_y0 = substitute(r, y0, walk_bound);

    push("root-relation", r + r_y0 - y0 * x);

    if (model.id == Model::Square) {
        push("mirror-difference", r - r.mirror_x() - y0 * (x - xbar));
        return report;
    }

    // Kreweras: the axis series has x-degree at most (m+1)/2 at t^m, since
    // a walk ending at (i,0) has length at least 2i.
    const DegreeBound axis_bound = [](long m) { return (m + 1) / 2; };
    const KernelSymmetric sym = symmetric_functions(k, root_order);
    const TSeries y1 = sym.e1 - y0;
    const TSeries r_y1 = substitute(r, y1, axis_bound);

    push("second-root-relation", r_y0 + r_y1 - TSeries::from_poly(xbar, r_y1.order()));

    const TSeries left = (r_y0 - y0 * x) * (r_y1 - y1 * x);
    const TSeries t_inv = TSeries::term(LaurentPoly::one(), -1, r.order());
    push("root-relation-product", left + r * (r + TSeries::from_poly(xbar * Rat(2), r.order()) - t_inv));

    // Positive part of the product identity == x - 2t Q(0,0).
    const TSeries q00 = origin_section(table);
    push("positive-part-quadratic",
         positive_part(left) - TSeries::from_poly(x, left.order()) + (q00 * Rat(2)).shifted_t(1));

    // t^2 x^2 Q(x,0)^2 + (2t - x) Q(x,0) - 2t Q(0,0) + x = 0
    const TSeries qx0 = x_axis_section(table);
    const TSeries quad = (qx0 * qx0 * (x * x)).shifted_t(2) + (qx0 * Rat(2)).shifted_t(1) -
                         qx0 * x - (q00 * Rat(2)).shifted_t(1) +
                         TSeries::from_poly(x, table.max_len());
    push("axis-quadratic-equation", quad);

    return report;
}

SymmetricEvalCheck check_symmetric_root_evaluation(const LaurentPoly& f, const TSeries& y0,
                                                   const TSeries& y1) {
    if (!(f == f.swap_xy()))
        throw SeriesError("check_symmetric_root_evaluation: polynomial is not symmetric");
    const int order = std::min(y0.order(), y1.order());
    const TSeries value = eval_bivariate(f, y0, y1, order);

    SymmetricEvalCheck check;
    check.order_checked = value.order();
    check.valuation = value.valuation();
    check.xbar_only = value.known_zero() || value.max_x_exponent() <= 0;
    if (check.xbar_only) {
        const TSeries constant_part = constant_term_xbar(value);
        const TSeries expected =
            TSeries::from_poly(LaurentPoly::constant(f.coeff(0, 0)), value.order());
        check.constant_part_matches = equal_through(constant_part, expected, value.order());
    }
    return check;
}

}  // namespace qwalk
