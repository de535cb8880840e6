#include "qwalk/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qwalk {

void TSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) val_ = order_ + 1;
}

TSeries TSeries::zero(Vars v, int order) {
    TSeries s;
    s.vars_ = v;
    s.order_ = order;
    s.val_ = order + 1;
    return s;
}

TSeries TSeries::term(const LaurentPoly& p, int tpow, int order) {
    if (p.is_zero() || tpow > order) return zero(p.vars(), order);
    TSeries s;
    s.vars_ = p.vars();
    s.val_ = tpow;
    s.order_ = order;
    s.coeffs_.assign(static_cast<std::size_t>(order - tpow + 1), LaurentPoly(p.vars()));
    s.coeffs_[0] = p;
    return s;
}

TSeries TSeries::from_coeffs(Vars v, int val, int order, std::vector<LaurentPoly> coeffs) {
    if (order < val - 1 || coeffs.size() != static_cast<std::size_t>(order - val + 1))
        throw SeriesError("from_coeffs: coefficient count does not match range");
    TSeries s;
    s.vars_ = v;
    s.val_ = val;
    s.order_ = order;
    s.coeffs_ = std::move(coeffs);
    for (auto& c : s.coeffs_) c = c.promoted(v);
    s.normalize();
    return s;
}

LaurentPoly TSeries::coeff_poly(int n) const {
    if (n > order_)
        throw TruncationError("coefficient of t^" + std::to_string(n) +
                              " requested beyond guaranteed order " + std::to_string(order_));
    if (n < val_ || coeffs_.empty()) return LaurentPoly(vars_);
    return coeffs_[static_cast<std::size_t>(n - val_)];
}

TSeries TSeries::operator-() const {
    TSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TSeries TSeries::operator+(const TSeries& o) const {
    const Vars v = (vars_ == Vars::XY || o.vars_ == Vars::XY) ? Vars::XY : Vars::X;
    const int order = std::min(order_, o.order_);
    const int val = std::min(val_, o.val_);
    if (order < val) return zero(v, order);
    std::vector<LaurentPoly> out(static_cast<std::size_t>(order - val + 1), LaurentPoly(v));
    for (int n = val; n <= order; ++n) {
        LaurentPoly c(v);
        if (n >= val_) c += coeff_poly(n);
        if (n >= o.val_) c += o.coeff_poly(n);
        out[static_cast<std::size_t>(n - val)] = c.promoted(v);
    }
    return from_coeffs(v, val, order, std::move(out));
}

TSeries TSeries::operator-(const TSeries& o) const { return *this + (-o); }

TSeries TSeries::operator*(const TSeries& o) const {
    const Vars v = (vars_ == Vars::XY || o.vars_ == Vars::XY) ? Vars::XY : Vars::X;
    // Unknown tails start at order+1, so the product is guaranteed
    // through min(Na + vb, Nb + va).
    const int order = std::min(order_ + o.val_, o.order_ + val_);
    const int val = val_ + o.val_;
    if (order < val || coeffs_.empty() || o.coeffs_.empty()) return zero(v, order);
    std::vector<LaurentPoly> out(static_cast<std::size_t>(order - val + 1), LaurentPoly(v));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const int ni = val_ + static_cast<int>(i);
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            const int n = ni + o.val_ + static_cast<int>(j);
            if (n > order) break;
            if (o.coeffs_[j].is_zero()) continue;
            out[static_cast<std::size_t>(n - val)] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return from_coeffs(v, val, order, std::move(out));
}

TSeries TSeries::operator*(const LaurentPoly& p) const {
    if (p.is_zero()) return zero((vars_ == Vars::XY || p.vars() == Vars::XY) ? Vars::XY : Vars::X, order_);
    TSeries s = *this;
    s.vars_ = (vars_ == Vars::XY || p.vars() == Vars::XY) ? Vars::XY : Vars::X;
    for (auto& c : s.coeffs_) c = (c * p).promoted(s.vars_);
    s.normalize();
    return s;
}

TSeries TSeries::operator*(const Rat& c) const {
    if (c == 0) return zero(vars_, order_);
    TSeries s = *this;
    for (auto& p : s.coeffs_) p = p * c;
    return s;
}

TSeries TSeries::shifted_t(int k) const {
    TSeries s = *this;
    s.val_ += k;
    s.order_ += k;
    return s;
}

TSeries TSeries::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    TSeries s = *this;
    s.order_ = new_order;
    if (new_order < s.val_) {
        s.coeffs_.clear();
        s.val_ = new_order + 1;
    } else {
        s.coeffs_.resize(static_cast<std::size_t>(new_order - s.val_ + 1), LaurentPoly(vars_));
    }
    return s;
}

TSeries TSeries::mirror_x() const {
    TSeries s = *this;
    for (auto& c : s.coeffs_) c = c.mirror_x();
    return s;
}

TSeries TSeries::pow(unsigned k) const {
    if (k == 0) return one(order_, vars_);
    TSeries r = *this;
    for (unsigned i = 1; i < k; ++i) r = r * *this;
    return r;
}

TSeries TSeries::reciprocal() const {
    if (known_zero())
        throw SeriesError("reciprocal: series is zero through its guaranteed order");
    const LaurentPoly& lead = coeffs_[0];
    if (!lead.is_monomial())
        throw SeriesError("reciprocal: leading coefficient is not a monomial: " + lead.to_string());
    const auto& [mono, c] = *lead.terms().begin();
    const LaurentPoly lead_inv = LaurentPoly::monomial(Rat(1) / c, -mono.ex, -mono.ey, vars_);

    // s = lead t^v (1 + u) with u of valuation >= 1.
    const int v = val_;
    const TSeries u = (*this * lead_inv).shifted_t(-v) - one(order_ - v, vars_);
    TSeries geo = one(order_ - v, vars_);
    TSeries pw = one(order_ - v, vars_);
    const int kmax = std::max(0, order_ - v);
    for (int k = 1; k <= kmax; ++k) {
        pw = pw * (-u);
        if (pw.known_zero()) break;
        geo = geo + pw;
    }
    return (geo * lead_inv).shifted_t(-v);
}

int TSeries::max_x_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        m = first ? c.max_ex() : std::max(m, c.max_ex());
        first = false;
    }
    return m;
}

int TSeries::min_x_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        m = first ? c.min_ex() : std::min(m, c.min_ex());
        first = false;
    }
    return m;
}

std::string TSeries::to_string() const {
    std::ostringstream out;
    bool leading = true;
    for (int n = val_; n <= order_; ++n) {
        const LaurentPoly c = coeff_poly(n);
        if (c.is_zero()) continue;
        if (!leading) out << " + ";
        leading = false;
        const bool needs_parens = c.term_count() > 1;
        std::string cs = c.to_string();
        if (n == 0) {
            out << cs;
            continue;
        }
        if (c.is_one())
            out << "";
        else if (needs_parens)
            out << "(" << cs << ")*";
        else
            out << cs << "*";
        out << "t";
        if (n != 1) out << "^" << n;
    }
    if (leading) out << "0";
    out << " + O(t^" << (order_ + 1) << ")";
    return out.str();
}

bool equal_through(const TSeries& a, const TSeries& b, int through) {
    if (through > a.order() || through > b.order())
        throw TruncationError("equal_through: comparison through t^" + std::to_string(through) +
                              " exceeds guaranteed orders " + std::to_string(a.order()) + ", " +
                              std::to_string(b.order()));
    for (int n = std::min(a.valuation(), b.valuation()); n <= through; ++n)
        if (!(a.coeff_poly(n) == b.coeff_poly(n))) return false;
    return true;
}

TSeries positive_part(const TSeries& s) {
    if (s.vars() != Vars::X)
        throw SeriesError("positive_part: input must be univariate in x");
    if (!s.known_zero() && s.valuation() < 0)
        throw SeriesError("positive_part: negative t-valuation");
    std::vector<LaurentPoly> out;
    for (int n = s.valuation(); n <= s.order(); ++n) out.push_back(s.coeff_poly(n).keep_x_nonneg());
    return TSeries::from_coeffs(Vars::X, s.valuation(), s.order(), std::move(out));
}

TSeries constant_term_xbar(const TSeries& s) {
    if (s.vars() != Vars::X)
        throw SeriesError("constant_term_xbar: input must be univariate in x");
    std::vector<LaurentPoly> out;
    for (int n = s.valuation(); n <= s.order(); ++n) {
        const LaurentPoly c = s.coeff_poly(n);
        if (!c.is_zero() && c.max_ex() > 0)
            throw SeriesError("constant_term_xbar: positive x-exponent in coefficient of t^" +
                              std::to_string(n));
        out.push_back(c.keep_x_zero());
    }
    return TSeries::from_coeffs(Vars::X, s.valuation(), s.order(), std::move(out));
}

TSeries sqrt_series(const TSeries& s) {
    if (s.known_zero() || s.valuation() != 0 || !s.coeff_poly(0).is_one())
        throw SeriesError("sqrt_series: constant term must be 1");
    const int order = s.order();
    std::vector<LaurentPoly> r(static_cast<std::size_t>(order + 1), LaurentPoly(s.vars()));
    r[0] = LaurentPoly::one(s.vars());
    const Rat half(1, 2);
    for (int n = 1; n <= order; ++n) {
        LaurentPoly acc = s.coeff_poly(n);
        for (int k = 1; k < n; ++k) acc -= r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
        r[static_cast<std::size_t>(n)] = acc * half;
    }
    return TSeries::from_coeffs(s.vars(), 0, order, std::move(r));
}

TSeries eval_series_poly(const SeriesPoly& p, const TSeries& u) {
    if (p.coeffs.empty()) throw SeriesError("eval_series_poly: empty polynomial");
    TSeries acc = p.coeffs.back();
    for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) acc = acc * u + p.coeffs[k];
    return acc;
}

SeriesPoly derivative(const SeriesPoly& p) {
    SeriesPoly d;
    for (std::size_t k = 1; k < p.coeffs.size(); ++k)
        d.coeffs.push_back(p.coeffs[k] * Rat(static_cast<long>(k)));
    if (d.coeffs.empty()) d.coeffs.push_back(TSeries::zero(Vars::X, 0));
    return d;
}

TSeries newton_root(const SeriesPoly& p, const LaurentPoly& u0, int order) {
    if (order < 0) throw SeriesError("newton_root: negative order");
    for (const auto& c : p.coeffs)
        if (c.order() < order)
            throw TruncationError("newton_root: coefficient series order below requested order");
    const SeriesPoly dp = derivative(p);

    TSeries u = TSeries::from_poly(u0, 0);
    {
        const LaurentPoly f0 = eval_series_poly(p, u).coeff_poly(0);
        if (!f0.is_zero())
            throw SeriesError("newton_root: u0 is not a root modulo t");
        const LaurentPoly g0 = eval_series_poly(dp, u).coeff_poly(0);
        if (g0.is_zero() || !g0.is_monomial())
            throw SeriesError("newton_root: root is not simple at t = 0");
    }

    // Each step doubles the correct prefix; the declared order is raised
    // first and the final residual check validates the whole prefix.
    int correct = 0;
    while (correct < order) {
        const int target = std::min(2 * correct + 1, order);
        u.order_ = target;
        u.coeffs_.resize(static_cast<std::size_t>(target - u.val_ + 1), LaurentPoly(u.vars_));
        const TSeries f = eval_series_poly(p, u).truncated(target);
        const TSeries g = eval_series_poly(dp, u).truncated(target);
        u = (u - f * g.reciprocal()).truncated(target);
        if (u.order_ != target) {
            u.order_ = target;
            u.coeffs_.resize(static_cast<std::size_t>(target - u.val_ + 1), LaurentPoly(u.vars_));
        }
        correct = target;
    }

    const TSeries residual = eval_series_poly(p, u).truncated(order);
    if (!residual.known_zero())
        throw SeriesError("newton_root: iteration did not converge (non-simple root?)");
    return u;
}

TSeries substitute(const TSeries& s, const TSeries& target, const DegreeBound& max_xdeg) {
    if (s.vars() != Vars::X)
        throw SeriesError("substitute: source must be univariate in x");
    if (!s.known_zero() && s.min_x_exponent() < 0)
        throw SeriesError("substitute: source has negative x-exponents");

    const int ns = s.order();
    const int vt = target.valuation();
    const int nt = target.order();
    constexpr long kInf = std::numeric_limits<long>::max() / 4;

    // Validate the caller's bound against the stored coefficients.
    int max_j = 0;
    for (int n = s.valuation(); n <= ns; ++n) {
        const LaurentPoly c = s.coeff_poly(n);
        if (c.is_zero()) continue;
        if (c.max_ex() > max_xdeg(n))
            throw SeriesError("substitute: degree bound violated at t^" + std::to_string(n));
        max_j = std::max(max_j, c.max_ex());
    }

    // Orders the unknown tail of s could touch.
    long tail_floor;
    if (vt >= 0) {
        tail_floor = ns + 1;
    } else {
        long prev = std::numeric_limits<long>::min();
        tail_floor = kInf;
        for (long n = ns + 1; n <= ns + 256; ++n) {
            const long g = n + static_cast<long>(vt) * std::max(0L, max_xdeg(n));
            if (g < prev)
                throw SeriesError("substitute: degree bound grows too fast to certify the order");
            prev = g;
            tail_floor = std::min(tail_floor, g);
        }
    }

    // Orders through which every needed power of target is known.
    long term_floor = kInf;
    for (int n = s.valuation(); n <= ns; ++n)
        for (const auto& [m, c] : s.coeff_poly(n).terms())
            if (m.ex >= 1)
                term_floor = std::min(term_floor, static_cast<long>(n) + nt +
                                                      static_cast<long>(m.ex - 1) * vt);

    const long result_order = std::min(term_floor, tail_floor - 1);
    if (result_order < 0)
        throw SeriesError("substitute: cannot guarantee a nonnegative order (got " +
                          std::to_string(result_order) + ")");
    const int m = static_cast<int>(std::min<long>(result_order, kInf));

    TSeries acc = TSeries::zero(target.vars(), m);
    std::vector<TSeries> powers;
    powers.push_back(TSeries::one(m, target.vars()));
    for (int j = 1; j <= max_j; ++j) powers.push_back((powers.back() * target).truncated(m));

    for (int n = s.valuation(); n <= ns; ++n)
        for (const auto& [mono, c] : s.coeff_poly(n).terms()) {
            const TSeries contrib = (powers[static_cast<std::size_t>(mono.ex)] * c).shifted_t(n);
            acc = acc + contrib.truncated(m);
        }
    return acc.truncated(m);
}

}  // namespace qwalk
