#include "qwalk/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qwalk {

void LaurentPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    min_ex_ = max_ex_ = min_ey_ = max_ey_ = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            min_ex_ = max_ex_ = m.ex;
            min_ey_ = max_ey_ = m.ey;
            first = false;
        } else {
            min_ex_ = std::min(min_ex_, m.ex);
            max_ex_ = std::max(max_ex_, m.ex);
            min_ey_ = std::min(min_ey_, m.ey);
            max_ey_ = std::max(max_ey_, m.ey);
        }
    }
}

LaurentPoly LaurentPoly::constant(const Rat& c, Vars v) {
    return monomial(c, 0, 0, v);
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int ex, int ey, Vars v) {
    if (ey != 0) v = Vars::XY;
    LaurentPoly p(v);
    p.add_term(ex, ey, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} &&
           terms_.begin()->second == 1;
}

Rat LaurentPoly::coeff(int ex, int ey) const {
    auto it = terms_.find(Mono{ex, ey});
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(int ex, int ey, const Rat& c) {
    if (ey != 0 && vars_ == Vars::X)
        throw std::logic_error("LaurentPoly: y-exponent in a univariate polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Mono{ex, ey}, c);
    if (!inserted) it->second += c;
    normalize();
}

LaurentPoly LaurentPoly::promoted(Vars v) const {
    if (v == vars_ || v == Vars::X) return *this;
    LaurentPoly p = *this;
    p.vars_ = Vars::XY;
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p(join(vars_, o.vars_));
    p.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = p.terms_.emplace(m, c);
        if (!inserted) it->second += c;
    }
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p(join(vars_, o.vars_));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m{ma.ex + mb.ex, ma.ey + mb.ey};
            auto [it, inserted] = p.terms_.emplace(m, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    if (c == 0) return LaurentPoly(vars_);
    LaurentPoly p = *this;
    for (auto& [m, v] : p.terms_) v *= c;
    return p;
}

LaurentPoly LaurentPoly::shifted(int dx, int dy) const {
    LaurentPoly p(dy != 0 ? Vars::XY : vars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(Mono{m.ex + dx, m.ey + dy}, c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::mirror_x() const {
    LaurentPoly p(vars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(Mono{-m.ex, m.ey}, c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::swap_xy() const {
    LaurentPoly p(Vars::XY);
    for (const auto& [m, c] : terms_) p.terms_.emplace(Mono{m.ey, m.ex}, c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::keep_x_nonneg() const {
    LaurentPoly p(vars_);
    for (const auto& [m, c] : terms_)
        if (m.ex >= 0) p.terms_.emplace(m, c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::keep_x_zero() const {
    LaurentPoly p(vars_);
    for (const auto& [m, c] : terms_)
        if (m.ex == 0) p.terms_.emplace(m, c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::coeff_of_y(int j) const {
    LaurentPoly p(Vars::X);
    for (const auto& [m, c] : terms_)
        if (m.ey == j) p.terms_.emplace(Mono{m.ex, 0}, c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::coeff_of_x(int i) const {
    LaurentPoly p(Vars::XY);
    for (const auto& [m, c] : terms_)
        if (m.ex == i) p.terms_.emplace(Mono{0, m.ey}, c);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::at_y_zero() const {
    if (!terms_.empty() && min_ey_ < 0)
        throw std::domain_error("at_y_zero: negative y-exponent present");
    return coeff_of_y(0);
}

Rat LaurentPoly::eval_one() const {
    Rat s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

namespace {

void append_monomial(std::ostringstream& out, const Mono& m, const Rat& c, bool leading) {
    Rat a = c;
    if (leading) {
        if (a < 0) {
            out << "-";
            a = -a;
        }
    } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    const bool has_var = m.ex != 0 || m.ey != 0;
    if (!has_var || a != 1) {
        out << a.get_str();
        if (has_var) out << "*";
    }
    if (m.ex != 0) {
        out << "x";
        if (m.ex != 1) out << "^" << m.ex;
        if (m.ey != 0) out << "*";
    }
    if (m.ey != 0) {
        out << "y";
        if (m.ey != 1) out << "^" << m.ey;
    }
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (const auto& [m, c] : terms_) {
        append_monomial(out, m, c, leading);
        leading = false;
    }
    return out.str();
}

}  // namespace qwalk
