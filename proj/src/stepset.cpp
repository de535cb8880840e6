#include "qwalk/stepset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qwalk {

StepSet::StepSet(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("StepSet: empty step set");
    std::sort(steps_.begin(), steps_.end());
    if (std::adjacent_find(steps_.begin(), steps_.end()) != steps_.end())
        throw std::invalid_argument("StepSet: duplicate step");
}

namespace {

void skip_spaces(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

bool consume(std::string_view& s, char c) {
    skip_spaces(s);
    if (s.empty() || s.front() != c) return false;
    s.remove_prefix(1);
    return true;
}

int parse_int(std::string_view& s) {
    skip_spaces(s);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    const std::size_t digits_from = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_from) throw std::invalid_argument("step set: expected integer");
    const int value = std::stoi(std::string(s.substr(0, i)));
    s.remove_prefix(i);
    return value;
}

}  // namespace

StepSet StepSet::parse(std::string_view text) {
    std::vector<Step> steps;
    std::string_view s = text;
    for (;;) {
        if (!consume(s, '(')) throw std::invalid_argument("step set: expected '('");
        const int dx = parse_int(s);
        if (!consume(s, ',')) throw std::invalid_argument("step set: expected ','");
        const int dy = parse_int(s);
        if (!consume(s, ')')) throw std::invalid_argument("step set: expected ')'");
        steps.push_back(Step{dx, dy});
        if (!consume(s, ';')) break;
    }
    skip_spaces(s);
    if (!s.empty()) throw std::invalid_argument("step set: trailing input");
    return StepSet(std::move(steps));
}

bool StepSet::contains(Step s) const {
    return std::binary_search(steps_.begin(), steps_.end(), s);
}

int StepSet::largest_left_move() const {
    int m = 0;
    for (const auto& s : steps_) m = std::max(m, -s.dx);
    return m;
}

int StepSet::largest_down_move() const {
    int m = 0;
    for (const auto& s : steps_) m = std::max(m, -s.dy);
    return m;
}

int StepSet::max_dx() const {
    int m = 0;
    for (const auto& s : steps_) m = std::max(m, s.dx);
    return m;
}

int StepSet::max_dy() const {
    int m = 0;
    for (const auto& s : steps_) m = std::max(m, s.dy);
    return m;
}

bool StepSet::y_symmetric() const {
    for (const auto& s : steps_)
        if (!contains(Step{-s.dx, s.dy})) return false;
    return true;
}

bool StepSet::small_horizontal() const {
    for (const auto& s : steps_)
        if (s.dx < -1 || s.dx > 1) return false;
    return true;
}

LaurentPoly StepSet::step_polynomial() const {
    LaurentPoly p(Vars::XY);
    for (const auto& s : steps_) p.add_term(s.dx, s.dy, Rat(1));
    return p;
}

std::string StepSet::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out << ";";
        out << "(" << steps_[i].dx << "," << steps_[i].dy << ")";
    }
    return out.str();
}

CriterionReport analyze(const StepSet& steps) {
    CriterionReport r;
    r.y_symmetric = steps.y_symmetric();
    r.small_horizontal = steps.small_horizontal();
    r.holonomy_sufficient = r.y_symmetric && r.small_horizontal;
    if (r.small_horizontal) {
        LaurentPoly p0(Vars::XY), p1(Vars::XY);
        for (const auto& s : steps.steps()) {
            if (s.dx == 0) p0.add_term(0, s.dy, Rat(1));
            if (s.dx == 1) p1.add_term(0, s.dy, Rat(1));
        }
        r.p0 = p0;
        r.p1 = p1;
    }
    return r;
}

}  // namespace qwalk
