#include "qwalk/enumerate.hpp"

#include <stdexcept>

namespace qwalk {

namespace {

struct Box {
    int bx, by;
    std::vector<BigInt> cells;
    Box(int bx_, int by_) : bx(bx_), by(by_), cells(static_cast<std::size_t>((bx_ + 1) * (by_ + 1))) {}
    BigInt& cell(int i, int j) { return cells[static_cast<std::size_t>(i * (by + 1) + j)]; }
    const BigInt& cell(int i, int j) const {
        return cells[static_cast<std::size_t>(i * (by + 1) + j)];
    }
};

void push_layer(const StepSet& steps, const Box& cur, Box& next) {
    for (int i = 0; i <= cur.bx; ++i)
        for (int j = 0; j <= cur.by; ++j) {
            const BigInt& c = cur.cell(i, j);
            if (c == 0) continue;
            for (const auto& s : steps.steps()) {
                const int ni = i + s.dx, nj = j + s.dy;
                if (ni >= 0 && nj >= 0) next.cell(ni, nj) += c;
            }
        }
}

}  // namespace

WalkTable::WalkTable(StepSet steps, Point start, int max_len)
    : steps_(std::move(steps)), start_(start), max_len_(max_len) {
    if (start.x < 0 || start.y < 0)
        throw std::invalid_argument("WalkTable: start point outside the quadrant");
    if (max_len < 0) throw std::invalid_argument("WalkTable: negative length");
    layers_.reserve(static_cast<std::size_t>(max_len) + 1);
    const int mx = steps_.max_dx(), my = steps_.max_dy();
    for (int n = 0; n <= max_len; ++n) {
        Layer layer;
        layer.bx = start.x + n * mx;
        layer.by = start.y + n * my;
        layer.cells.assign(static_cast<std::size_t>((layer.bx + 1) * (layer.by + 1)), BigInt(0));
        layers_.push_back(std::move(layer));
    }
    layers_[0].cells[static_cast<std::size_t>(start.x * (layers_[0].by + 1) + start.y)] = 1;
    for (int n = 0; n < max_len; ++n) {
        const Layer& cur = layers_[static_cast<std::size_t>(n)];
        Layer& next = layers_[static_cast<std::size_t>(n + 1)];
        for (int i = 0; i <= cur.bx; ++i)
            for (int j = 0; j <= cur.by; ++j) {
                const BigInt& c = cur.cells[static_cast<std::size_t>(i * (cur.by + 1) + j)];
                if (c == 0) continue;
                for (const auto& s : steps_.steps()) {
                    const int ni = i + s.dx, nj = j + s.dy;
                    if (ni >= 0 && nj >= 0)
                        next.cells[static_cast<std::size_t>(ni * (next.by + 1) + nj)] += c;
                }
            }
    }
}

const BigInt& WalkTable::at(int n, int i, int j) const {
    static const BigInt zero(0);
    if (n < 0 || n > max_len_) throw std::out_of_range("WalkTable::at: length out of range");
    const Layer& layer = layers_[static_cast<std::size_t>(n)];
    if (i < 0 || j < 0 || i > layer.bx || j > layer.by) return zero;
    return layer.cells[static_cast<std::size_t>(i * (layer.by + 1) + j)];
}

int WalkTable::box_x(int n) const {
    if (n < 0 || n > max_len_) throw std::out_of_range("WalkTable::box_x");
    return layers_[static_cast<std::size_t>(n)].bx;
}

int WalkTable::box_y(int n) const {
    if (n < 0 || n > max_len_) throw std::out_of_range("WalkTable::box_y");
    return layers_[static_cast<std::size_t>(n)].by;
}

WalkTable count_walks(const StepSet& steps, Point start, int max_len) {
    return WalkTable(steps, start, max_len);
}

const char* aggregate_name(AggregateKind k) {
    switch (k) {
        case AggregateKind::Endpoint: return "endpoint";
        case AggregateKind::XAxis: return "x_axis";
        case AggregateKind::Origin: return "origin";
        case AggregateKind::Free: return "free";
    }
    return "?";
}

namespace {

BigInt aggregate_box(const Box& box, const Aggregate& what) {
    BigInt sum(0);
    switch (what.kind) {
        case AggregateKind::Endpoint:
            if (what.endpoint.x <= box.bx && what.endpoint.y <= box.by)
                sum = box.cell(what.endpoint.x, what.endpoint.y);
            break;
        case AggregateKind::XAxis:
            for (int i = 0; i <= box.bx; ++i) sum += box.cell(i, 0);
            break;
        case AggregateKind::Origin:
            sum = box.cell(0, 0);
            break;
        case AggregateKind::Free:
            for (const auto& c : box.cells) sum += c;
            break;
    }
    return sum;
}

}  // namespace

std::vector<BigInt> aggregate(const WalkTable& table, const Aggregate& what) {
    if (what.kind == AggregateKind::Endpoint) {
        if (what.endpoint.x < 0 || what.endpoint.y < 0)
            throw std::invalid_argument("aggregate: endpoint outside the quadrant");
        if (what.endpoint.x > table.box_x(table.max_len()) ||
            what.endpoint.y > table.box_y(table.max_len()))
            throw std::invalid_argument("aggregate: endpoint outside the table bounds");
    }
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(table.max_len()) + 1);
    for (int n = 0; n <= table.max_len(); ++n) {
        BigInt sum(0);
        switch (what.kind) {
            case AggregateKind::Endpoint:
                sum = table.at(n, what.endpoint.x, what.endpoint.y);
                break;
            case AggregateKind::XAxis:
                for (int i = 0; i <= table.box_x(n); ++i) sum += table.at(n, i, 0);
                break;
            case AggregateKind::Origin:
                sum = table.at(n, 0, 0);
                break;
            case AggregateKind::Free:
                for (int i = 0; i <= table.box_x(n); ++i)
                    for (int j = 0; j <= table.box_y(n); ++j) sum += table.at(n, i, j);
                break;
        }
        out.push_back(std::move(sum));
    }
    return out;
}

std::vector<BigInt> aggregate_sequence(const StepSet& steps, Point start, int max_len,
                                       const Aggregate& what) {
    if (start.x < 0 || start.y < 0)
        throw std::invalid_argument("aggregate_sequence: start point outside the quadrant");
    if (max_len < 0) throw std::invalid_argument("aggregate_sequence: negative length");
    if (what.kind == AggregateKind::Endpoint && (what.endpoint.x < 0 || what.endpoint.y < 0))
        throw std::invalid_argument("aggregate_sequence: endpoint outside the quadrant");
    const int mx = steps.max_dx(), my = steps.max_dy();
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_len) + 1);
    Box cur(start.x, start.y);
    cur.cell(start.x, start.y) = 1;
    out.push_back(aggregate_box(cur, what));
    for (int n = 1; n <= max_len; ++n) {
        Box next(start.x + n * mx, start.y + n * my);
        push_layer(steps, cur, next);
        out.push_back(aggregate_box(next, what));
        cur = std::move(next);
    }
    return out;
}

TSeries series_from_table(const WalkTable& table) {
    const int order = table.max_len();
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        LaurentPoly c(Vars::XY);
        for (int i = 0; i <= table.box_x(n); ++i)
            for (int j = 0; j <= table.box_y(n); ++j) {
                const BigInt& a = table.at(n, i, j);
                if (a != 0) c.add_term(i, j, Rat(a));
            }
        coeffs.push_back(std::move(c));
    }
    return TSeries::from_coeffs(Vars::XY, 0, order, std::move(coeffs));
}

TSeries x_axis_section(const WalkTable& table) {
    const int order = table.max_len();
    std::vector<LaurentPoly> coeffs;
    for (int n = 0; n <= order; ++n) {
        LaurentPoly c(Vars::X);
        for (int i = 0; i <= table.box_x(n); ++i) {
            const BigInt& a = table.at(n, i, 0);
            if (a != 0) c.add_term(i, 0, Rat(a));
        }
        coeffs.push_back(std::move(c));
    }
    return TSeries::from_coeffs(Vars::X, 0, order, std::move(coeffs));
}

TSeries y_axis_section(const WalkTable& table) {
    const int order = table.max_len();
    std::vector<LaurentPoly> coeffs;
    for (int n = 0; n <= order; ++n) {
        LaurentPoly c(Vars::XY);
        for (int j = 0; j <= table.box_y(n); ++j) {
            const BigInt& a = table.at(n, 0, j);
            if (a != 0) c.add_term(0, j, Rat(a));
        }
        coeffs.push_back(std::move(c));
    }
    return TSeries::from_coeffs(Vars::XY, 0, order, std::move(coeffs));
}

TSeries origin_section(const WalkTable& table) {
    const int order = table.max_len();
    std::vector<LaurentPoly> coeffs;
    for (int n = 0; n <= order; ++n)
        coeffs.push_back(LaurentPoly::constant(Rat(table.at(n, 0, 0)), Vars::X));
    return TSeries::from_coeffs(Vars::X, 0, order, std::move(coeffs));
}

TSeries y_coeff_section(const WalkTable& table, int m) {
    const int order = table.max_len();
    std::vector<LaurentPoly> coeffs;
    for (int n = 0; n <= order; ++n) {
        LaurentPoly c(Vars::X);
        if (m >= 0 && m <= table.box_y(n))
            for (int i = 0; i <= table.box_x(n); ++i) {
                const BigInt& a = table.at(n, i, m);
                if (a != 0) c.add_term(i, 0, Rat(a));
            }
        coeffs.push_back(std::move(c));
    }
    return TSeries::from_coeffs(Vars::X, 0, order, std::move(coeffs));
}

}  // namespace qwalk
