#pragma once

#include "qwalk/model.hpp"
#include "qwalk/series.hpp"
#include "qwalk/stepset.hpp"

#include <vector>

namespace qwalk {

// Exact table of quadrant-confined walk counts: at(n, i, j) is the number
// of n-step walks from the start point whose every vertex stays in the
// first quadrant.  Built by forward dynamic programming; layer n is sized
// to the coordinates reachable in n steps, so no state is ever clipped.
// Immutable once constructed.
class WalkTable {
public:
    WalkTable(StepSet steps, Point start, int max_len);

    const StepSet& steps() const { return steps_; }
    Point start() const { return start_; }
    int max_len() const { return max_len_; }

    // Zero outside the stored box; throws std::out_of_range for n outside
    // [0, max_len].
    const BigInt& at(int n, int i, int j) const;
    int box_x(int n) const;  // largest stored i in layer n
    int box_y(int n) const;

private:
    struct Layer {
        int bx = 0, by = 0;
        std::vector<BigInt> cells;  // (bx+1) * (by+1), row-major in i
    };
    StepSet steps_;
    Point start_;
    int max_len_;
    std::vector<Layer> layers_;
};

// Validates the start point (both coordinates >= 0) and builds the table.
WalkTable count_walks(const StepSet& steps, Point start, int max_len);

enum class AggregateKind { Endpoint, XAxis, Origin, Free };

struct Aggregate {
    AggregateKind kind = AggregateKind::Free;
    Point endpoint{0, 0};  // used by Endpoint only

    static Aggregate free() { return {AggregateKind::Free, {0, 0}}; }
    static Aggregate x_axis() { return {AggregateKind::XAxis, {0, 0}}; }
    static Aggregate origin() { return {AggregateKind::Origin, {0, 0}}; }
    static Aggregate at(Point p) { return {AggregateKind::Endpoint, p}; }
};

const char* aggregate_name(AggregateKind k);

// Per-length sums over the requested endpoint class, n = 0..max_len.
std::vector<BigInt> aggregate(const WalkTable& table, const Aggregate& what);

// Same sums computed with a two-layer sweep; use for lengths where a full
// table would not fit in memory.
std::vector<BigInt> aggregate_sequence(const StepSet& steps, Point start, int max_len,
                                       const Aggregate& what);

// Complete generating function sum of a_{i,j}(n) x^i y^j t^n, guaranteed
// through t^max_len.
TSeries series_from_table(const WalkTable& table);

// Boundary sections, all guaranteed through t^max_len.
TSeries x_axis_section(const WalkTable& table);  // Q(x,0): univariate in x
TSeries y_axis_section(const WalkTable& table);  // Q(0,y): bivariate vars, x-free
TSeries origin_section(const WalkTable& table);  // Q(0,0)
// Coefficient of y^m in Q(x,y) as a univariate series in x.
TSeries y_coeff_section(const WalkTable& table, int m);

}  // namespace qwalk
