#pragma once

#include "qwalk/laurent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

struct Step {
    int dx = 0;
    int dy = 0;
    friend auto operator<=>(const Step&, const Step&) = default;
};

struct Point {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// A finite set of distinct step vectors.  Derived quantities are computed
// from the steps on every call, never cached.
class StepSet {
public:
    explicit StepSet(std::vector<Step> steps);

    // Parses the CLI grammar "(dx,dy);(dx,dy);...", whitespace-insensitive.
    static StepSet parse(std::string_view text);

    const std::vector<Step>& steps() const { return steps_; }
    bool contains(Step s) const;
    std::size_t size() const { return steps_.size(); }

    // max(0, -min dx): the x-exponent cleared when the step equation is
    // multiplied through.
    int largest_left_move() const;
    // max(0, -min dy): the number of kernel roots vanishing at t = 0.
    int largest_down_move() const;
    int max_dx() const;  // largest positive dx (0 if none)
    int max_dy() const;

    // (i,j) in S implies (-i,j) in S.
    bool y_symmetric() const;
    // |dx| <= 1 for every step.
    bool small_horizontal() const;

    // Step polynomial sum x^dx y^dy.
    LaurentPoly step_polynomial() const;

    std::string to_string() const;
    bool operator==(const StepSet&) const = default;

private:
    std::vector<Step> steps_;  // sorted, unique
};

// Outcome of the D-finiteness sufficiency test: y-axis symmetry plus
// small horizontal variations imply a D-finite complete generating
// function.  The condition is sufficient only, hence the field name;
// holonomy_sufficient == false proves nothing.
struct CriterionReport {
    bool y_symmetric = false;
    bool small_horizontal = false;
    bool holonomy_sufficient = false;
    // sum over (0,j) of y^j and sum over (1,j) of y^j; populated only
    // when small_horizontal holds.
    std::optional<LaurentPoly> p0;
    std::optional<LaurentPoly> p1;
    // Free-form tag, e.g. for marking a step set degenerate by hand.
    std::string note;
};

CriterionReport analyze(const StepSet& steps);

}  // namespace qwalk
