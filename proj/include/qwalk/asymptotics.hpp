#pragma once

#include "qwalk/enumerate.hpp"
#include "qwalk/model.hpp"
#include "qwalk/real.hpp"

#include <optional>
#include <vector>

namespace qwalk {

// One row of the extrapolation diagnostics, in the original index scale.
struct FitWindow {
    long n = 0;
    double mu = 0;  // ratio-based growth estimate at this window
    std::optional<double> alpha;
};

// Estimated a_n ~ mu^n * n^alpha.  mu comes from the ratio sequence
// extrapolated over doubling windows; alpha from second differences of
// log a_n over the windows (n, 2n, 4n), which cancels the mu term, with
// one further extrapolation step.  Both reported in the original index
// scale even when the sequence lives on an arithmetic progression.
struct FitResult {
    Real mu_estimate;
    Real alpha_estimate;
    double mu = 0;      // convenience doubles of the two estimates
    double alpha = 0;
    long n_used = 0;            // largest index entering the fit
    long support_start = 0;     // first index of the fitted progression
    long support_step = 1;      // gap of the fitted progression
    int depth = 0;              // extrapolation depth (number of halvings)
    std::vector<FitWindow> windows;
};

// Fits mu and alpha from exact counts.  With skip_zeros the sequence is
// restricted to the longest suffix of its nonzero support that forms an
// arithmetic progression; at least 32 nonzero terms are required.
FitResult fit(const std::vector<BigInt>& sequence, bool skip_zeros);

// Per-term extrapolant rows (n, a_n, mu_n, alpha_n) for CSV output.
struct ExtrapolantRow {
    long n = 0;
    BigInt a;
    std::optional<double> mu;
    std::optional<double> alpha;
};
std::vector<ExtrapolantRow> extrapolant_rows(const std::vector<BigInt>& sequence,
                                             const FitResult& fit);

// Expected (mu, alpha) for a model/aggregate pair.  zero_sequence marks
// the rows whose counts are eventually zero (knight walks to a fixed
// endpoint); those are checked structurally instead of fitted.
struct AsymptoticTarget {
    Model model;
    Aggregate aggregate;
    double mu = 0;
    double alpha = 0;
    bool zero_sequence = false;
};
AsymptoticTarget paper_target(Model model, const Aggregate& aggregate);

// Exact count sequence for a model/aggregate pair: closed forms where the
// catalog provides them, dynamic programming otherwise.
std::vector<BigInt> model_sequence(Model model, const Aggregate& aggregate, long max_n);

struct CompareReport {
    AsymptoticTarget target;
    std::optional<FitResult> fit;  // absent for structurally-zero rows
    double mu_rel_dev = 0;         // |mu_est - mu| / mu
    double alpha_abs_dev = 0;
    // For zero_sequence targets: number of nonzero terms seen (expected <= 1).
    long nonzero_terms = 0;
};
CompareReport compare_to_paper(Model model, const Aggregate& aggregate, long max_n);

// floor(mu^n * n^alpha) as exact integers, for fit calibration.
std::vector<BigInt> synthetic_sequence(double mu, double alpha, long max_n);

}  // namespace qwalk
