#include "qwalk/asymptotics.hpp"

#include "qwalk/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace qwalk {

std::string Real::to_string(int digits) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
    return buf;
}

namespace {

struct Support {
    long start = 0;
    long step = 1;
    long count = 0;  // number of usable terms
};

// Longest suffix of the nonzero support forming an arithmetic progression.
Support find_support(const std::vector<BigInt>& seq, bool skip_zeros) {
    std::vector<long> nz;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] != 0) nz.push_back(static_cast<long>(i));
    if (!skip_zeros) {
        if (nz.size() != seq.size())
            throw std::invalid_argument("fit: zero terms present; pass skip_zeros");
        return Support{0, 1, static_cast<long>(seq.size())};
    }
    if (nz.size() < 2) throw std::invalid_argument("fit: fewer than two nonzero terms");
    const long d = nz[nz.size() - 1] - nz[nz.size() - 2];
    std::size_t first = nz.size() - 2;
    while (first > 0 && nz[first] - nz[first - 1] == d) --first;
    return Support{nz[first], d, static_cast<long>(nz.size() - first)};
}

std::vector<Real> support_logs(const std::vector<BigInt>& seq, const Support& s) {
    std::vector<Real> logs;
    logs.reserve(static_cast<std::size_t>(s.count));
    for (long m = 0; m < s.count; ++m)
        logs.push_back(Real(seq[static_cast<std::size_t>(s.start + m * s.step)]).log());
    return logs;
}

// Second difference of log a over the windows (w, 2w, 4w); the growth term
// cancels and what is left is alpha * log 2 plus vanishing corrections.
Real alpha_at_window(const std::vector<Real>& logs, long w) {
    const Real d1 = logs[static_cast<std::size_t>(2 * w)] - logs[static_cast<std::size_t>(w)];
    const Real d2 = logs[static_cast<std::size_t>(4 * w)] - logs[static_cast<std::size_t>(2 * w)];
    return (d1 + d1 - d2) / Real::log2();
}

}  // namespace

FitResult fit(const std::vector<BigInt>& sequence, bool skip_zeros) {
    const Support sup = find_support(sequence, skip_zeros);
    if (sup.count < 32)
        throw std::invalid_argument("fit: need at least 32 nonzero terms, have " +
                                    std::to_string(sup.count));
    const std::vector<Real> logs = support_logs(sequence, sup);
    const long m_top = sup.count - 2;  // largest m with a ratio available

    // Ratio estimates at doubling windows, extrapolated to m = infinity by
    // Neville's scheme in the variable 1/m.
    int depth = 0;
    while (depth < 3 && (m_top >> (depth + 1)) >= 8) ++depth;
    std::vector<long> nodes;  // ascending
    for (int j = depth; j >= 0; --j) nodes.push_back(m_top >> j);

    std::vector<Real> tableau;
    for (long m : nodes)
        tableau.push_back((logs[static_cast<std::size_t>(m + 1)] -
                           logs[static_cast<std::size_t>(m)]).exp());
    std::vector<Real> ratio_at_node = tableau;
    for (std::size_t k = 1; k < tableau.size(); ++k)
        for (std::size_t i = tableau.size() - 1; i >= k; --i) {
            const Real xi(1.0 / static_cast<double>(nodes[i]));
            const Real xik(1.0 / static_cast<double>(nodes[i - k]));
            tableau[i] = (xi * tableau[i - 1] - xik * tableau[i]) / (xi - xik);
        }
    const Real mu_step = tableau.back();  // growth per support step
    const Real mu = mu_step.root(static_cast<unsigned long>(sup.step));

    // alpha from second differences, one extrapolation level.
    const long w = m_top / 4;
    if (w < 2) throw std::invalid_argument("fit: sequence too short for the alpha windows");
    const Real alpha_a = alpha_at_window(logs, w);
    const Real alpha_b = alpha_at_window(logs, w / 2);
    const Real alpha = alpha_a + alpha_a - alpha_b;

    FitResult result;
    result.mu_estimate = mu;
    result.alpha_estimate = alpha;
    result.mu = mu.to_double();
    result.alpha = alpha.to_double();
    result.n_used = sup.start + (sup.count - 1) * sup.step;
    result.support_start = sup.start;
    result.support_step = sup.step;
    result.depth = depth;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        FitWindow row;
        row.n = sup.start + nodes[i] * sup.step;
        row.mu = ratio_at_node[i].root(static_cast<unsigned long>(sup.step)).to_double();
        if (4 * nodes[i] <= sup.count - 1 && nodes[i] >= 1)
            row.alpha = alpha_at_window(logs, nodes[i]).to_double();
        result.windows.push_back(row);
    }
    return result;
}

std::vector<ExtrapolantRow> extrapolant_rows(const std::vector<BigInt>& sequence,
                                             const FitResult& fit) {
    Support sup{fit.support_start, fit.support_step,
                (fit.n_used - fit.support_start) / fit.support_step + 1};
    const std::vector<Real> logs = support_logs(sequence, sup);
    std::vector<ExtrapolantRow> rows;
    for (long m = 0; m < sup.count; ++m) {
        ExtrapolantRow row;
        row.n = sup.start + m * sup.step;
        row.a = sequence[static_cast<std::size_t>(row.n)];
        if (m + 1 < sup.count)
            row.mu = (logs[static_cast<std::size_t>(m + 1)] - logs[static_cast<std::size_t>(m)])
                         .exp()
                         .root(static_cast<unsigned long>(sup.step))
                         .to_double();
        if (m >= 1 && 4 * m < sup.count)
            row.alpha = alpha_at_window(logs, m).to_double();
        rows.push_back(std::move(row));
    }
    return rows;
}

AsymptoticTarget paper_target(Model model, const Aggregate& aggregate) {
    AsymptoticTarget t{model, aggregate, 0, 0, false};
    const bool fixed_endpoint =
        aggregate.kind == AggregateKind::Endpoint || aggregate.kind == AggregateKind::Origin;
    switch (model) {
        case Model::Square:
        case Model::Diagonal:
            t.mu = 4;
            t.alpha = fixed_endpoint ? -3 : (aggregate.kind == AggregateKind::XAxis ? -2 : -1);
            break;
        case Model::Kreweras:
            t.mu = 3;
            t.alpha = fixed_endpoint ? -2.5 : (aggregate.kind == AggregateKind::XAxis ? -1.75 : -0.75);
            break;
        case Model::Knight:
            if (fixed_endpoint) {
                t.zero_sequence = true;  // at most one nonzero term
            } else if (aggregate.kind == AggregateKind::XAxis) {
                t.mu = 3.0 / std::pow(4.0, 1.0 / 3.0);
                t.alpha = -1.5;
            } else {
                t.mu = 2;
                t.alpha = 0;
            }
            break;
    }
    return t;
}

namespace {

std::vector<BigInt> kreweras_axis_sequence(long max_n) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (long n = 0; n <= max_n; ++n) {
        BigInt sum(0);
        for (long i = 0; 2 * i <= n; ++i) {
            if ((n - 2 * i) % 3 != 0) continue;
            sum += kreweras_axis_count(i, (n - 2 * i) / 3);
        }
        out.push_back(std::move(sum));
    }
    return out;
}

// Total Kreweras walks of length n.  Setting x = y = 1 in the step
// equation gives (1 - 3t) Q(1,1;t) = 1 - 2t Q(1,0;t), so the totals are a
// cumulative transform of the axis counts.
std::vector<BigInt> kreweras_free_sequence(long max_n) {
    const std::vector<BigInt> axis = kreweras_axis_sequence(std::max(0L, max_n - 1));
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    BigInt pow3(1), s(0);
    out.push_back(BigInt(1));
    for (long n = 1; n <= max_n; ++n) {
        pow3 *= 3;
        s = s * 3 + axis[static_cast<std::size_t>(n - 1)];
        out.push_back(pow3 - 2 * s);
    }
    return out;
}

}  // namespace

std::vector<BigInt> model_sequence(Model model, const Aggregate& aggregate, long max_n) {
    if (max_n < 0) throw std::invalid_argument("model_sequence: negative length");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    switch (model) {
        case Model::Square:
            for (long n = 0; n <= max_n; ++n) {
                switch (aggregate.kind) {
                    case AggregateKind::Free: out.push_back(square_total(n)); break;
                    case AggregateKind::Origin: out.push_back(square_count(0, 0, n)); break;
                    case AggregateKind::Endpoint:
                        out.push_back(square_count(aggregate.endpoint.x, aggregate.endpoint.y, n));
                        break;
                    case AggregateKind::XAxis: {
                        BigInt sum(0);
                        for (long i = n % 2; i <= n; i += 2) sum += square_count(i, 0, n);
                        out.push_back(std::move(sum));
                        break;
                    }
                }
            }
            return out;
        case Model::Diagonal:
            for (long n = 0; n <= max_n; ++n) {
                switch (aggregate.kind) {
                    case AggregateKind::Free: out.push_back(diagonal_total(n)); break;
                    case AggregateKind::Origin: out.push_back(diagonal_count(0, 0, n)); break;
                    case AggregateKind::Endpoint:
                        out.push_back(
                            diagonal_count(aggregate.endpoint.x, aggregate.endpoint.y, n));
                        break;
                    case AggregateKind::XAxis: {
                        BigInt sum(0);
                        if (n % 2 == 0)
                            for (long i = 0; i <= n; i += 2) sum += diagonal_count(i, 0, n);
                        out.push_back(std::move(sum));
                        break;
                    }
                }
            }
            return out;
        case Model::Kreweras:
            switch (aggregate.kind) {
                case AggregateKind::Free: return kreweras_free_sequence(max_n);
                case AggregateKind::XAxis: return kreweras_axis_sequence(max_n);
                case AggregateKind::Origin:
                    for (long n = 0; n <= max_n; ++n)
                        out.push_back(n % 3 == 0 ? kreweras_axis_count(0, n / 3) : BigInt(0));
                    return out;
                case AggregateKind::Endpoint:
                    if (aggregate.endpoint.y == 0) {
                        const long i = aggregate.endpoint.x;
                        for (long n = 0; n <= max_n; ++n)
                            out.push_back((n >= 2 * i && (n - 2 * i) % 3 == 0)
                                              ? kreweras_axis_count(i, (n - 2 * i) / 3)
                                              : BigInt(0));
                        return out;
                    }
                    break;  // general endpoint: fall through to the table
            }
            break;
        case Model::Knight:
            break;
    }
    const ModelSpec& spec = builtin_model(model);
    return aggregate_sequence(spec.steps, spec.start, static_cast<int>(max_n), aggregate);
}

CompareReport compare_to_paper(Model model, const Aggregate& aggregate, long max_n) {
    CompareReport report;
    report.target = paper_target(model, aggregate);
    const std::vector<BigInt> seq = model_sequence(model, aggregate, max_n);
    if (report.target.zero_sequence) {
        for (const auto& a : seq)
            if (a != 0) ++report.nonzero_terms;
        return report;
    }
    report.fit = fit(seq, true);
    report.mu_rel_dev = std::abs(report.fit->mu - report.target.mu) / report.target.mu;
    report.alpha_abs_dev = std::abs(report.fit->alpha - report.target.alpha);
    for (const auto& a : seq)
        if (a != 0) ++report.nonzero_terms;
    return report;
}

std::vector<BigInt> synthetic_sequence(double mu, double alpha, long max_n) {
    if (max_n < 1) throw std::invalid_argument("synthetic_sequence: need max_n >= 1");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    out.push_back(BigInt(0));
    const Real log_mu = Real(mu).log();
    for (long n = 1; n <= max_n; ++n) {
        const Real value = (Real(n) * log_mu + Real(alpha) * Real(n).log()).exp();
        out.push_back(value.floor_to_int());
    }
    return out;
}

}  // namespace qwalk
