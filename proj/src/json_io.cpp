#include "qwalk/json_io.hpp"

#include "qwalk/model.hpp"

namespace qwalk {

namespace {

std::string rat_str(const Rat& q) { return q.get_str(); }
Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

const char* vars_name(Vars v) { return v == Vars::X ? "x" : "xy"; }
Vars vars_parse(const std::string& s) {
    if (s == "x") return Vars::X;
    if (s == "xy") return Vars::XY;
    throw std::invalid_argument("json: bad vars tag '" + s + "'");
}

}  // namespace

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"ex", m.ex}, {"ey", m.ey}, {"c", rat_str(c)}});
    return Json{{"vars", vars_name(p.vars())}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p(vars_parse(j.at("vars").get<std::string>()));
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("ex").get<int>(), t.at("ey").get<int>(),
                   rat_parse(t.at("c").get<std::string>()));
    return p;
}

Json to_json(const TSeries& s) {
    Json coeffs = Json::array();
    for (int n = s.valuation(); n <= s.order(); ++n) coeffs.push_back(to_json(s.coeff_poly(n)));
    return Json{{"vars", vars_name(s.vars())},
                {"valuation", s.valuation()},
                {"order", s.order()},
                {"coeffs", std::move(coeffs)},
                {"text", s.to_string()}};
}

TSeries series_from_json(const Json& j) {
    const Vars v = vars_parse(j.at("vars").get<std::string>());
    const int val = j.at("valuation").get<int>();
    const int order = j.at("order").get<int>();
    std::vector<LaurentPoly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(laurent_from_json(c));
    return TSeries::from_coeffs(v, val, order, std::move(coeffs));
}

Json to_json(const CriterionReport& r) {
    Json j{{"y_symmetric", r.y_symmetric},
           {"small_horizontal", r.small_horizontal},
           {"holonomy_sufficient", r.holonomy_sufficient},
           {"note", r.note}};
    j["p0"] = r.p0 ? to_json(*r.p0) : Json(nullptr);
    j["p1"] = r.p1 ? to_json(*r.p1) : Json(nullptr);
    return j;
}

CriterionReport criterion_from_json(const Json& j) {
    CriterionReport r;
    r.y_symmetric = j.at("y_symmetric").get<bool>();
    r.small_horizontal = j.at("small_horizontal").get<bool>();
    r.holonomy_sufficient = j.at("holonomy_sufficient").get<bool>();
    r.note = j.at("note").get<std::string>();
    if (!j.at("p0").is_null()) r.p0 = laurent_from_json(j.at("p0"));
    if (!j.at("p1").is_null()) r.p1 = laurent_from_json(j.at("p1"));
    return r;
}

Json to_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            Json{{"name", c.name}, {"order_checked", c.order_checked}, {"pass", c.pass}});
    return Json{{"model", r.model},
                {"order", r.order},
                {"checks", std::move(checks)},
                {"all_pass", r.all_pass()}};
}

VerifyReport verify_from_json(const Json& j) {
    VerifyReport r;
    r.model = j.at("model").get<std::string>();
    r.order = j.at("order").get<int>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back(IdentityResult{c.at("name").get<std::string>(),
                                          c.at("order_checked").get<int>(),
                                          c.at("pass").get<bool>()});
    return r;
}

Json to_json(const Aggregate& a) {
    Json j{{"kind", aggregate_name(a.kind)}};
    if (a.kind == AggregateKind::Endpoint) j["endpoint"] = Json{{"i", a.endpoint.x}, {"j", a.endpoint.y}};
    return j;
}

Aggregate aggregate_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "free") return Aggregate::free();
    if (kind == "x_axis") return Aggregate::x_axis();
    if (kind == "origin") return Aggregate::origin();
    if (kind == "endpoint")
        return Aggregate::at(
            Point{j.at("endpoint").at("i").get<int>(), j.at("endpoint").at("j").get<int>()});
    throw std::invalid_argument("json: bad aggregate kind '" + kind + "'");
}

Json to_json(const FitResult& r) {
    Json windows = Json::array();
    for (const auto& w : r.windows) {
        Json row{{"n", w.n}, {"mu", w.mu}};
        row["alpha"] = w.alpha ? Json(*w.alpha) : Json(nullptr);
        windows.push_back(std::move(row));
    }
    return Json{{"mu", r.mu},
                {"alpha", r.alpha},
                {"mu_hp", r.mu_estimate.to_string(50)},
                {"alpha_hp", r.alpha_estimate.to_string(50)},
                {"n_used", r.n_used},
                {"support_start", r.support_start},
                {"support_step", r.support_step},
                {"depth", r.depth},
                {"windows", std::move(windows)}};
}

FitResult fit_from_json(const Json& j) {
    FitResult r;
    r.mu = j.at("mu").get<double>();
    r.alpha = j.at("alpha").get<double>();
    r.mu_estimate = Real::from_string(j.at("mu_hp").get<std::string>());
    r.alpha_estimate = Real::from_string(j.at("alpha_hp").get<std::string>());
    r.n_used = j.at("n_used").get<long>();
    r.support_start = j.at("support_start").get<long>();
    r.support_step = j.at("support_step").get<long>();
    r.depth = j.at("depth").get<int>();
    for (const auto& w : j.at("windows")) {
        FitWindow row;
        row.n = w.at("n").get<long>();
        row.mu = w.at("mu").get<double>();
        if (!w.at("alpha").is_null()) row.alpha = w.at("alpha").get<double>();
        r.windows.push_back(row);
    }
    return r;
}

Json to_json(const CompareReport& r) {
    Json target{{"model", builtin_model(r.target.model).name},
                {"aggregate", to_json(r.target.aggregate)},
                {"mu", r.target.mu},
                {"alpha", r.target.alpha},
                {"zero_sequence", r.target.zero_sequence}};
    Json j{{"target", std::move(target)},
           {"mu_rel_dev", r.mu_rel_dev},
           {"alpha_abs_dev", r.alpha_abs_dev},
           {"nonzero_terms", r.nonzero_terms}};
    j["fit"] = r.fit ? to_json(*r.fit) : Json(nullptr);
    return j;
}

CompareReport compare_from_json(const Json& j) {
    CompareReport r;
    const Json& t = j.at("target");
    r.target.model = builtin_model(t.at("model").get<std::string>()).id;
    r.target.aggregate = aggregate_from_json(t.at("aggregate"));
    r.target.mu = t.at("mu").get<double>();
    r.target.alpha = t.at("alpha").get<double>();
    r.target.zero_sequence = t.at("zero_sequence").get<bool>();
    r.mu_rel_dev = j.at("mu_rel_dev").get<double>();
    r.alpha_abs_dev = j.at("alpha_abs_dev").get<double>();
    r.nonzero_terms = j.at("nonzero_terms").get<long>();
    if (!j.at("fit").is_null()) r.fit = fit_from_json(j.at("fit"));
    return r;
}

Json to_json(const EnumerationReport& r) {
    Json j{{"steps", r.steps},
           {"start", Json{{"i", r.start.x}, {"j", r.start.y}}},
           {"max_len", r.max_len}};
    if (r.has_aggregate) {
        j["aggregate"] = to_json(r.aggregate_kind);
        Json counts = Json::array();
        for (const auto& c : r.counts) counts.push_back(c.get_str());
        j["counts"] = std::move(counts);
    } else {
        j["aggregate"] = Json(nullptr);
        Json cells = Json::array();
        for (const auto& c : r.cells)
            cells.push_back(
                Json{{"n", c.n}, {"i", c.i}, {"j", c.j}, {"count", c.count.get_str()}});
        j["cells"] = std::move(cells);
    }
    return j;
}

EnumerationReport enumeration_from_json(const Json& j) {
    EnumerationReport r;
    r.steps = j.at("steps").get<std::string>();
    r.start = Point{j.at("start").at("i").get<int>(), j.at("start").at("j").get<int>()};
    r.max_len = j.at("max_len").get<int>();
    r.has_aggregate = !j.at("aggregate").is_null();
    if (r.has_aggregate) {
        r.aggregate_kind = aggregate_from_json(j.at("aggregate"));
        for (const auto& c : j.at("counts")) r.counts.emplace_back(c.get<std::string>());
    } else {
        for (const auto& c : j.at("cells"))
            r.cells.push_back(EnumerationReport::Cell{c.at("n").get<int>(), c.at("i").get<int>(),
                                                      c.at("j").get<int>(),
                                                      BigInt(c.at("count").get<std::string>())});
    }
    return r;
}

}  // namespace qwalk
