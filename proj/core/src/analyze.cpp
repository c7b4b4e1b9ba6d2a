#include "lfds/analyze.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "lfds/decompose.hpp"
#include "lfds/order.hpp"
#include "lfds/poly_text.hpp"
#include "pipeline.hpp"

namespace lfds {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v >= 0 && v <= Int(UINT64_MAX)) return static_cast<uint64_t>(v);
    return v.str();
}

json cycle_set_to_json(const CycleSet& c) {
    json arr = json::array();
    for (const auto& len : c.lengths) arr.push_back(int_to_json(len));
    return arr;
}

class StageClock {
  public:
    explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}
    template <typename F>
    auto time(const std::string& stage, F&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto result = fn();
        auto stop = std::chrono::steady_clock::now();
        sink_.push_back({stage, std::chrono::duration<double, std::milli>(stop - start).count()});
        return result;
    }

  private:
    std::vector<StageTiming>& sink_;
};

}  // namespace

ParsedSystem parse_system(const AnalysisRequest& req) {
    if (req.d > 1 && req.h_text.empty())
        throw std::invalid_argument("request: d > 1 requires an explicit tower modulus h");
    std::vector<int64_t> h;
    if (!req.h_text.empty()) h = parse_tpoly(req.p, req.h_text);
    RingSpecPtr spec = make_ring_spec(req.p, req.d, req.e, std::move(h));

    GrPoly f = parse_poly(spec, req.e, req.f_text);
    GrPoly m = parse_poly(spec, req.e, req.m_text);
    if (m.is_zero()) throw std::invalid_argument("request: m must be nonzero");
    if (!m.is_monic()) {
        GrElem lc = m.leading();
        if (!lc.is_unit())
            throw std::invalid_argument(
                "request: m must be monic or have a unit leading coefficient");
        m = lc.inv() * m;
    }
    return {std::move(spec), std::move(f), std::move(m)};
}

AnalysisReport run_analysis(const AnalysisRequest& req) {
    AnalysisReport report;
    report.request = req;
    StageClock clock(report.timings);

    ParsedSystem sys = clock.time("parse", [&] { return parse_system(req); });

    SystemSplit split =
        clock.time("decompose", [&] { return split_system(sys.f, sys.m, req.e, req.seed); });
    const GrPoly F = sys.f.project(1);
    GrPoly m1_field = GrPoly::one(sys.spec, 1), m2_field = split.m2.project(1);
    std::vector<Int> base_orders;
    for (const auto& [g, k] : split.field_data) {
        m1_field = m1_field * poly_pow(g, k);
        report.factors.emplace_back(print_poly(g), k);
    }
    report.m1_text = print_poly(m1_field);
    report.m2_text = print_poly(m2_field);

    auto groups = clock.time("orders", [&] {
        for (const auto& [g, k] : split.field_data) base_orders.push_back(order_irreducible(F, g));
        return theta_grouping(split, base_orders);
    });
    for (const auto& grp : groups) {
        ThetaEcho echo;
        for (const auto& g : grp.members) echo.members.push_back(print_poly(g));
        echo.theta = print_poly(grp.theta_field);
        echo.base_order = grp.base_order;
        echo.class_order = order_composite(F, grp.theta_field, req.seed);
        report.theta_classes.push_back(std::move(echo));
    }

    report.cycle_sets = clock.time("cycle_sets", [&] {
        return req.grouped ? cycle_set_ring_grouped(sys.f, sys.m, req.e, req.seed)
                           : cycle_set_ring(sys.f, sys.m, req.e, req.seed);
    });

    const Int l_max = report.cycle_sets.back().max();
    report.height =
        clock.time("height", [&] { return height_ring(sys.f, sys.m, req.e, l_max, req.seed); });

    if (req.check_oracle) {
        GraphSummary summary = clock.time(
            "oracle", [&] { return build_graph(sys.f, sys.m, req.e, req.oracle_cap); });
        report.oracle_checked = true;
        CycleSet oracle_set;
        for (const auto& [len, count] : summary.cycles) oracle_set.lengths.insert(Int(len));
        if (!(oracle_set == report.cycle_sets.back())) {
            report.oracle_match = false;
            report.oracle_detail = "cycle length sets differ";
        } else if (Int(summary.max_height) != Int(report.height.height)) {
            report.oracle_match = false;
            report.oracle_detail = "heights differ";
        } else {
            report.oracle_match = true;
            report.oracle_detail = "cycle lengths and height match";
        }
    }
    return report;
}

namespace {

json request_to_json(const AnalysisRequest& req) {
    return json{{"p", req.p},
                {"d", req.d},
                {"e", req.e},
                {"h", req.h_text},
                {"f", req.f_text},
                {"m", req.m_text},
                {"grouped", req.grouped},
                {"check_oracle", req.check_oracle},
                {"oracle_cap", req.oracle_cap},
                {"seed", req.seed}};
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
    json doc;
    doc["schema_version"] = 1;
    doc["request"] = request_to_json(report.request);
    json sets = json::array();
    for (const auto& c : report.cycle_sets) sets.push_back(cycle_set_to_json(c));
    doc["cycle_sets"] = sets;
    doc["height"] = json{{"field_height", report.height.field_height},
                         {"bound", report.height.bound},
                         {"height", report.height.height},
                         {"probe_count", report.height.probe_count}};
    json factors = json::array();
    for (const auto& [g, k] : report.factors)
        factors.push_back(json{{"poly", g}, {"multiplicity", k}});
    json thetas = json::array();
    for (const auto& t : report.theta_classes) {
        thetas.push_back(json{{"members", t.members},
                              {"theta", t.theta},
                              {"base_order", int_to_json(t.base_order)},
                              {"class_order", int_to_json(t.class_order)}});
    }
    doc["decomposition"] =
        json{{"m1", report.m1_text}, {"m2", report.m2_text}, {"factors", factors},
             {"theta_classes", thetas}};
    json timings = json::array();
    for (const auto& t : report.timings)
        timings.push_back(json{{"stage", t.stage}, {"ms", t.milliseconds}});
    doc["timings"] = timings;
    if (report.oracle_checked)
        doc["oracle"] = json{{"match", report.oracle_match}, {"detail", report.oracle_detail}};
    return doc.dump(2);
}

AnalysisRequest request_from_json(const std::string& json_text) {
    json doc = json::parse(json_text);
    const json& r = doc.contains("request") ? doc["request"] : doc;
    AnalysisRequest req;
    req.p = r.at("p").get<int64_t>();
    req.d = r.at("d").get<int>();
    req.e = r.at("e").get<int>();
    req.h_text = r.value("h", std::string());
    req.f_text = r.at("f").get<std::string>();
    req.m_text = r.at("m").get<std::string>();
    req.grouped = r.value("grouped", false);
    req.check_oracle = r.value("check_oracle", false);
    req.oracle_cap = r.value("oracle_cap", static_cast<uint64_t>(1u << 20));
    req.seed = r.value("seed", kDefaultSeed);
    return req;
}

std::vector<HistogramRow> orders_histogram(const AnalysisRequest& req) {
    ParsedSystem sys = parse_system(req);
    auto pipe = detail::field_pipeline(sys.f, sys.m, req.seed);
    std::map<Int, uint64_t> rows;
    for (const auto& fac : pipe.factors) rows[fac.base_order] += 1;
    std::vector<HistogramRow> out;
    for (const auto& [order, count] : rows) out.push_back({order, count});
    return out;
}

std::string histogram_csv(const std::vector<HistogramRow>& rows) {
    std::string out = "order,count\n";
    for (const auto& row : rows) out += row.order.str() + "," + std::to_string(row.divisor_count) + "\n";
    return out;
}

std::string histogram_json(const std::vector<HistogramRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows)
        arr.push_back(json{{"order", int_to_json(row.order)}, {"count", row.divisor_count}});
    return arr.dump(2);
}

std::string summary_to_json(const GraphSummary& summary) {
    json doc;
    doc["state_count"] = summary.state_count;
    json cycles = json::array();
    for (const auto& [len, count] : summary.cycles)
        cycles.push_back(json{{"length", len}, {"count", count}});
    doc["cycles"] = cycles;
    doc["max_height"] = summary.max_height;
    json comps = json::array();
    for (const auto& c : summary.components)
        comps.push_back(json{{"cycle_length", c.cycle_length},
                             {"size", c.size},
                             {"tree_height", c.tree_height}});
    doc["components"] = comps;
    return doc.dump(2);
}

}  // namespace lfds
