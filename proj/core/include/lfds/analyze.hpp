#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lfds/cycle_set.hpp"
#include "lfds/factor.hpp"
#include "lfds/height.hpp"
#include "lfds/oracle.hpp"
#include "lfds/poly.hpp"

namespace lfds {

struct AnalysisRequest {
    int64_t p = 2;
    int d = 1;
    int e = 1;
    std::string h_text;  // tower modulus in t, required iff d > 1
    std::string f_text;
    std::string m_text;
    bool grouped = false;
    bool check_oracle = false;
    uint64_t oracle_cap = 1u << 20;
    uint64_t seed = kDefaultSeed;
};

struct ParsedSystem {
    RingSpecPtr spec;
    GrPoly f, m;  // at precision e, m normalized monic
};

// Builds the ring spec and parses f, m at precision e. A unit leading
// coefficient of m is normalized away; anything else is rejected.
ParsedSystem parse_system(const AnalysisRequest& req);

struct StageTiming {
    std::string stage;
    double milliseconds;
};

struct ThetaEcho {
    std::vector<std::string> members;  // irreducible bases, printed
    std::string theta;                 // class polynomial, printed
    Int base_order;
    Int class_order;  // O(F, Theta_j)
};

struct AnalysisReport {
    AnalysisRequest request;
    std::vector<CycleSet> cycle_sets;  // index eps-1
    HeightReport height;
    std::string m1_text, m2_text;  // field-level decomposition
    std::vector<std::pair<std::string, int>> factors;  // (G printed, multiplicity)
    std::vector<ThetaEcho> theta_classes;
    std::vector<StageTiming> timings;
    bool oracle_checked = false;
    bool oracle_match = true;
    std::string oracle_detail;
};

AnalysisReport run_analysis(const AnalysisRequest& req);

// Versioned JSON serialization; numbers are exact integers (values beyond
// 64 bits are emitted as decimal strings).
std::string report_to_json(const AnalysisReport& report);
AnalysisRequest request_from_json(const std::string& json_text);

struct HistogramRow {
    Int order;
    uint64_t divisor_count;
};

// Base orders of the irreducible divisors of M1, aggregated per order.
std::vector<HistogramRow> orders_histogram(const AnalysisRequest& req);
std::string histogram_csv(const std::vector<HistogramRow>& rows);
std::string histogram_json(const std::vector<HistogramRow>& rows);

std::string summary_to_json(const GraphSummary& summary);

}  // namespace lfds
