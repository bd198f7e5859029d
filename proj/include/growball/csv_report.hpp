#pragma once

#include <string>

namespace growball {

// One benchmark CSV row. Fields are preformatted strings; inapplicable
// columns stay empty. The column order is fixed and the header is always
// emitted first.
struct BenchRow {
    std::string command;
    std::string graph_id;
    std::string n;
    std::string m;
    std::string k_or_r;
    std::string p;
    std::string centers_used;
    std::string sum_ball_size;
    std::string sum_xlogx_cost;
    std::string bound_value;
    std::string bound_slack_ratio;
    std::string verify_verdict;
    std::string elapsed_ms; // filled only under --timings to keep output byte-stable
    std::string seed;
};

std::string csv_header();
std::string csv_line(const BenchRow& row);

std::string fmt_u64(std::uint64_t value);
std::string fmt_double(double value);

} // namespace growball
