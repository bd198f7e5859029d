#include "growball/csv_report.hpp"

#include <cstdint>
#include <cstdio>

namespace growball {

std::string csv_header() {
    return "command,graph_id,n,m,k_or_r,p,centers_used,sum_ball_size,sum_xlogx_cost,"
           "bound_value,bound_slack_ratio,verify_verdict,elapsed_ms,seed";
}

std::string csv_line(const BenchRow& row) {
    std::string out;
    const std::string* fields[] = {&row.command,        &row.graph_id,
                                   &row.n,              &row.m,
                                   &row.k_or_r,         &row.p,
                                   &row.centers_used,   &row.sum_ball_size,
                                   &row.sum_xlogx_cost, &row.bound_value,
                                   &row.bound_slack_ratio, &row.verify_verdict,
                                   &row.elapsed_ms,     &row.seed};
    bool first = true;
    for (const std::string* f : fields) {
        if (!first) out.push_back(',');
        out += *f;
        first = false;
    }
    return out;
}

std::string fmt_u64(std::uint64_t value) { return std::to_string(value); }

std::string fmt_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

} // namespace growball
