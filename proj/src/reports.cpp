#include "klooster/reports.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace klooster {

namespace {

std::vector<std::string> split_csv(const std::string& line, std::size_t expect) {
    std::vector<std::string> fields;
    std::string cur;
    for (const char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != '\n') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    if (fields.size() != expect)
        throw std::invalid_argument("csv row has " + std::to_string(fields.size()) +
                                    " fields, expected " + std::to_string(expect));
    return fields;
}

double parse_real(const std::string& s) {
    double v = 0.0;
    const auto* b = s.data();
    const auto* e = s.data() + s.size();
    const auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc() || res.ptr != e)
        throw std::invalid_argument("bad real field: '" + s + "'");
    return v;
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer field: '" + s + "'");
    return v;
}

}  // namespace

std::string csv_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string moment_csv_header() {
    return "p,k,kind,value,predicted,residual,envelope_main,envelope_radius,pass";
}

std::string moment_csv_row(const MomentReport& r) {
    std::ostringstream os;
    os << r.p << ',' << r.k << ',' << r.kind << ',' << csv_real(r.value) << ','
       << (r.predicted ? csv_real(*r.predicted) : "") << ','
       << (r.residual ? csv_real(*r.residual) : "") << ',' << csv_real(r.envelope_main) << ','
       << csv_real(r.envelope_radius) << ',' << (r.pass ? 1 : 0);
    return os.str();
}

MomentReport parse_moment_csv_row(const std::string& line) {
    const auto f = split_csv(line, 9);
    MomentReport r;
    r.p = parse_int(f[0]);
    r.k = static_cast<int>(parse_int(f[1]));
    r.kind = f[2];
    if (r.kind != "signed" && r.kind != "abs")
        throw std::invalid_argument("bad kind field: '" + r.kind + "'");
    r.value = parse_real(f[3]);
    if (!f[4].empty()) r.predicted = parse_real(f[4]);
    if (!f[5].empty()) r.residual = parse_real(f[5]);
    r.envelope_main = parse_real(f[6]);
    r.envelope_radius = parse_real(f[7]);
    const std::int64_t pass = parse_int(f[8]);
    if (pass != 0 && pass != 1) throw std::invalid_argument("bad pass field: '" + f[8] + "'");
    r.pass = pass == 1;
    return r;
}

std::string twisted_csv_header() { return "p,j,k,quantity,ratio,tag"; }

std::string twisted_csv_row(const TwistedMomentRow& r) {
    std::ostringstream os;
    os << r.p << ',' << r.j << ',' << r.k << ',' << r.quantity << ',' << csv_real(r.ratio) << ','
       << r.tag;
    return os.str();
}

std::string qseries_csv_header() { return "n,coeff"; }

std::string qseries_csv_row(std::int64_t n, std::int64_t coeff) {
    return std::to_string(n) + "," + std::to_string(coeff);
}

std::string verify_json(const WeilReport& weil, const std::vector<MomentReport>& identities,
                        const std::vector<AngleSumRow>& angle_sums,
                        const std::vector<MomentReport>& envelopes, const SignStatistics& signs) {
    using nlohmann::json;
    json j;
    j["p"] = weil.p;
    j["bounds"] = {{"max_abs", weil.max_abs},
                   {"max_ratio", weil.max_ratio},
                   {"weil", weil.weil_bound},
                   {"tolev", weil.tolev_bound},
                   {"kloosterman", weil.kloosterman_bound},
                   {"pass", weil.pass},
                   {"canonical_order", weil.canonical_order}};
    auto moment_to_json = [](const MomentReport& r) {
        json m{{"name", r.name}, {"p", r.p},        {"k", r.k},
               {"kind", r.kind}, {"value", r.value}, {"pass", r.pass}};
        if (r.predicted) m["predicted"] = *r.predicted;
        if (r.residual) m["residual"] = *r.residual;
        if (r.envelope_radius != 0.0) {
            m["envelope_main"] = r.envelope_main;
            m["envelope_radius"] = r.envelope_radius;
        }
        return m;
    };
    j["identities"] = json::array();
    for (const auto& r : identities) j["identities"].push_back(moment_to_json(r));
    j["angle_power_sums"] = json::array();
    for (const auto& r : angle_sums)
        j["angle_power_sums"].push_back(
            {{"p", r.p}, {"k", r.k}, {"sum", r.sum}, {"bound", r.bound}, {"pass", r.pass}});
    j["envelopes"] = json::array();
    for (const auto& r : envelopes) j["envelopes"].push_back(moment_to_json(r));
    j["sign_statistics"] = {{"p", signs.p},
                            {"pos_count", signs.pos_count},
                            {"neg_count", signs.neg_count},
                            {"zero_count", signs.zero_count},
                            {"pos_sum", signs.pos_sum},
                            {"neg_sum", signs.neg_sum},
                            {"v1", signs.v1},
                            {"w1", signs.w1},
                            {"v2", signs.v2},
                            {"split_ok", signs.split_ok},
                            {"cauchy_pos", signs.cauchy_pos},
                            {"cauchy_neg", signs.cauchy_neg},
                            {"pos_sum_ratio", signs.pos_sum_ratio},
                            {"abs_sum_ratio", signs.abs_sum_ratio},
                            {"pos_count_ratio", signs.pos_count_ratio},
                            {"pass", signs.pass}};
    bool all = weil.pass && signs.pass;
    for (const auto& r : identities) all = all && r.pass;
    for (const auto& r : angle_sums) all = all && r.pass;
    for (const auto& r : envelopes) all = all && r.pass;
    j["pass"] = all;
    return j.dump(2);
}

}  // namespace klooster
