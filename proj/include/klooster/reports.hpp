#pragma once

#include <string>
#include <vector>

#include "klooster/etaseries.hpp"
#include "klooster/kloosterman.hpp"
#include "klooster/moments.hpp"
#include "klooster/twisted.hpp"

namespace klooster {

// Real number -> shortest round-trippable decimal (17 significant digits,
// '.' decimal separator, no locale dependence).
std::string csv_real(double v);

// Moment/envelope rows share one schema:
//   p,k,kind,value,predicted,residual,envelope_main,envelope_radius,pass
// with empty fields for absent optionals and pass as 0/1.
std::string moment_csv_header();
std::string moment_csv_row(const MomentReport& r);
MomentReport parse_moment_csv_row(const std::string& line);  // inverse of the above

// Twisted diagnostics: p,j,k,quantity,ratio,tag
std::string twisted_csv_header();
std::string twisted_csv_row(const TwistedMomentRow& r);

// q-expansion dump: n,coeff
std::string qseries_csv_header();
std::string qseries_csv_row(std::int64_t n, std::int64_t coeff);

// JSON object for a full single-prime verification: identities, bound report,
// angle-power sums, envelopes, sign statistics.
std::string verify_json(const WeilReport& weil, const std::vector<MomentReport>& identities,
                        const std::vector<AngleSumRow>& angle_sums,
                        const std::vector<MomentReport>& envelopes, const SignStatistics& signs);

}  // namespace klooster
