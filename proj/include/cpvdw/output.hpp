#pragma once

#include "cpvdw/asymptotics.hpp"
#include "cpvdw/curve.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace cpvdw::output {

std::string_view engine_version();

//! "%.17g": round-trips every double.
std::string format_double(double v);

//! '#'-prefixed metadata lines, then `distance,<channel>...,total` and one
//! row per grid point.
void write_curve_csv(std::ostream &out, const potentials::PotentialCurve &curve);
void write_curve_json(std::ostream &out,
                      const potentials::PotentialCurve &curve);

//! Rows `distance,slope,sign`; masked slopes are written as "nan".
void write_slopes_csv(std::ostream &out, const asymptotics::SlopeProfile &p,
                      const potentials::PotentialCurve &source,
                      const std::string &channel);
void write_slopes_json(std::ostream &out, const asymptotics::SlopeProfile &p,
                       const potentials::PotentialCurve &source,
                       const std::string &channel);

void write_tables_text(std::ostream &out,
                       const asymptotics::TableReport &report);
void write_tables_json(std::ostream &out,
                       const asymptotics::TableReport &report,
                       const potentials::EvalContext &ctx);

} // namespace cpvdw::output
