#pragma once

// File formats: array files, certificate / enumerator / bound-table JSON, curve CSV.

#include "nrt/asymptotics.hpp"
#include "nrt/bounds.hpp"
#include "nrt/delsarte_lp.hpp"
#include "nrt/macwilliams.hpp"
#include "nrt/ordered_space.hpp"

#include "json.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace nrt::io {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Line 1 "q r n", then one row of rn symbols per line; '#' starts a comment line.
ArrayTable read_array(std::istream& in);
ArrayTable read_array_file(const std::string& path);
void write_array(std::ostream& out, const ArrayTable& table);

/// 12 significant digits.
std::string format_double(double x);
std::string format_rational(const Rational& x);

Json params_json(const SpaceParams& params);
SpaceParams params_from_json(const Json& j);

Json certificate_to_json(const DualCertificate& cert);
DualCertificate certificate_from_json(const Json& j);

Json enumerator_to_json(const WeightEnumerator& A);
WeightEnumerator enumerator_from_json(const Json& j);

Json bound_to_json(const BoundResult& b);
Json bound_table_to_json(const BoundTable& table);

/// Column names for the meta fields of a curve.
std::vector<std::string> meta_columns(const std::string& curve, int r);
void write_curve_csv(std::ostream& out, const std::string& curve, int q, int r,
                     const std::vector<asym::CurvePoint>& points);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace nrt::io
