#include "nrt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nrt::io {

ArrayTable read_array(std::istream& in) {
  std::string line;
  std::optional<SpaceParams> params;
  ArrayTable table;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<long> values;
    long v;
    while (ls >> v) values.push_back(v);
    if (!ls.eof()) throw FormatError("line " + std::to_string(lineno) + ": not an integer list");
    if (!params) {
      if (values.size() != 3) throw FormatError("line " + std::to_string(lineno) + ": expected \"q r n\"");
      SpaceParams p{static_cast<int>(values[0]), static_cast<int>(values[1]), static_cast<int>(values[2])};
      try {
        p.validate();
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
      params = p;
      table.params = p;
      continue;
    }
    if (values.size() != static_cast<std::size_t>(params->length()))
      throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(params->length()) +
                        " symbols");
    std::vector<int> symbols;
    for (long x : values) {
      if (x < 0 || x >= params->q) throw FormatError("line " + std::to_string(lineno) + ": symbol out of range");
      symbols.push_back(static_cast<int>(x));
    }
    table.add(OrderedVector(*params, symbols));
  }
  if (!params) throw FormatError("missing header line");
  return table;
}

ArrayTable read_array_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_array(in);
}

void write_array(std::ostream& out, const ArrayTable& table) {
  out << table.params.q << ' ' << table.params.r << ' ' << table.params.n << '\n';
  for (const auto& row : table.rows) {
    bool first = true;
    for (int s : row.symbols()) {
      if (!first) out << ' ';
      out << s;
      first = false;
    }
    out << '\n';
  }
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_rational(const Rational& x) { return x.get_str(); }

Json params_json(const SpaceParams& params) { return {{"q", params.q}, {"r", params.r}, {"n", params.n}}; }

SpaceParams params_from_json(const Json& j) {
  SpaceParams p{j.at("q").get<int>(), j.at("r").get<int>(), j.at("n").get<int>()};
  p.validate();
  return p;
}

Json certificate_to_json(const DualCertificate& cert) {
  Json F = Json::object();
  for (const auto& [e, c] : cert.F) F[e.key()] = format_rational(c);
  return {{"q", cert.params.q}, {"r", cert.params.r}, {"n", cert.params.n},
          {"d", cert.d},        {"F0", format_rational(cert.F0)}, {"F", F}};
}

DualCertificate certificate_from_json(const Json& j) {
  try {
    DualCertificate cert;
    cert.params = params_from_json(j);
    cert.d = j.at("d").get<int>();
    cert.F0 = parse_rational(j.at("F0").get<std::string>());
    for (const auto& [key, value] : j.at("F").items()) {
      const Shape e = Shape::parse_key(key);
      if (!e.valid_for(cert.params) || e.is_zero()) throw FormatError("bad shape key " + key);
      const Rational c = parse_rational(value.get<std::string>());
      if (c != 0) cert.F[e] = c;
    }
    return cert;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("certificate: ") + e.what());
  }
}

Json enumerator_to_json(const WeightEnumerator& A) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : A.coeffs) coeffs[e.key()] = format_rational(c);
  return {{"params", params_json(A.params)}, {"reading", to_string(A.reading)}, {"coeffs", coeffs}};
}

WeightEnumerator enumerator_from_json(const Json& j) {
  try {
    WeightEnumerator A;
    A.params = params_from_json(j.at("params"));
    A.reading = parse_reading(j.at("reading").get<std::string>());
    for (const auto& [key, value] : j.at("coeffs").items()) {
      const Shape e = Shape::parse_key(key);
      if (!e.valid_for(A.params)) throw FormatError("bad shape key " + key);
      const Rational c = parse_rational(value.get<std::string>());
      if (c != 0) A.coeffs[e] = c;
    }
    return A;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("enumerator: ") + e.what());
  }
}

Json bound_to_json(const BoundResult& b) {
  Json j = {{"name", b.name}, {"side", to_string(b.side)}, {"applicable", b.applicable}};
  if (b.applicable && b.exact) j["value"] = format_rational(*b.exact);
  else if (b.applicable && b.approx) {
    j["value"] = *b.approx;
    j["tolerance"] = b.tolerance;
  } else j["value"] = nullptr;
  if (auto f = b.floor_value()) j["floor"] = f->fits_slong_p() ? Json(f->get_si()) : Json(f->get_str());
  else j["floor"] = nullptr;
  Json w = Json::object();
  for (const auto& [k, v] : b.witness) w[k] = v;
  j["witness"] = w;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

Json bound_table_to_json(const BoundTable& table) {
  Json bounds = Json::array();
  for (const auto& b : table.bounds) bounds.push_back(bound_to_json(b));
  auto name_of = [&](const std::optional<std::size_t>& i) -> Json {
    return i ? Json(table.bounds[*i].name) : Json(nullptr);
  };
  return {{"params", params_json(table.params)},
          {"d", table.d},
          {"bounds", bounds},
          {"best", {{"upper-on-code-size", name_of(table.best_upper)},
                    {"lower-on-code-size", name_of(table.best_lower)},
                    {"lower-on-ooa-size", name_of(table.best_lower_ooa)}}}};
}

std::vector<std::string> meta_columns(const std::string& curve, int r) {
  if (curve == "lp") {
    std::vector<std::string> cols{"tau"};
    for (int i = 1; i <= r; ++i) cols.push_back("tau" + std::to_string(i));
    return cols;
  }
  if (curve == "lp2") return {"tau1", "tau2"};
  if (curve == "psi" || curve == "psirao") return {"alpha"};
  return {};
}

void write_curve_csv(std::ostream& out, const std::string& curve, int q, int r,
                     const std::vector<asym::CurvePoint>& points) {
  const auto cols = meta_columns(curve, r);
  out << "delta,rate,curve,q,r";
  for (const auto& c : cols) out << ',' << c;
  out << '\n';
  for (const auto& p : points) {
    out << format_double(p.delta) << ',' << format_double(p.rate) << ',' << curve << ',' << q << ',' << r;
    for (std::size_t i = 0; i < cols.size(); ++i) out << ',' << (i < p.meta.size() ? format_double(p.meta[i]) : "");
    out << '\n';
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

} // namespace nrt::io
