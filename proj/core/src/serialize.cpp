#include "cyclo/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

Json element_value(const FieldCtx& field, Fe a) {
  if (field.degree() == 1) return a.v;
  return field.coords(a);
}

Json element_coords(const FieldCtx& field, Fe a) { return field.coords(a); }

Fe element_from(const FieldCtx& field, const Json& j) {
  if (j.is_number_integer()) {
    if (field.degree() != 1) fail(ErrorKind::ParseError, "extension elements need a coordinate list");
    return field.from_int(j.get<std::int64_t>());
  }
  if (!j.is_array()) fail(ErrorKind::ParseError, "field element must be an integer or a coordinate list");
  std::vector<std::uint32_t> coords;
  for (const Json& c : j) {
    if (!c.is_number_unsigned()) fail(ErrorKind::ParseError, "coordinates must be non-negative integers");
    coords.push_back(c.get<std::uint32_t>());
  }
  return field.from_coords(coords);
}

Json poly_value(const Poly& f) {
  Json out = Json::array();
  for (Fe c : f.coeffs()) out.push_back(element_value(f.field(), c));
  return out;
}

Poly poly_from(const FieldCtx& field, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "polynomial must be a coefficient list");
  std::vector<Fe> coeffs;
  for (const Json& c : j) coeffs.push_back(element_from(field, c));
  return Poly(field, std::move(coeffs));
}

Json optional_value(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::uint64_t> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number_unsigned()) {
    fail(ErrorKind::ParseError, std::string("'") + key + "' must be a non-negative integer or null");
  }
  return j.at(key).get<std::uint64_t>();
}

Json params_value(const CodeParams& p) {
  return Json{{"n", optional_value(p.n)}, {"k", optional_value(p.k)}, {"d", optional_value(p.d)}};
}

CodeParams params_from(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "parameter triple must be an object");
  return {optional_from(j, "n"), optional_from(j, "k"), optional_from(j, "d")};
}

Json record_value(const VerificationRecord& r) {
  return Json{{"theorem_id", to_string(r.theorem)},
              {"q", r.q},
              {"n", optional_value(r.n)},
              {"n1", optional_value(r.n1)},
              {"n2", optional_value(r.n2)},
              {"claimed", params_value(r.claimed)},
              {"measured", params_value(r.measured)},
              {"status", to_string(r.status)},
              {"elapsed_s", r.elapsed_s},
              {"note", r.note}};
}

VerificationRecord record_from(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "record must be an object");
  try {
    VerificationRecord r;
    r.theorem = parse_theorem(j.at("theorem_id").get<std::string>());
    r.q = j.at("q").get<std::uint64_t>();
    r.n = optional_from(j, "n");
    r.n1 = optional_from(j, "n1");
    r.n2 = optional_from(j, "n2");
    r.claimed = params_from(j.at("claimed"));
    r.measured = params_from(j.at("measured"));
    r.status = parse_status(j.at("status").get<std::string>());
    r.elapsed_s = j.at("elapsed_s").get<double>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad record: ") + e.what());
  }
}

std::string csv_cell(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::string format_element(const FieldCtx& field, Fe a) { return element_coords(field, a).dump(); }

Fe parse_element(const FieldCtx& field, std::string_view text) { return element_from(field, parse_json(text)); }

std::string format_poly(const Poly& f) { return poly_value(f).dump(); }

Poly parse_poly(const FieldCtx& field, std::string_view text) { return poly_from(field, parse_json(text)); }

std::string profile_json(const ArithmeticProfile& profile) {
  Json factors = Json::array();
  for (const auto& [p, e] : profile.factorization) factors.push_back(Json::array({p, e}));
  Json out{{"n", profile.n},
           {"phi", profile.phi},
           {"omega", profile.omega},
           {"lpf", profile.n > 1 ? Json(profile.lpf()) : Json(nullptr)},
           {"divisors", profile.divisors},
           {"factorization", factors}};
  return out.dump();
}

std::string cyclotomic_json(std::uint64_t n, const FieldCtx& field) {
  Json out{{"field", field.literal()},
           {"n", n},
           {"coefficients", poly_value(cyclotomic_poly(n, field))},
           {"profile", Json::parse(profile_json(profile(n)))}};
  return out.dump();
}

std::string code_json(const CyclicCode& c) {
  Json out{{"field", c.field().literal()},
           {"n", c.length()},
           {"generator", poly_value(c.generator())},
           {"k", c.dimension()},
           {"label", c.label()}};
  return out.dump();
}

CyclicCode parse_code(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) fail(ErrorKind::ParseError, "code descriptor must be an object");
  try {
    const FieldCtx field = parse_field(j.at("field").get<std::string>());
    const auto n = j.at("n").get<std::size_t>();
    const std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
    CyclicCode c = from_generator(poly_from(field, j.at("generator")), n, label);
    if (j.contains("k") && j.at("k").get<std::size_t>() != c.dimension()) {
      fail(ErrorKind::ParseError, "descriptor k = " + std::to_string(j.at("k").get<std::size_t>()) +
                                      " but generator gives " + std::to_string(c.dimension()));
    }
    return c;
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad code descriptor: ") + e.what());
  }
}

std::string distance_json(const DistanceReport& report) {
  Json out{{"d", report.d},
           {"codewords_enumerated", report.codewords_enumerated},
           {"method", report.method},
           {"elapsed_s", report.elapsed_s}};
  return out.dump();
}

std::string weights_json(std::span<const std::uint64_t> weights) {
  return Json(std::vector<std::uint64_t>(weights.begin(), weights.end())).dump();
}

std::string zeros_json(const ZeroSet& zeros) {
  Json out{{"defining_set", zeros.defining_set}, {"nonzeros", zeros.nonzeros}};
  return out.dump();
}

std::string records_csv(std::span<const VerificationRecord> records) {
  std::string out =
      "theorem_id,q,n,n1,n2,claimed_n,claimed_k,claimed_d,measured_n,measured_k,measured_d,status,elapsed_s\n";
  for (const VerificationRecord& r : records) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.6f", r.elapsed_s);
    out += std::string(to_string(r.theorem)) + ',' + std::to_string(r.q) + ',' + csv_cell(r.n) + ',' +
           csv_cell(r.n1) + ',' + csv_cell(r.n2) + ',' + csv_cell(r.claimed.n) + ',' + csv_cell(r.claimed.k) +
           ',' + csv_cell(r.claimed.d) + ',' + csv_cell(r.measured.n) + ',' + csv_cell(r.measured.k) + ',' +
           csv_cell(r.measured.d) + ',' + std::string(to_string(r.status)) + ',' + elapsed + '\n';
  }
  return out;
}

std::string record_json(const VerificationRecord& record) { return record_value(record).dump(2) + "\n"; }

std::string records_json(std::span<const VerificationRecord> records) {
  Json out = Json::array();
  for (const VerificationRecord& r : records) out.push_back(record_value(r));
  return out.dump(2) + "\n";
}

std::vector<VerificationRecord> parse_records_json(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_array()) fail(ErrorKind::ParseError, "report must be a JSON array of records");
  std::vector<VerificationRecord> out;
  for (const Json& r : j) out.push_back(record_from(r));
  return out;
}

std::string_view to_string(ReportFormat format) { return format == ReportFormat::Csv ? "csv" : "json"; }

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  fail(ErrorKind::ParseError, "unknown report format '" + std::string(text) + "' (expected csv or json)");
}

std::string render_report(std::span<const VerificationRecord> records, ReportFormat format) {
  return format == ReportFormat::Csv ? records_csv(records) : records_json(records);
}

void emit_report(std::span<const VerificationRecord> records, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << render_report(records, format);
  out.flush();
  if (!out) fail(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace cyclo
