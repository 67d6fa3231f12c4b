#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/code.hpp"
#include "cyclo/distance.hpp"
#include "cyclo/field.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/record.hpp"

namespace cyclo {

/// Ascending coordinate list over the prime field, e.g. "[1,0,1]" for 1 + u^2.
std::string format_element(const FieldCtx& field, Fe a);
/// Accepts a coordinate list, or a bare integer for prime-field elements. Throws ParseError.
Fe parse_element(const FieldCtx& field, std::string_view text);

/// Ascending coefficient list: integers over a prime field, coordinate lists
/// over an extension. Q_6 over F_5 is "[1,4,1]".
std::string format_poly(const Poly& f);
Poly parse_poly(const FieldCtx& field, std::string_view text);

std::string profile_json(const ArithmeticProfile& profile);
/// {field, n, coefficients, profile} for Q_n over `field`.
std::string cyclotomic_json(std::uint64_t n, const FieldCtx& field);

/// {field, n, generator, k, label}.
std::string code_json(const CyclicCode& c);
/// Inverse of code_json; k, when present, must match. Throws ParseError.
CyclicCode parse_code(std::string_view text);

std::string distance_json(const DistanceReport& report);
std::string weights_json(std::span<const std::uint64_t> weights);
std::string zeros_json(const ZeroSet& zeros);

/// Header plus one line per record, columns
/// theorem_id,q,n,n1,n2,claimed_n,claimed_k,claimed_d,measured_n,measured_k,measured_d,status,elapsed_s.
std::string records_csv(std::span<const VerificationRecord> records);
std::string record_json(const VerificationRecord& record);
std::string records_json(std::span<const VerificationRecord> records);
std::vector<VerificationRecord> parse_records_json(std::string_view text);

enum class ReportFormat { Csv, Json };

std::string_view to_string(ReportFormat format);
ReportFormat parse_report_format(std::string_view text);

std::string render_report(std::span<const VerificationRecord> records, ReportFormat format);
/// Writes the rendered report to `path`. Throws IoError.
void emit_report(std::span<const VerificationRecord> records, ReportFormat format, const std::string& path);

}  // namespace cyclo
