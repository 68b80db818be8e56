#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/char_table.hpp"
#include "grouplab/cyclotomic.hpp"
#include "grouplab/theory.hpp"

namespace grouplab {

/// Library version string.
const char* version();

/// {"conductor": m, "coeffs": ["num/den", ...]}
std::string cyclotomic_json(const Cyclotomic& c);
/// Inverse of cyclotomic_json; InputError on malformed input.
Cyclotomic parse_cyclotomic_json(std::string_view text);

/// Classes (rep, size, element order, centralizer order), degrees and rows.
std::string table_json(const CharacterTable& t, bool pretty = false);
/// Plain-text rendering for terminals.
std::string table_text(const CharacterTable& t);

std::string record_json(const VerificationRecord& record, bool pretty = false);

struct ReportMeta {
  std::string suite = "all";
  std::size_t order_cap = 0;
  std::size_t normal_subgroup_cap = 0;
  std::size_t basics_max_order = 0;
  std::size_t product_max_order = 0;
};

/// Records sorted by group name; violations is the total count.
std::string write_report(std::vector<VerificationRecord> records, const ReportMeta& meta);
std::string write_report(std::vector<VerificationRecord> records);

/// Writes text to path; InputError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace grouplab
