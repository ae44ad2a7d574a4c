#pragma once

// CSV and JSON renderings of tables and reports. Arbitrary-precision values
// are written as decimal strings in JSON so that no consumer silently rounds
// them; CSV cells are plain decimal.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kmoments/bigint.hpp"
#include "kmoments/codes.hpp"
#include "kmoments/gf2r.hpp"
#include "kmoments/kloosterman.hpp"

namespace kmoments::io {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv, pretty };

/// "json", "csv" or "pretty"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Field header shared by every JSON document: r, modulus_hex, modulus, b_hex.
nlohmann::ordered_json field_json(const Field& f);

/// Columns a,K; one row per nonzero a, ascending.
std::string kloosterman_csv(const KloostermanTable& table);
nlohmann::ordered_json kloosterman_json(const Field& f, const KloostermanTable& table);

/// Columns j,count.
std::string distribution_csv(const WeightDistribution& dist);
nlohmann::ordered_json distribution_json(const Field& f, const WeightDistribution& dist);

nlohmann::ordered_json dual_report_json(const DualStructureReport& report);

struct MomentRow {
  unsigned r = 0;
  Polynomial modulus = 0;
  Code code = Code::c1;
  unsigned h = 0;
  BigInt mk_recursive;
  std::optional<BigInt> mk_bruteforce;

  std::optional<bool> match() const {
    if (!mk_bruteforce) return std::nullopt;
    return *mk_bruteforce == mk_recursive;
  }
};

/// Columns r,modulus_hex,code,h,mk_recursive,mk_bruteforce,match.
std::string moment_rows_csv(std::span<const MomentRow> rows);
nlohmann::ordered_json moment_row_json(const MomentRow& row);

}  // namespace kmoments::io
