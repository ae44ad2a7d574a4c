#include "kmoments/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace kmoments::io {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "pretty") return Format::pretty;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, csv, pretty)");
}

ordered_json field_json(const Field& f) {
  ordered_json j;
  j["r"] = f.degree();
  j["modulus_hex"] = to_hex(f.modulus());
  j["modulus"] = polynomial_to_string(f.modulus());
  j["b_hex"] = to_hex(f.b());
  return j;
}

std::string kloosterman_csv(const KloostermanTable& table) {
  std::ostringstream os;
  os << "a,K\n";
  const auto& raw = table.raw();
  for (std::size_t a = 1; a < raw.size(); ++a) os << a << ',' << raw[a] << '\n';
  return os.str();
}

ordered_json kloosterman_json(const Field& f, const KloostermanTable& table) {
  ordered_json j;
  j["field"] = field_json(f);
  ordered_json rows = ordered_json::array();
  const auto& raw = table.raw();
  for (std::size_t a = 1; a < raw.size(); ++a) rows.push_back({{"a", a}, {"K", raw[a]}});
  j["values"] = std::move(rows);
  return j;
}

std::string distribution_csv(const WeightDistribution& dist) {
  std::ostringstream os;
  os << "j,count\n";
  for (std::size_t j = 0; j < dist.counts.size(); ++j) os << j << ',' << dist.counts[j] << '\n';
  return os.str();
}

ordered_json distribution_json(const Field& f, const WeightDistribution& dist) {
  ordered_json j;
  j["field"] = field_json(f);
  j["code"] = code_number(dist.code);
  j["length"] = dist.length;
  j["j_max"] = dist.j_max();
  j["full"] = dist.is_full();
  ordered_json counts = ordered_json::array();
  for (const auto& c : dist.counts) counts.push_back(c.str());
  j["counts"] = std::move(counts);
  return j;
}

ordered_json dual_report_json(const DualStructureReport& rep) {
  ordered_json j;
  j["code"] = code_number(rep.code);
  j["r"] = rep.degree;
  j["length"] = rep.length;
  j["code_dimension"] = rep.code_dimension;
  j["dual_size"] = rep.dual_size;
  j["kernel_size"] = rep.kernel_size;
  j["orthogonal"] = rep.orthogonal;
  j["injective"] = rep.injective;
  j["injectivity_expected"] = rep.injectivity_expected;
  j["kernel_as_expected"] = rep.kernel_as_expected;
  j["cardinality_ok"] = rep.cardinality_ok;
  j["pass"] = rep.passed();
  return j;
}

std::string moment_rows_csv(std::span<const MomentRow> rows) {
  std::ostringstream os;
  os << "r,modulus_hex,code,h,mk_recursive,mk_bruteforce,match\n";
  for (const auto& row : rows) {
    os << row.r << ',' << to_hex(row.modulus) << ',' << code_number(row.code) << ',' << row.h << ','
       << row.mk_recursive << ',';
    if (row.mk_bruteforce) os << *row.mk_bruteforce;
    os << ',';
    if (auto m = row.match()) os << (*m ? "true" : "false");
    os << '\n';
  }
  return os.str();
}

ordered_json moment_row_json(const MomentRow& row) {
  ordered_json j;
  j["r"] = row.r;
  j["modulus_hex"] = to_hex(row.modulus);
  j["code"] = code_number(row.code);
  j["h"] = row.h;
  j["mk_recursive"] = row.mk_recursive.str();
  j["mk_bruteforce"] = row.mk_bruteforce ? ordered_json(row.mk_bruteforce->str()) : ordered_json(nullptr);
  const auto m = row.match();
  j["match"] = m ? ordered_json(*m) : ordered_json(nullptr);
  return j;
}

}  // namespace kmoments::io
