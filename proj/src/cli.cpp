#include "kmoments/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "kmoments/kloosterman.hpp"
#include "kmoments/moments.hpp"

namespace kmoments::cli {

using nlohmann::ordered_json;

namespace {

unsigned parse_unsigned(std::string_view text, const char* what) {
  if (text.empty() || text.size() > 9 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  return static_cast<unsigned>(std::stoul(std::string(text)));
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + config.out_path + "'");
  file << text;
}

std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string code_label(Code c) { return "C" + std::to_string(code_number(c)); }

// --- verify --------------------------------------------------------------

enum class Status { pass, fail, skipped };

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

struct CheckRecord {
  unsigned r = 0;
  Polynomial modulus = 0;
  std::optional<Code> code;
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

class Verifier {
 public:
  explicit Verifier(const RunConfig& config) : config_(config) {}

  void run_degree(const Field& f) {
    field_ = &f;
    table_ = kloosterman_table(f);
    check_field();
    check_kloosterman();
    for (Code c : config_.codes) check_code(c);
  }

  const std::vector<CheckRecord>& records() const { return records_; }

 private:
  void add(std::optional<Code> code, std::string name, Status status, std::string detail = {}) {
    records_.push_back({field_->degree(), field_->modulus(), code, std::move(name), status, std::move(detail)});
  }
  void add_bool(std::optional<Code> code, std::string name, bool ok, std::string detail = {}) {
    add(code, std::move(name), ok ? Status::pass : Status::fail, std::move(detail));
  }

  void check_field() {
    const Field& f = *field_;
    std::vector<Element> trace_zero;
    int char_sum = 0;
    for (Element x = 0; x < f.size(); ++x) {
      if (f.trace(x) == 0) trace_zero.push_back(x);
      char_sum += f.lambda(x);
    }
    add_bool({}, "field.theta_is_trace_zero", f.theta() == trace_zero && f.theta().size() == f.size() / 2,
             "|theta| = " + std::to_string(f.theta().size()));
    add_bool({}, "field.character_orthogonality", char_sum == 0);
    add_bool({}, "field.b_has_trace_one", f.trace(f.b()) == 1, "b = " + to_hex(f.b()));
  }

  void check_kloosterman() {
    const Field& f = *field_;
    const double weil = 2.0 * std::sqrt(static_cast<double>(f.size()));
    bool congruent = true, bounded = true, frobenius = true;
    for (Element a = 1; a < f.size(); ++a) {
      const int k = table_.at(a);
      if (f.degree() >= 2 && ((k % 4) + 4) % 4 != 3) congruent = false;
      if (static_cast<double>(k) * k > weil * weil + 1e-9) bounded = false;
      if (table_.at(f.square(a)) != k) frobenius = false;
    }
    if (f.degree() >= 2)
      add_bool({}, "kloosterman.congruent_minus_one_mod_4", congruent);
    else
      add({}, "kloosterman.congruent_minus_one_mod_4", Status::skipped, "needs q divisible by 4");
    add_bool({}, "kloosterman.weil_bound", bounded);
    add_bool({}, "kloosterman.frobenius_invariance", frobenius);

    const auto mk = moments_bruteforce(table_, 1);
    add_bool({}, "kloosterman.low_moments", mk[0] == f.size() - 1 && mk[1] == 1,
             "MK^0 = " + mk[0].str() + ", MK^1 = " + mk[1].str());

    bool ok_a = true;
    for (Element a = 1; a < f.size(); ++a)
      if (expsum_theta_side(f, a) != table_.at(a) - 1) ok_a = false;
    add_bool({}, "kloosterman.expsum_theta_side", ok_a, "sum over x != 0,1 of lambda(a/(x^2+x)) = K(a) - 1");

    std::vector<Element> bs;
    if (f.degree() <= kMaxAllBDegree) {
      for (Element b = 0; b < f.size(); ++b)
        if (f.trace(b) == 1) bs.push_back(b);
    } else {
      bs.push_back(f.b());
    }
    bool ok_b = true;
    for (Element b : bs)
      for (Element a = 1; a < f.size(); ++a)
        if (expsum_coset_side(f, a, b) != -table_.at(a) - 1) ok_b = false;
    add_bool({}, "kloosterman.expsum_coset_side", ok_b,
             std::to_string(bs.size()) + " trace-one b; sum of lambda(a/(x^2+x+b)) = -K(a) - 1");
  }

  void check_code(Code c) {
    const Field& f = *field_;
    if (!code_defined(f, c)) {
      add(c, "codes.defined", Status::skipped, code_label(c) + " needs q >= 4");
      return;
    }
    const auto v = build_vector(f, c);
    const std::size_t n = v.size();

    bool mult_ok = true;
    for (Element beta = 0; beta < f.size(); ++beta) {
      const auto count = std::count(v.begin(), v.end(), beta);
      if (count != multiplicity(f, c, beta)) mult_ok = false;
    }
    add_bool(c, "codes.multiplicity", mult_ok);

    // Dual codeword weights against the closed form in K(a).
    bool closed_ok = true, halving_ok = true;
    std::vector<int> weights;
    weights.reserve(f.size() - 1);
    const Code full_code = is_doubled(c) ? c : (uses_theta(c) ? Code::c1 : Code::c3);
    for (Element a = 1; a < f.size(); ++a) {
      const auto w = dual_codeword(f, c, a).weight();
      weights.push_back(static_cast<int>(w));
      if (w != dual_weight_from_kloosterman(f, c, table_.at(a))) closed_ok = false;
      if (!is_doubled(c) && 2 * w != dual_codeword(f, full_code, a).weight()) halving_ok = false;
    }
    add_bool(c, "codes.dual_weight_closed_form", closed_ok);
    if (!is_doubled(c)) add_bool(c, "codes.dual_weight_halving", halving_ok, "w = w(" + code_label(full_code) + ")/2");

    const auto report = verify_dual_structure(f, c);
    std::string dual_detail = "kernel size " + std::to_string(report.kernel_size) + ", dim C = " +
                              std::to_string(report.code_dimension) + ", |dual| = " + std::to_string(report.dual_size);
    if (!report.injectivity_expected) dual_detail += "; kernel GF(2) is expected at q = 4";
    add_bool(c, "codes.dual_structure", report.passed(), dual_detail);

    // Weight distributions.
    const bool full_possible = f.degree() <= kMaxFullDegree;
    std::optional<WeightDistribution> full;
    if (full_possible) full = weight_distribution(f, c);

    if (n <= f.degree() + kExhaustiveBudget && full) {
      const auto brute = weight_distribution_exhaustive(f, c);
      add_bool(c, "codes.distribution_vs_enumeration", brute.counts == full->counts);
    } else {
      add(c, "codes.distribution_vs_enumeration", Status::skipped, "beyond the enumeration budget");
    }

    const std::size_t prefix_len = std::min<std::size_t>(n, config_.h_max);
    const auto prefix = weight_distribution(f, c, prefix_len);
    if (full) {
      add_bool(c, "codes.prefix_consistency",
               std::equal(prefix.counts.begin(), prefix.counts.end(), full->counts.begin()));
      if (is_doubled(c)) add_bool(c, "codes.palindrome", full->is_palindromic());
      const BigInt expected = pow2(static_cast<unsigned>(n)) / report.dual_size;
      add_bool(c, "codes.cardinality", full->total() == expected,
               "sum of C_j = " + full->total().str() + ", expected " + expected.str());
    } else {
      add(c, "codes.prefix_consistency", Status::skipped, "full distribution limited to r <= 8");
    }

    // Identity and recursion.
    if (uses_theta(c) && f.degree() < 3) {
      add(c, "moments.pless_identity", Status::skipped, "dual map not injective for r < 3");
      add(c, "moments.recursion", Status::skipped, "recursion stated for r >= 3");
      return;
    }
    bool pless_ok = true;
    std::string pless_detail;
    for (unsigned h = 0; h <= config_.h_max; ++h) {
      const auto chk = pless_check(f, c, h, weights, prefix);
      if (!chk.equal) {
        pless_ok = false;
        if (pless_detail.empty()) pless_detail = "first failure at h = " + std::to_string(h);
      }
    }
    add_bool(c, "moments.pless_identity", pless_ok, pless_detail);

    const auto seq = moment_sequence(f, c, config_.h_max);
    const auto brute = moments_bruteforce(table_, config_.h_max);
    std::string rec_detail = "h = 0.." + std::to_string(config_.h_max);
    bool rec_ok = true;
    for (unsigned h = 0; h <= config_.h_max; ++h) {
      if (seq.mk[h] != brute[h]) {
        if (rec_ok) rec_detail = "first mismatch at h = " + std::to_string(h);
        rec_ok = false;
      }
    }
    add_bool(c, "moments.recursion", rec_ok, rec_detail);
  }

  const RunConfig& config_;
  const Field* field_ = nullptr;
  KloostermanTable table_;
  std::vector<CheckRecord> records_;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void require_dp_range(const RunConfig& config) {
  if (config.r_max > kMaxDpDegree)
    throw UsageError("weight-distribution commands are limited to r <= " + std::to_string(kMaxDpDegree));
}

}  // namespace

// --- configuration ---------------------------------------------------------

std::pair<unsigned, unsigned> parse_r_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const unsigned r = parse_unsigned(text, "r");
    return {r, r};
  }
  const unsigned lo = parse_unsigned(text.substr(0, dots), "r range");
  const unsigned hi = parse_unsigned(text.substr(dots + 2), "r range");
  if (lo > hi) throw UsageError("empty r range '" + std::string(text) + "'");
  return {lo, hi};
}

std::vector<Code> parse_codes(std::string_view text) {
  std::set<int> picked;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const unsigned i = parse_unsigned(item, "code");
    if (i < 1 || i > 4) throw UsageError("code index must be 1..4, got " + std::string(item));
    picked.insert(static_cast<int>(i));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::vector<Code> out;
  for (int i : picked) out.push_back(code_from_int(i));
  return out;
}

void RunConfig::validate() const {
  if (r_min < 1 || r_max > kMaxDegree || r_min > r_max)
    throw UsageError("r must lie in 1..16");
  if (h_max > kMaxHmax) throw UsageError("hmax must be at most 32");
  if (codes.empty()) throw UsageError("no code selected");
  if ((modulus || b) && r_min != r_max) throw UsageError("--modulus and --b need a single r");
  if (modulus || b) make_field(*this, r_min);
}

Field make_field(const RunConfig& config, unsigned r) {
  try {
    Field f = Field::build(r, config.modulus);
    return config.b ? f.with_b(*config.b) : f;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// --- commands -------------------------------------------------------------

int cmd_kloosterman(const RunConfig& config, std::ostream& out, std::ostream&) {
  std::ostringstream os;
  ordered_json runs = ordered_json::array();
  for (unsigned r = config.r_min; r <= config.r_max; ++r) {
    const Field f = make_field(config, r);
    const auto table = kloosterman_table(f);
    switch (config.format) {
      case io::Format::json: runs.push_back(io::kloosterman_json(f, table)); break;
      case io::Format::csv:
        if (config.r_min != config.r_max) os << "# r=" << r << '\n';
        os << io::kloosterman_csv(table);
        break;
      case io::Format::pretty:
        os << "GF(2^" << r << ") modulus " << polynomial_to_string(f.modulus()) << " (" << to_hex(f.modulus())
           << ")\n";
        for (Element a = 1; a < f.size(); ++a) os << "  K(" << a << ") = " << table.at(a) << '\n';
        break;
    }
  }
  if (config.format == io::Format::json) {
    ordered_json doc;
    doc["schema"] = io::kSchemaVersion;
    doc["command"] = "kloosterman";
    doc["tables"] = std::move(runs);
    os << render_json(doc);
  }
  emit(config, os.str(), out);
  return kOk;
}

int cmd_moments(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_dp_range(config);
  std::vector<io::MomentRow> rows;
  for (unsigned r = config.r_min; r <= config.r_max; ++r) {
    const Field f = make_field(config, r);
    const auto brute = moments_bruteforce(kloosterman_table(f), config.h_max);
    for (Code c : config.codes) {
      if (uses_theta(c) && r < 3) {
        err << "note: skipping " << code_label(c) << " at r = " << r << " (recursion needs r >= 3)\n";
        continue;
      }
      const auto seq = moment_sequence(f, c, config.h_max);
      for (unsigned h = 0; h <= config.h_max; ++h)
        rows.push_back({r, f.modulus(), c, h, seq.mk[h], brute[h]});
    }
  }
  if (rows.empty()) throw UsageError("no (r, code) pair admits the recursion");

  const bool all_match = std::all_of(rows.begin(), rows.end(), [](const auto& row) { return row.match() != false; });

  std::ostringstream os;
  switch (config.format) {
    case io::Format::csv: os << io::moment_rows_csv(rows); break;
    case io::Format::json: {
      ordered_json doc;
      doc["schema"] = io::kSchemaVersion;
      doc["command"] = "moments";
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) arr.push_back(io::moment_row_json(row));
      doc["rows"] = std::move(arr);
      doc["all_match"] = all_match;
      os << render_json(doc);
      break;
    }
    case io::Format::pretty: {
      os << std::left << std::setw(4) << "r" << std::setw(6) << "code" << std::setw(5) << "h" << std::right
         << std::setw(28) << "mk_recursive" << std::setw(28) << "mk_bruteforce" << "  match\n";
      for (const auto& row : rows) {
        const auto m = row.match();
        os << std::left << std::setw(4) << row.r << std::setw(6) << code_label(row.code) << std::setw(5) << row.h
           << std::right << std::setw(28) << row.mk_recursive.str() << std::setw(28)
           << (row.mk_bruteforce ? row.mk_bruteforce->str() : "-") << "  " << (m ? (*m ? "yes" : "NO") : "-")
           << '\n';
      }
      break;
    }
  }
  emit(config, os.str(), out);
  if (!all_match) err << "verification failure: recursion disagrees with direct summation\n";
  return all_match ? kOk : kMismatch;
}

int cmd_weights(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_dp_range(config);
  if (!config.j_max && config.r_max > kMaxFullDegree)
    throw UsageError("full weight distributions are limited to r <= " + std::to_string(kMaxFullDegree) +
                     "; pass --jmax to compute a prefix");

  struct Entry {
    Field field;
    WeightDistribution dist;
    std::optional<bool> palindrome;
    std::optional<bool> cardinality;
  };
  std::vector<Entry> entries;
  for (unsigned r = config.r_min; r <= config.r_max; ++r) {
    const Field f = make_field(config, r);
    for (Code c : config.codes) {
      if (!code_defined(f, c)) continue;
      const std::size_t n = code_length(f, c);
      const std::size_t j = config.j_max ? std::min(*config.j_max, n) : n;
      Entry e{f, weight_distribution(f, c, j), {}, {}};
      if (e.dist.is_full()) {
        if (is_doubled(c)) e.palindrome = e.dist.is_palindromic();
        const auto rep = verify_dual_structure(f, c);
        e.cardinality = e.dist.total() == pow2(static_cast<unsigned>(n)) / rep.dual_size;
      }
      entries.push_back(std::move(e));
    }
  }
  if (entries.empty()) throw UsageError("no selected code is defined for the selected r");

  std::ostringstream os;
  switch (config.format) {
    case io::Format::csv:
      os << "r,modulus_hex,code,j,count\n";
      for (const auto& e : entries)
        for (std::size_t j = 0; j < e.dist.counts.size(); ++j)
          os << e.field.degree() << ',' << to_hex(e.field.modulus()) << ',' << code_number(e.dist.code) << ',' << j
             << ',' << e.dist.counts[j] << '\n';
      break;
    case io::Format::json: {
      ordered_json doc;
      doc["schema"] = io::kSchemaVersion;
      doc["command"] = "weights";
      ordered_json arr = ordered_json::array();
      for (const auto& e : entries) {
        auto j = io::distribution_json(e.field, e.dist);
        j["palindrome"] = e.palindrome ? ordered_json(*e.palindrome) : ordered_json(nullptr);
        j["cardinality_ok"] = e.cardinality ? ordered_json(*e.cardinality) : ordered_json(nullptr);
        arr.push_back(std::move(j));
      }
      doc["distributions"] = std::move(arr);
      os << render_json(doc);
      break;
    }
    case io::Format::pretty:
      for (const auto& e : entries) {
        os << "r=" << e.field.degree() << " modulus=" << polynomial_to_string(e.field.modulus())
           << " code=" << code_label(e.dist.code) << " N=" << e.dist.length
           << (e.dist.is_full() ? "" : " prefix j<=" + std::to_string(e.dist.j_max())) << '\n';
        os << "  distribution: ";
        for (std::size_t j = 0; j < e.dist.counts.size(); ++j) os << (j ? "," : "") << e.dist.counts[j];
        os << '\n';
        if (e.palindrome) os << "  palindrome: " << (*e.palindrome ? "yes" : "no") << '\n';
        if (e.cardinality) os << "  cardinality 2^N/|dual|: " << (*e.cardinality ? "yes" : "no") << '\n';
      }
      break;
  }
  emit(config, os.str(), out);
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_dp_range(config);
  Verifier verifier(config);
  for (unsigned r = config.r_min; r <= config.r_max; ++r) {
    const Field f = make_field(config, r);
    verifier.run_degree(f);
  }
  const auto& records = verifier.records();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& rec : records) {
    if (rec.status == Status::pass) ++passed;
    if (rec.status == Status::fail) ++failed;
    if (rec.status == Status::skipped) ++skipped;
  }

  std::ostringstream os;
  switch (config.format) {
    case io::Format::json: {
      ordered_json doc;
      doc["schema"] = io::kSchemaVersion;
      doc["command"] = "verify";
      ordered_json arr = ordered_json::array();
      for (const auto& rec : records) {
        ordered_json j;
        j["r"] = rec.r;
        j["modulus_hex"] = to_hex(rec.modulus);
        j["code"] = rec.code ? ordered_json(code_number(*rec.code)) : ordered_json(nullptr);
        j["check"] = rec.name;
        j["status"] = status_name(rec.status);
        j["pass"] = rec.status == Status::skipped ? ordered_json(nullptr) : ordered_json(rec.status == Status::pass);
        j["detail"] = rec.detail;
        arr.push_back(std::move(j));
      }
      doc["checks"] = std::move(arr);
      doc["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"all_pass", failed == 0}};
      os << render_json(doc);
      break;
    }
    case io::Format::csv:
      os << "r,modulus_hex,code,check,status,detail\n";
      for (const auto& rec : records)
        os << rec.r << ',' << to_hex(rec.modulus) << ',' << (rec.code ? std::to_string(code_number(*rec.code)) : "")
           << ',' << rec.name << ',' << status_name(rec.status) << ',' << csv_escape(rec.detail) << '\n';
      break;
    case io::Format::pretty:
      for (const auto& rec : records) {
        os << "r=" << std::setw(2) << std::left << rec.r << ' ' << std::setw(3) << (rec.code ? code_label(*rec.code) : "-")
           << ' ' << std::setw(40) << rec.name << ' ';
        if (rec.detail.empty())
          os << status_name(rec.status);
        else
          os << std::setw(7) << status_name(rec.status) << ' ' << rec.detail;
        os << '\n';
      }
      os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
      break;
  }
  emit(config, os.str(), out);
  if (failed) err << "verification failure: " << failed << " check(s) failed\n";
  return failed ? kMismatch : kOk;
}

// --- entry point -----------------------------------------------------------

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kloosterman sums, binary codes C1..C4 and recursive power moments over GF(2^r)"};
  app.require_subcommand(1);

  struct RawFlags {
    std::string r = "3";
    std::string modulus;
    std::string b;
    unsigned h_max = 10;
    std::string codes = "1,2,3,4";
    std::optional<std::size_t> j_max;
    std::string format = "pretty";
    std::string out;
  };
  RawFlags raw;

  auto add_common = [&](CLI::App* sub, bool with_moment_flags) {
    sub->add_option("--r", raw.r, "extension degree r or inclusive range a..b")->required();
    sub->add_option("--modulus", raw.modulus, "modulus polynomial, hex (0x0b) or x^3+x+1");
    sub->add_option("--b", raw.b, "trace-one element b in hex");
    sub->add_option("--format", raw.format, "json, csv or pretty");
    sub->add_option("--out", raw.out, "write output to this file");
    if (with_moment_flags) {
      sub->add_option("--hmax", raw.h_max, "largest moment order h");
      sub->add_option("--code", raw.codes, "comma-separated code indices from 1..4");
      sub->add_option("--jmax", raw.j_max, "truncate weight distributions at weight jmax");
    }
  };
  auto* moments = app.add_subcommand("moments", "MK^h by the recursions, against direct summation");
  auto* verify = app.add_subcommand("verify", "run every identity check and report pass/fail");
  auto* weights = app.add_subcommand("weights", "weight distributions of the codes");
  auto* table = app.add_subcommand("kloosterman", "table of K(a) for every nonzero a");
  add_common(moments, true);
  add_common(verify, true);
  add_common(weights, true);
  add_common(table, false);

  std::vector<const char*> argv{"kmoments"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    RunConfig config;
    std::tie(config.r_min, config.r_max) = parse_r_range(raw.r);
    if (!raw.modulus.empty()) {
      try {
        config.modulus = parse_polynomial(raw.modulus);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--modulus: ") + e.what());
      }
    }
    if (!raw.b.empty()) {
      try {
        config.b = parse_hex(raw.b);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--b: ") + e.what());
      }
    }
    config.h_max = raw.h_max;
    config.codes = parse_codes(raw.codes);
    config.j_max = raw.j_max;
    try {
      config.format = io::parse_format(raw.format);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    config.out_path = raw.out;
    config.validate();

    if (moments->parsed()) return cmd_moments(config, out, err);
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (weights->parsed()) return cmd_weights(config, out, err);
    return cmd_kloosterman(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace kmoments::cli
