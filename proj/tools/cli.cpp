#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrcodes/counting.hpp"
#include "rrcodes/divisors.hpp"
#include "rrcodes/error.hpp"
#include "rrcodes/params.hpp"
#include "rrcodes/realize.hpp"

namespace rrcodes::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::string family;
  std::int64_t q = 0;
  int n = 0;
  int g = 0;
  int k = 0;
  int s = 0;
  std::optional<int> w;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool with_curve) {
  cmd->add_option("--family", f.family, "Code family: H, A, B or C")->required();
  cmd->add_option("--q", f.q, "Field size")->required();
  if (with_curve) {
    cmd->add_option("--n", f.n, "Number of rational places")->required();
    cmd->add_option("--g", f.g, "Genus")->required();
  }
  cmd->add_option("--k", f.k, "Scaling factor k")->required();
  cmd->add_option("--s", f.s, "Divisor degree s")->required();
  cmd->add_option("--w", f.w, "Multiplicity bound w (families B and C)");
}

FamilySpec to_spec(const FamilyFlags& f) {
  FamilySpec spec;
  try {
    spec.family = parse_family(f.family);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const bool weighted = spec.family == Family::B || spec.family == Family::C;
  if (weighted && !f.w) throw UsageError("--w is required for family " + f.family);
  if (!weighted && f.w) throw UsageError("--w cannot be used with family " + f.family);
  spec.curve = {f.q, f.n, f.g};
  spec.k = f.k;
  spec.s = f.s;
  spec.w = f.w;
  return spec;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-dimension subspace codes from Riemann-Roch spaces", "rrcodes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string output_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", output_path, "Write the report to a file instead of stdout");

  FamilyFlags params_flags;
  auto* params_cmd = app.add_subcommand("params", "Code parameters (JSON)");
  add_family_flags(params_cmd, params_flags, true);

  long long count_n = 0, count_s = 0, count_lo = 0, count_hi = 0;
  bool count_oracle = false;
  auto* count_cmd = app.add_subcommand("count", "Solutions of x_1+...+x_n = s with lo <= x_i <= hi");
  count_cmd->add_option("--n", count_n)->required();
  count_cmd->add_option("--s", count_s)->required();
  count_cmd->add_option("--lo", count_lo)->required();
  count_cmd->add_option("--hi", count_hi)->required();
  count_cmd->add_flag("--oracle", count_oracle, "Use the dynamic-programming counter");

  std::string preset;
  std::string t2_family;
  std::int64_t t2_q = 16;
  int t2_n = 0, t2_k = 0, t2_s = 0;
  std::optional<int> t2_w;
  auto* table_cmd = app.add_subcommand("table", "Rate tables");
  table_cmd->add_option("--preset", preset, "table3, or table2 for one genus-one entry")
      ->required()
      ->check(CLI::IsMember({"table2", "table3"}));
  table_cmd->add_option("--family", t2_family);
  table_cmd->add_option("--q", t2_q);
  table_cmd->add_option("--n", t2_n);
  table_cmd->add_option("--k", t2_k);
  table_cmd->add_option("--s", t2_s);
  table_cmd->add_option("--w", t2_w);

  FamilyFlags enum_flags;
  std::size_t enum_cap = kDefaultEnumerationCap;
  auto* enum_cmd = app.add_subcommand("enumerate", "Divisors of a family, one JSON array per line");
  add_family_flags(enum_cmd, enum_flags, true);
  enum_cmd->add_option("--cap", enum_cap, "Maximum number of divisors");

  FamilyFlags verify_flags;
  realize::VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Realize the code over P^1(F_q) and check its laws");
  add_family_flags(verify_cmd, verify_flags, false);
  verify_cmd->add_option("--cap", verify_opts.pair_cap, "All pairs up to this many codewords, sampling above");
  verify_cmd->add_option("--max-codewords", verify_opts.realize_cap, "Refuse families larger than this");
  verify_cmd->add_option("--seed", verify_opts.seed, "Seed for sampled pairs");
  verify_cmd->add_option("--threads", verify_opts.threads, "Worker threads (0: automatic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream report;
  int status = kExitOk;
  try {
    if (params_cmd->parsed()) {
      const FamilySpec spec = to_spec(params_flags);
      report << dump(to_json(code_parameters(spec), spec));
    } else if (count_cmd->parsed()) {
      const BoundedEq eq{count_n, count_s, count_lo, count_hi};
      if (count_n < 1) throw UsageError("--n must be >= 1");
      if (count_lo > count_hi) throw UsageError("--lo must not exceed --hi");
      const BigCount value = count_oracle ? oracle_count(eq) : count_U_shifted(eq);
      if (format == "json") {
        nlohmann::json j;
        j["count"] = to_decimal(value);
        j["formula"] = std::string(to_string(count_oracle ? CountFormula::Oracle : CountFormula::UShifted));
        report << dump(j);
      } else {
        report << to_decimal(value) << "\n";
      }
    } else if (table_cmd->parsed()) {
      if (preset == "table3") {
        const auto rows = table3();
        if (format == "json") {
          nlohmann::json j = nlohmann::json::array();
          for (const auto& r : rows) {
            j.push_back({{"n", r.n}, {"s", r.s}, {"H", format_fixed(r.rate_H)}, {"A", format_fixed(r.rate_A)},
                         {"B", format_fixed(r.rate_B)}, {"C", format_fixed(r.rate_C)}});
          }
          report << dump(j);
        } else {
          report << rate_table_csv(rows);
        }
      } else {
        if (t2_family.empty() || t2_n < 1 || t2_k < 1 || t2_s < 1) {
          throw UsageError("table2 needs --family, --n, --k and --s");
        }
        const FamilySpec spec = to_spec({t2_family, t2_q, t2_n, 1, t2_k, t2_s, t2_w});
        const GenusOneEntry e = genus_one_entry(spec);
        if (format == "json") {
          nlohmann::json j;
          j["spec"] = to_json(spec);
          j["normalized_weight"] = e.normalized_weight;
          j["rate"] = e.rate;
          j["normalized_min_distance"] = e.normalized_min_distance;
          j["rate_denominator"] = e.rate_denominator;
          report << dump(j);
        } else {
          report << "family,n,s,k,w,normalized_weight,rate,normalized_min_distance,rate_denominator\n"
                 << to_string(spec.family) << ',' << spec.curve.n << ',' << spec.s << ',' << spec.k << ','
                 << (spec.w ? std::to_string(*spec.w) : "") << ',' << format_fixed(e.normalized_weight) << ','
                 << format_fixed(e.rate) << ',' << format_fixed(e.normalized_min_distance) << ','
                 << e.rate_denominator << "\n";
        }
      }
    } else if (enum_cmd->parsed()) {
      const FamilySpec spec = to_spec(enum_flags);
      DivisorStream stream(spec, enum_cap);
      while (auto d = stream.next()) report << to_json(*d).dump() << "\n";
    } else if (verify_cmd->parsed()) {
      FamilyFlags f = verify_flags;
      f.n = static_cast<int>(f.q + 1);
      f.g = 0;
      const FamilySpec spec = to_spec(f);
      const auto r = realize::verify(spec, verify_opts);
      report << dump(realize::to_json(r));
      status = r.passed() ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (output_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << output_path << "\n";
      return kExitUsage;
    }
    file << report.str();
  }
  return status;
}

}  // namespace rrcodes::cli
