#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "maskent/error.hpp"
#include "maskent/serialize.hpp"
#include "maskent/tightness.hpp"
#include "maskent/verify.hpp"

namespace maskent::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

FieldPtr resolve_field(const CliInvocation& inv) {
  if (inv.q) {
    const auto pm = resolve_prime_power(*inv.q);
    if (!pm) throw UsageError("unknown field size: " + std::to_string(*inv.q) + " is not a prime power");
    if ((inv.p && *inv.p != pm->first) || (inv.m && *inv.m != pm->second)) {
      throw UsageError("--q " + std::to_string(*inv.q) + " contradicts --p/--m");
    }
    return build_field(pm->first, pm->second);
  }
  if (!inv.p) throw UsageError("a field is required: pass --q, or --p with optional --m");
  return build_field(*inv.p, inv.m.value_or(1));
}

void emit(const CliInvocation& inv, const std::string& body, std::ostream& out) {
  if (inv.out) {
    std::ofstream file(*inv.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + inv.out->string());
    file << body;
    if (!file) throw UsageError("failed writing " + inv.out->string());
  } else {
    out << body;
  }
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

int verdict_exit(const std::vector<std::string>& violations) { return violations.empty() ? kVerified : kViolation; }

void require_json(const CliInvocation& inv) {
  if (inv.format != "json") throw UsageError("--format csv is only available for campaign and search");
}

int run_campaign_command(const CliInvocation& inv, CampaignMode mode, std::ostream& out, std::ostream& err) {
  const FieldPtr field = resolve_field(inv);
  CampaignConfig config;
  config.q = field->q();
  config.n = inv.n;
  config.mode = mode;
  config.samples = inv.samples;
  config.iters = inv.iters;
  config.restarts = inv.restarts;
  config.seed = inv.seed;
  config.workers = inv.workers;
  const CampaignResult result = run_campaign(config);
  err << "campaign " << to_string(mode) << " q=" << config.q << " n=" << config.n << ": " << result.instances.size()
      << " instances, " << result.violations.size() << " violations, " << result.wall_time.count() << " s\n";
  emit(inv, inv.format == "csv" ? campaign_to_csv(result) : dump(campaign_to_json(result)), out);
  return verdict_exit(result.violations);
}

}  // namespace

FunctionTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableError("cannot read table file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw TableError("malformed table JSON in " + path.string() + ": " + e.what());
  }
  return table_from_json(doc);
}

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  try {
    if (inv.format != "json" && inv.format != "csv") throw UsageError("--format must be json or csv");
    if (inv.n < 1) throw UsageError("--n must be >= 1");

    if (inv.subcommand == "field") {
      require_json(inv);
      emit(inv, dump(field_to_json(*resolve_field(inv))), out);
      return kVerified;
    }
    if (inv.subcommand == "verify") {
      require_json(inv);
      if (!inv.table) throw UsageError("verify needs --table");
      const InstanceVerdict verdict = verify_instance(load_table(*inv.table), inv.per_k);
      emit(inv, dump(verdict_to_json(verdict)), out);
      return verdict_exit(verdict.violations);
    }
    if (inv.subcommand == "tightness") {
      require_json(inv);
      const InstanceVerdict verdict = verify_instance(square_family(resolve_field(inv), inv.n), inv.per_k);
      emit(inv, dump(verdict_to_json(verdict)), out);
      return verdict_exit(verdict.violations);
    }
    if (inv.subcommand == "campaign") return run_campaign_command(inv, parse_campaign_mode(inv.suite), out, err);
    if (inv.subcommand == "search") return run_campaign_command(inv, CampaignMode::hillclimb, out, err);
    throw UsageError("unknown subcommand '" + inv.subcommand + "'");
  } catch (const Error& e) {
    err << "maskent: " << e.what() << "\n";
    return kOperationalError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact collision-probability and entropy verifier for diagonal masking families", "maskent"};
  app.require_subcommand(1, 1);
  CliInvocation inv;

  auto add_field_flags = [&](CLI::App* sub) {
    sub->add_option("--p", inv.p, "Field characteristic");
    sub->add_option("--m", inv.m, "Extension degree (default 1)");
    sub->add_option("--q", inv.q, "Field order, resolved to p^m");
  };
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", inv.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", inv.out, "Write the report here instead of stdout");
  };
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--iters", inv.iters, "Mutations per restart");
    sub->add_option("--restarts", inv.restarts, "Hill-climb restarts");
    sub->add_option("--seed", inv.seed, "Generator seed");
    sub->add_option("--workers", inv.workers, "Worker threads");
  };

  auto* field = app.add_subcommand("field", "Dump the addition and multiplication tables of GF(p^m)");
  add_field_flags(field);
  add_output_flags(field);

  auto* verify = app.add_subcommand("verify", "Verify every bound and identity for one function table");
  verify->add_option("--table", inv.table, "FunctionTable JSON file")->required();
  verify->add_flag("--per-k", inv.per_k, "Include per-mask rows");
  add_output_flags(verify);

  auto* campaign = app.add_subcommand("campaign", "Run an exhaustive, random or hill-climb campaign");
  add_field_flags(campaign);
  campaign->add_option("--n", inv.n, "Dimension");
  campaign->add_option("--suite", inv.suite, "exhaustive, random or hillclimb")
      ->check(CLI::IsMember({"exhaustive", "random", "hillclimb"}));
  campaign->add_option("--samples", inv.samples, "Random tables to draw");
  add_search_flags(campaign);
  add_output_flags(campaign);

  auto* tightness = app.add_subcommand("tightness", "Check the square map against its closed-form entropies");
  add_field_flags(tightness);
  tightness->add_option("--n", inv.n, "Dimension");
  tightness->add_flag("--per-k", inv.per_k, "Include per-mask rows");
  add_output_flags(tightness);

  auto* search = app.add_subcommand("search", "Hill-climb toward the largest average collision probability");
  add_field_flags(search);
  search->add_option("--n", inv.n, "Dimension");
  add_search_flags(search);
  add_output_flags(search);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "maskent: " << e.what() << "\n";
    return kOperationalError;
  }
  inv.subcommand = app.get_subcommands().front()->get_name();
  return run(inv, out, err);
}

}  // namespace maskent::cli
