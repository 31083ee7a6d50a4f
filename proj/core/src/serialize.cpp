#include "maskent/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "maskent/error.hpp"

namespace maskent {

namespace {

using nlohmann::json;

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string format15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json vector_json(std::uint64_t code, std::uint32_t q, std::size_t n) {
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(code % q);
    code /= q;
  }
  return out;
}

json config_json(const CampaignConfig& c) {
  return json{{"q", c.q},
              {"n", c.n},
              {"mode", to_string(c.mode)},
              {"samples", c.samples},
              {"iters", c.iters},
              {"restarts", c.restarts},
              {"seed", c.seed},
              {"budget", c.budget},
              {"identity_samples", c.identity_samples}};
}

std::uint64_t require_uint(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_unsigned()) {
    throw TableError(std::string("table field '") + key + "' missing or not a non-negative integer");
  }
  return doc.at(key).get<std::uint64_t>();
}

}  // namespace

double round_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

json field_to_json(const Field& field) {
  const std::uint32_t q = field.q();
  json add = json::array();
  json mul = json::array();
  for (Element a = 0; a < q; ++a) {
    const auto ar = field.add_row(a);
    const auto mr = field.mul_row(a);
    add.push_back(std::vector<std::uint32_t>(ar.begin(), ar.end()));
    mul.push_back(std::vector<std::uint32_t>(mr.begin(), mr.end()));
  }
  const auto irr = field.irreducible();
  return json{{"p", field.p()},
              {"m", field.m()},
              {"q", q},
              {"irreducible", std::vector<std::uint32_t>(irr.begin(), irr.end())},
              {"add", std::move(add)},
              {"mul", std::move(mul)}};
}

json table_to_json(const FunctionTable& table) {
  json outputs = json::array();
  for (std::uint64_t y : table.outputs()) outputs.push_back(vector_json(y, table.q(), table.n()));
  return json{{"p", table.field().p()}, {"m", table.field().m()}, {"n", table.n()}, {"outputs", std::move(outputs)}};
}

FunctionTable table_from_json(const json& doc, std::uint32_t order_limit) {
  if (!doc.is_object()) throw TableError("table document must be a JSON object");
  const std::uint64_t p = require_uint(doc, "p");
  const std::uint64_t m = require_uint(doc, "m");
  const std::uint64_t n = require_uint(doc, "n");
  if (n < 1) throw TableError("table dimension n must be >= 1");
  if (p > UINT32_MAX || m > 64) throw TableError("field parameters out of range");
  FieldPtr field;
  try {
    field = build_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), order_limit);
  } catch (const FieldConstructionError& e) {
    throw TableError(std::string("bad field in table: ") + e.what());
  }
  const auto domain = checked_pow(field->q(), n);
  if (!domain) throw TableError("table domain overflows 64 bits");
  if (!doc.contains("outputs") || !doc.at("outputs").is_array()) throw TableError("table field 'outputs' missing or not an array");
  const json& rows = doc.at("outputs");
  if (rows.size() != *domain) {
    throw TableError("table is not total: expected " + std::to_string(*domain) + " outputs, got " + std::to_string(rows.size()));
  }
  std::vector<std::uint64_t> outputs;
  outputs.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n) throw TableError("each output must be a list of n element indices");
    std::uint64_t code = 0;
    for (std::size_t i = n; i-- > 0;) {
      const json& e = row[i];
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= field->q()) {
        throw TableError("output element " + e.dump() + " out of range for GF(" + std::to_string(field->q()) + ")");
      }
      code = code * field->q() + e.get<std::uint64_t>();
    }
    outputs.push_back(code);
  }
  return FunctionTable(field, n, std::move(outputs));
}

json report_to_json(const TheoremReport& r) {
  json out{{"q", r.q},
           {"n", r.n},
           {"avg_cp", r.avg_cp.str()},
           {"cp_bound", r.cp_bound.str()},
           {"avg_h2", round_significant(r.avg_h2)},
           {"h2_bound", round_significant(r.h2_bound)},
           {"avg_shannon", round_significant(r.avg_shannon)},
           {"coordinatewise", r.coordinatewise},
           {"equality_holds", r.equality_holds}};
  if (r.per_k) {
    json rows = json::array();
    for (const auto& e : *r.per_k) {
      rows.push_back(json{{"k", std::vector<std::uint32_t>(e.k.entries().begin(), e.k.entries().end())},
                          {"cp", e.cp.str()},
                          {"h2", round_significant(e.h2)},
                          {"shannon", round_significant(e.shannon)},
                          {"image_size", e.image_size}});
    }
    out["per_k"] = std::move(rows);
  }
  return out;
}

json verdict_to_json(const InstanceVerdict& v) {
  json shells = json::array();
  for (const auto& s : v.shells) {
    shells.push_back(json{{"d", s.distance}, {"shell_mass", s.shell_mass.str()}, {"conditional_collision", s.conditional_collision.str()}});
  }
  json out{{"report", report_to_json(v.report)},
           {"joint_collision", v.joint_collision.str()},
           {"shells", std::move(shells)},
           {"violations", v.violations}};
  if (v.prediction) {
    out["prediction"] = json{{"avg_shannon", round_significant(v.prediction->avg_shannon)}, {"avg_h2", round_significant(v.prediction->avg_h2)}};
  }
  if (v.chain_rule_gap) out["chain_rule_gap"] = round_significant(*v.chain_rule_gap);
  return out;
}

json campaign_to_json(const CampaignResult& r) {
  json instances = json::array();
  for (const auto& s : r.instances) {
    instances.push_back(json{{"f_digest", hex(s.digest)},
                             {"avg_cp", s.avg_cp.str()},
                             {"avg_h2", round_significant(s.avg_h2)},
                             {"avg_shannon", round_significant(s.avg_shannon)},
                             {"coordinatewise", s.coordinatewise},
                             {"equality", s.equality}});
  }
  json argmax = json::array();
  for (const auto& t : r.argmax) argmax.push_back(table_to_json(t));
  json trajectory = json::array();
  for (const auto& t : r.trajectory) trajectory.push_back(json{{"restart", t.restart}, {"iteration", t.iteration}, {"best", t.best.str()}});

  json out{{"config", config_json(r.config)},
           {"cp_bound", r.cp_bound.str()},
           {"h2_bound", round_significant(r.h2_bound)},
           {"instance_count", r.instances.size()},
           {"max_avg_cp", r.max_avg_cp.str()},
           {"argmax_count", r.argmax.size()},
           {"argmax_all_coordinatewise", r.argmax_all_coordinatewise},
           {"coordinatewise_count", r.coordinatewise_count},
           {"cp_slack", json{{"min", r.min_cp_slack.str()}, {"mean", r.mean_cp_slack.str()}, {"max", r.max_cp_slack.str()}}},
           {"h2_slack", json{{"min", round_significant(r.min_h2_slack)}, {"mean", round_significant(r.mean_h2_slack)}, {"max", round_significant(r.max_h2_slack)}}},
           {"violations", r.violations},
           {"argmax", std::move(argmax)},
           {"instances", std::move(instances)}};
  if (!r.trajectory.empty()) out["trajectory"] = std::move(trajectory);
  return out;
}

std::string campaign_to_csv(const CampaignResult& r) {
  std::ostringstream os;
  os << "f_digest,avg_cp,avg_h2,avg_shannon,coordinatewise,equality\n";
  for (const auto& s : r.instances) {
    os << hex(s.digest) << ',' << s.avg_cp.str() << ',' << format15(s.avg_h2) << ',' << format15(s.avg_shannon) << ','
       << (s.coordinatewise ? "true" : "false") << ',' << (s.equality ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace maskent
