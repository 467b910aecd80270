#include "permsum/serialize.hpp"

#include <sstream>

#include "permsum/error.hpp"

namespace permsum {

using nlohmann::json;

void to_json(json& j, const Permutation& p) { j = std::vector<int>(p.values().begin(), p.values().end()); }

void to_json(json& j, const WeightSeq& w) { j = std::vector<std::int64_t>(w.values().begin(), w.values().end()); }

void to_json(json& j, const InputVector& x) { j = std::vector<std::int64_t>(x.values().begin(), x.values().end()); }

void to_json(json& j, const SumTable& table) {
  json entries = json::array();
  for (const auto& [sum, perms] : table.entries) entries.push_back({{"sum", sum}, {"perms", perms}});
  j = {{"n", table.weights.size()}, {"g", table.weights}, {"x", table.inputs}, {"entries", std::move(entries)}};
}

void to_json(json& j, const VerificationReport& report) {
  j = {{"distinct", report.distinct},
       {"order_compatible", report.order_compatible},
       {"collision_witness", nullptr},
       {"order_witness", nullptr}};
  if (const auto& w = report.collision_witness) j["collision_witness"] = {{"p", w->p}, {"q", w->q}, {"sum", w->sum}};
  if (const auto& w = report.order_witness) {
    j["order_witness"] = {{"p", w->p}, {"q", w->q}, {"sum_p", w->sum_p}, {"sum_q", w->sum_q}};
  }
}

void to_json(json& j, const ConstraintRecord& r) {
  j = {{"j0", r.j0},           {"subset", r.subset}, {"pi_pivot", r.pi_pivot},
       {"rho_pivot", r.rho_pivot}, {"pi_low", r.pi_low}, {"rho_low", r.rho_low},
       {"rhs", r.rhs},         {"diff", r.diff},     {"lower_bound", r.lower_bound}};
}

void to_json(json& j, const GreedyTrace& trace) {
  json levels = json::array();
  for (const auto& level : trace.levels) {
    levels.push_back({{"j0", level.j0},
                      {"weight", level.weight},
                      {"constraints_examined", level.constraints_examined},
                      {"binding", level.binding}});
  }
  j = {{"n", trace.n},
       {"weights", trace.weights},
       {"max_sum", extremal_sums(trace.weights, InputVector::identity(trace.n)).max},
       {"levels", std::move(levels)}};
}

void to_json(json& j, const SearchResult& result) {
  j = {{"n", result.weights.size()},
       {"weights", result.weights},
       {"max_sum", result.max_sum},
       {"optimal", result.optimal},
       {"nodes_explored", result.nodes_explored},
       {"budget", result.budget}};
}

void to_json(json& j, const TrickPlan& plan) {
  j = {{"n", plan.n()}, {"x", plan.inputs()}, {"g", plan.weights()}, {"pool", plan.pool()}, {"labels", plan.labels()}};
}

void to_json(json& j, const Assignment& a) {
  json rows = json::array();
  for (const auto& e : a.readable) rows.push_back({{"object", e.object}, {"person", e.person}, {"nuts", e.nuts}});
  j = {{"perm", a.perm}, {"total", a.total}, {"assignments", std::move(rows)}};
}

TrickPlan plan_from_json(const json& doc, int limit) {
  const json& body = doc.contains("payload") ? doc.at("payload") : doc;
  try {
    const int n = body.at("n").get<int>();
    auto x = body.at("x").get<std::vector<std::int64_t>>();
    auto g = body.at("g").get<std::vector<std::int64_t>>();
    const auto pool = body.at("pool").get<std::int64_t>();
    std::vector<std::string> labels;
    if (body.contains("labels")) labels = body.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(x.size()) != n || static_cast<int>(g.size()) != n) {
      fail(ErrorKind::SizeMismatch, "plan lists do not match n=" + std::to_string(n));
    }
    const bool zero_weight = !g.empty() && g.front() == 0;
    return TrickPlan::make(InputVector(std::move(x)), WeightSeq(std::move(g), zero_weight), pool, std::move(labels),
                           limit);
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("plan document: ") + e.what());
  }
}

json output_document(std::string_view command, json payload) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"payload", std::move(payload)}};
}

std::string sum_table_csv(const SumTable& table) {
  std::string out = "sum,perm\n";
  for (const auto& [sum, perms] : table.entries) {
    for (const auto& p : perms) {
      out += std::to_string(sum);
      out += ',';
      out += format_one_line(p);
      out += '\n';
    }
  }
  return out;
}

std::map<std::int64_t, std::vector<Permutation>> parse_sum_table_csv(std::string_view text) {
  std::map<std::int64_t, std::vector<Permutation>> entries;
  bool first = true;
  while (!text.empty()) {
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (first && line == "sum,perm") {
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string_view::npos) fail(ErrorKind::MalformedInput, "row without permutation");
    auto sum = parse_int_list(line.substr(0, comma));
    entries[sum.front()].push_back(parse_one_line(line.substr(comma + 1)));
  }
  return entries;
}

}  // namespace permsum
