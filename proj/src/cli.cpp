#include "permsum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "permsum/construct.hpp"
#include "permsum/error.hpp"
#include "permsum/optsearch.hpp"
#include "permsum/serialize.hpp"
#include "permsum/trick.hpp"

namespace permsum::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int resolve_n(std::optional<int> explicit_n, std::size_t inferred) {
  if (explicit_n && *explicit_n != static_cast<int>(inferred)) {
    fail(ErrorKind::SizeMismatch,
         "--n " + std::to_string(*explicit_n) + " disagrees with a list of length " + std::to_string(inferred));
  }
  return static_cast<int>(inferred);
}

InputVector inputs_or_identity(const std::string& text, int n) {
  if (text.empty()) return InputVector::identity(n);
  auto x = parse_int_list(text);
  if (static_cast<int>(x.size()) != n) fail(ErrorKind::SizeMismatch, "--x and --g differ in length");
  return InputVector(std::move(x));
}

json perm_json(const Permutation& p, bool reversed) {
  return reversed ? json(format_reversed(p)) : json(p);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open plan file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedInput, "plan file '" + path + "': " + e.what());
  }
}

void emit(std::ostream& out, std::string_view command, json payload) {
  out << output_document(command, std::move(payload)).dump(2) << '\n';
}

}  // namespace

int enumeration_limit_from_env() {
  const char* raw = std::getenv("PERMSUM_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationLimit;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0' || value < 1 || value > 20) {
    throw std::invalid_argument(std::string("PERMSUM_MAX_N must be an integer in 1..20, got '") + raw + "'");
  }
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinct permutation sums: construct, verify, search and perform the nut trick", "permsum"};
  app.require_subcommand(1);

  std::optional<int> n_opt;
  int n = 0;
  std::string method = "greedy";
  std::optional<std::int64_t> base;
  bool trace = false;
  std::string g_text, x_text, perm_text, format = "json", plan_path, labels_text;
  bool order = false, allow_zero = false, reversed = false;
  std::optional<std::int64_t> budget, pool, node_limit;
  std::int64_t remaining = 0;

  auto* construct = app.add_subcommand("construct", "Build a distinguishing weight sequence");
  construct->add_option("--n", n, "Number of objects")->required()->check(CLI::PositiveNumber);
  construct->add_option("--method", method)->check(CLI::IsMember({"greedy", "base"}));
  construct->add_option("--base", base, "Base m for --method base (default n)");
  construct->add_flag("--trace", trace, "Include the per-level binding constraints (greedy)");

  auto* verify = app.add_subcommand("verify", "Check that all permutation sums are distinct");
  verify->add_option("--g", g_text, "Weights g1,...,gn")->required();
  verify->add_option("--x", x_text, "Inputs x1,...,xn (default 1..n)");
  verify->add_option("--n", n_opt);
  verify->add_flag("--order", order, "Also report antilex order compatibility");
  verify->add_flag("--allow-zero", allow_zero, "Admit g1 = 0");

  auto* search = app.add_subcommand("search", "Exact minimum of the largest sum");
  search->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  search->add_option("--budget", budget, "Inclusive cap on the objective");
  search->add_option("--node-limit", node_limit);
  search->add_flag("--allow-zero", allow_zero, "Admit g1 = 0");

  auto* enumerate = app.add_subcommand("enumerate", "List S_n in antilex order");
  enumerate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--reversed", reversed, "Use the reversed angle-bracket display");

  auto* succ = app.add_subcommand("successor", "Immediate antilex successor");
  succ->add_option("--perm", perm_text)->required();
  succ->add_flag("--reversed", reversed);
  auto* pred = app.add_subcommand("predecessor", "Immediate antilex predecessor");
  pred->add_option("--perm", perm_text)->required();
  pred->add_flag("--reversed", reversed);

  auto* table = app.add_subcommand("table", "All permutation sums");
  table->add_option("--g", g_text)->required();
  table->add_option("--x", x_text);
  table->add_option("--n", n_opt);
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  table->add_flag("--allow-zero", allow_zero);

  auto* trick = app.add_subcommand("trick", "Plan, encode and decode the nut trick");
  trick->require_subcommand(1);
  auto* trick_plan = trick->add_subcommand("plan", "Produce a performance plan");
  trick_plan->add_option("--n", n_opt);
  trick_plan->add_option("--pool", pool);
  trick_plan->add_option("--g", g_text, "Explicit weights");
  trick_plan->add_option("--method", method)->check(CLI::IsMember({"greedy", "base"}));
  trick_plan->add_option("--base", base);
  trick_plan->add_option("--labels", labels_text, "Comma-separated object names");
  auto* trick_encode = trick->add_subcommand("encode", "Nuts left for a given choice");
  trick_encode->add_option("--plan", plan_path)->required();
  trick_encode->add_option("--perm", perm_text)->required();
  trick_encode->add_flag("--reversed", reversed);
  auto* trick_decode = trick->add_subcommand("decode", "Recover the choice from the nuts left");
  trick_decode->add_option("--plan", plan_path)->required();
  trick_decode->add_option("--remaining", remaining)->required();

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const int limit = enumeration_limit_from_env();
    auto parse_perm = [&] { return reversed ? parse_reversed(perm_text) : parse_one_line(perm_text); };

    if (*construct) {
      if (method == "greedy") {
        if (base) throw UsageError("--base applies to --method base only");
        auto result = greedy_sequence(n);
        json payload = {{"method", method},
                        {"n", n},
                        {"weights", result.weights},
                        {"max_sum", extremal_sums(result.weights, InputVector::identity(n)).max}};
        if (trace) payload["trace"] = result;
        emit(out, "construct", std::move(payload));
      } else {
        if (trace) throw UsageError("--trace applies to --method greedy only");
        auto weights = base_sequence(n, base.value_or(n));
        emit(out, "construct",
             {{"method", method},
              {"n", n},
              {"base", base.value_or(n)},
              {"weights", weights},
              {"max_sum", extremal_sums(weights, InputVector::identity(n)).max}});
      }
    } else if (*verify) {
      auto g = parse_int_list(g_text);
      const int size = resolve_n(n_opt, g.size());
      WeightSeq w(std::move(g), allow_zero);
      auto x = inputs_or_identity(x_text, size);
      auto report = order ? verify_order_compatible(w, x, limit) : verify_distinct(w, x, limit);
      json payload = {{"n", size}, {"g", w}, {"x", x}, {"distinct", report.distinct},
                      {"collision_witness", json(report)["collision_witness"]}};
      if (order) {
        payload["order_compatible"] = report.order_compatible;
        payload["order_witness"] = json(report)["order_witness"];
      }
      emit(out, "verify", std::move(payload));
    } else if (*search) {
      SearchConfig cfg;
      cfg.n = n;
      cfg.budget = budget;
      cfg.allow_zero = allow_zero;
      cfg.node_limit = node_limit;
      json payload = exact_search(cfg);
      payload["allow_zero"] = allow_zero;
      emit(out, "search", std::move(payload));
    } else if (*enumerate) {
      json perms = json::array();
      for (const auto& p : enumerate_antilex(n, limit)) perms.push_back(perm_json(p, reversed));
      emit(out, "enumerate", {{"n", n}, {"count", perms.size()}, {"permutations", std::move(perms)}});
    } else if (*succ || *pred) {
      auto p = parse_perm();
      auto q = *succ ? successor(p) : predecessor(p);
      auto rel = compare_antilex(q, p);
      const char* name = *succ ? "successor" : "predecessor";
      emit(out, name,
           {{"input", perm_json(p, reversed)},
            {"result", perm_json(q, reversed)},
            {"text", reversed ? format_reversed(q) : format_one_line(q)},
            {"pivot", *rel.pivot}});
    } else if (*table) {
      auto g = parse_int_list(g_text);
      const int size = resolve_n(n_opt, g.size());
      WeightSeq w(std::move(g), allow_zero);
      auto t = sum_table(w, inputs_or_identity(x_text, size), limit);
      if (format == "csv") {
        out << sum_table_csv(t);
      } else {
        emit(out, "table", t);
      }
    } else if (*trick_plan) {
      std::vector<std::string> labels;
      if (!labels_text.empty()) {
        std::stringstream ss(labels_text);
        for (std::string item; std::getline(ss, item, ',');) labels.push_back(item);
      }
      if (!g_text.empty()) {
        auto g = parse_int_list(g_text);
        const int size = resolve_n(n_opt, g.size());
        emit(out, "trick plan", plan(size, pool, WeightSeq(std::move(g)), std::move(labels), limit));
      } else {
        if (!n_opt) throw UsageError("trick plan needs --n or --g");
        WeightSource source = GreedyWeights{};
        if (method == "base") source = BaseWeights{base.value_or(*n_opt)};
        emit(out, "trick plan", plan(*n_opt, pool, source, std::move(labels), limit));
      }
    } else if (*trick_encode) {
      auto p = plan_from_json(load_json_file(plan_path), limit);
      auto perm = parse_perm();
      emit(out, "trick encode", {{"perm", perm}, {"remaining", encode(p, perm)}, {"pool", p.pool()}});
    } else if (*trick_decode) {
      auto p = plan_from_json(load_json_file(plan_path), limit);
      json payload = decode(p, remaining);
      payload["remaining"] = remaining;
      emit(out, "trick decode", std::move(payload));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace permsum::cli
