#include "vsb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>

#include "vsb/cyclotomic.hpp"
#include "vsb/equivalence.hpp"
#include "vsb/morphisms.hpp"
#include "vsb/presentations.hpp"
#include "vsb/representation.hpp"
#include "vsb/schreier.hpp"
#include "vsb/words.hpp"

namespace vsb::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json integer_json(Integer const& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

json scalar_json(CycInt const& c) {
  json coeffs = json::array();
  for (auto const& x : c.coefficients()) coeffs.push_back(integer_json(x));
  return coeffs;
}

json params_json(RelationParams const& params) {
  json out = json::object();
  for (auto const& [key, value] : params) out[key] = value;
  return out;
}

json relation_json(Relation const& r) {
  return {{"family", r.family},
          {"params", params_json(r.params)},
          {"lhs", format_word(r.lhs)},
          {"rhs", format_word(r.rhs)},
          {"derived", r.derived}};
}

json image_json(MonomialImage const& m) {
  return {{"scalar", scalar_json(m.scalar)}, {"image", m.state.k}};
}

json witness_json(Witness const& w) {
  return {{"state", w.state.k}, {"lhs", image_json(w.lhs)}, {"rhs", image_json(w.rhs)}};
}

std::string show(Word const& w) { return w.empty() ? "1" : format_word(w); }

void emit(RunConfig const& cfg, std::ostream& out, json const& j, std::string const& text) {
  if (cfg.format == Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

void require_strands(RunConfig const& cfg) {
  if (cfg.strands < 2) throw UsageError(cfg.command + " needs -n <strands> with n >= 2");
}

void require_words(RunConfig const& cfg, std::size_t count) {
  if (cfg.words.size() != count) {
    throw UsageError(cfg.command + " expects " + std::to_string(count) + " word argument" +
                     (count == 1 ? "" : "s") + ", got " + std::to_string(cfg.words.size()));
  }
}

void validate(RunConfig const& cfg) {
  if (!is_prime(cfg.p)) throw UsageError("--p must be prime, got " + std::to_string(cfg.p));
  (void)catalog_from_name(cfg.catalog);
  if (cfg.threads == 0) throw UsageError("--threads must be at least 1");
  if (cfg.max_states == 0) throw UsageError("--max-states must be positive");
}

int cmd_relations(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 0);
  auto const relations = instantiate_relations(catalog_from_name(cfg.catalog), cfg.strands);
  json j = json::array();
  std::string text;
  for (auto const& r : relations) {
    j.push_back(relation_json(r));
    text += r.describe() + (r.derived ? "  [derived]\n" : "\n");
  }
  emit(cfg, out, j, text);
  return 0;
}

int cmd_perm(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 1);
  Word const w = parse_word(cfg.words[0], cfg.strands);
  Permutation const p = permutation_of(w);
  json j = {{"n", cfg.strands},
            {"word", format_word(w)},
            {"images", std::vector<int>(p.images().begin(), p.images().end())},
            {"cycles", p.cycles()},
            {"cycle_notation", p.cycle_notation()}};
  emit(cfg, out, j, p.cycle_notation() + "\n");
  return 0;
}

int cmd_translate(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 1);
  if (cfg.target.empty()) throw UsageError("translate needs --to {fusing|standard|subscript-one|expanded}");
  Word const w = parse_word(cfg.words[0], cfg.strands);
  Alphabet const to = alphabet_from_name(cfg.target);
  Word const result = normalize_to(w, to);
  json j = {{"n", cfg.strands},
            {"input", format_word(w)},
            {"to", alphabet_name(to)},
            {"output", format_word(result)}};
  emit(cfg, out, j, show(result) + "\n");
  return 0;
}

json decomposition_json(int n, Word const& w, Word const& pure, Word const& rep) {
  return {{"n", n},
          {"word", format_word(w)},
          {"pure", format_word(pure)},
          {"representative", format_word(rep)},
          {"permutation-cycles", permutation_of(w).cycle_notation()}};
}

int cmd_decompose(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 1);
  Word const w = parse_word(cfg.words[0], cfg.strands);
  auto const d = decompose(w);
  emit(cfg, out, decomposition_json(cfg.strands, w, d.pure, d.representative),
       "pure: " + show(d.pure) + "\nrepresentative: " + show(d.representative) + "\n");
  return 0;
}

int cmd_rewrite_pure(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 1);
  Word const w = parse_word(cfg.words[0], cfg.strands);
  Word const pure = rewrite_pure(w);
  emit(cfg, out, decomposition_json(cfg.strands, w, pure, Word(cfg.strands)), show(pure) + "\n");
  return 0;
}

std::string direction_name(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

int cmd_equal(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 2);
  Word const w1 = parse_word(cfg.words[0], cfg.strands);
  Word const w2 = parse_word(cfg.words[1], cfg.strands);
  SearchBudget budget{cfg.depth, cfg.max_states, std::nullopt};
  if (cfg.max_length > 0) budget.max_length = cfg.max_length;
  Verdict const v = search_equivalent(w1, w2, catalog_from_name(cfg.catalog), budget);

  json trace = json::array();
  std::string text;
  Word cur = w1;
  for (auto const& step : v.trace) {
    cur = apply_relation_at(cur, step.relation, step.position, step.direction);
    trace.push_back({{"family", step.relation.family},
                     {"params", params_json(step.relation.params)},
                     {"position", step.position},
                     {"direction", direction_name(step.direction)},
                     {"result", format_word(cur)}});
    text += "  " + step.relation.family + " " + direction_name(step.direction) + " @" +
            std::to_string(step.position) + " -> " + show(cur) + "\n";
  }

  std::string verdict = v.outcome == Outcome::Equivalent ? "equivalent" : "unknown";
  json j = {{"catalog", cfg.catalog},
            {"n", cfg.strands},
            {"w1", format_word(w1)},
            {"w2", format_word(w2)},
            {"relation_steps", v.relation_steps},
            {"trace", trace},
            {"stats",
             {{"states", v.stats.states},
              {"depth", v.stats.depth_reached},
              {"exhausted", v.stats.exhausted}}}};
  if (v.outcome == Outcome::Unknown) {
    // Only a fingerprint mismatch certifies inequality.
    if (auto diff = first_difference(w1, w2, 3)) {
      verdict = "distinct";
      j["witness"] = witness_json(*diff);
      j["witness"]["p"] = 3;
    }
  }
  j["verdict"] = verdict;
  emit(cfg, out, j, verdict + "\n" + text);
  return v.outcome == Outcome::Equivalent ? 0 : 1;
}

int cmd_eval(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 1);
  Word const w = parse_word(cfg.words[0], cfg.strands);
  auto const states = basis_states(cfg.strands, cfg.p);
  auto const images = fingerprint(w, cfg.p);
  json list = json::array();
  std::string text;
  for (std::size_t s = 0; s < states.size(); ++s) {
    list.push_back({{"state", states[s].k},
                    {"scalar", scalar_json(images[s].scalar)},
                    {"image", images[s].state.k}});
    text += states[s].to_string() + " -> " + images[s].scalar.to_string() + " " +
            images[s].state.to_string() + "\n";
  }
  emit(cfg, out, list, text);
  return 0;
}

json report_json(VerificationReport const& report) {
  json families = json::array();
  for (auto const& f : report.families) {
    json fj = {{"family", f.family},
               {"derived", f.derived},
               {"instances", f.instances},
               {"passed", f.passed},
               {"ok", f.ok()}};
    if (f.first_failure) {
      fj["witness"] = witness_json(f.first_failure->witness);
      fj["witness"]["relation"] = relation_json(f.first_failure->relation);
    }
    families.push_back(std::move(fj));
  }
  return {{"catalog", report.catalog}, {"n", report.strands}, {"p", report.p},
          {"ok", report.ok()},         {"instances", report.instances()},
          {"families", families}};
}

std::string report_text(VerificationReport const& report) {
  std::string text;
  for (auto const& f : report.families) {
    text += (f.ok() ? "PASS " : "FAIL ") + f.family + " " + std::to_string(f.passed) + "/" +
            std::to_string(f.instances) + (f.derived ? " [derived]" : "") + "\n";
    if (f.first_failure) {
      auto const& w = f.first_failure->witness;
      text += "     " + f.first_failure->relation.describe() + " at " + w.state.to_string() +
              ": " + w.lhs.scalar.to_string() + " " + w.lhs.state.to_string() + " vs " +
              w.rhs.scalar.to_string() + " " + w.rhs.state.to_string() + "\n";
    }
  }
  return text + (report.ok() ? "ok\n" : "FAILED\n");
}

int cmd_verify(RunConfig const& cfg, std::ostream& out) {
  require_strands(cfg);
  require_words(cfg, 0);
  VerificationReport report =
      verify_relations(catalog_from_name(cfg.catalog), cfg.strands, cfg.p, cfg.threads);
  if (!cfg.extra.empty()) {
    std::vector<Relation> extra;
    for (auto const& text : cfg.extra) extra.push_back(parse_relation(text, cfg.strands, "extra"));
    auto more = verify_relation_list("extra", extra, cfg.p, cfg.threads);
    report.families.insert(report.families.end(), more.families.begin(), more.families.end());
  }
  emit(cfg, out, report_json(report), report_text(report));
  return report.ok() ? 0 : 1;
}

int cmd_verify_ops(RunConfig const& cfg, std::ostream& out) {
  require_words(cfg, 0);
  OperatorReport const report = verify_operator_conditions(cfg.p);
  json conditions = json::array();
  std::string text;
  for (auto const& c : report.conditions) {
    bool const ok = c.passed && (!c.closed_form_checked || c.closed_form_passed);
    json cj = {{"number", c.number},
               {"statement", c.statement},
               {"states_checked", c.states_checked},
               {"passed", ok}};
    if (c.closed_form_checked) cj["closed_form_passed"] = c.closed_form_passed;
    if (c.failure) cj["failure"] = *c.failure;
    conditions.push_back(std::move(cj));
    text += (ok ? "PASS " : "FAIL ") + std::to_string(c.number) + " " + c.statement + "\n";
  }
  emit(cfg, out, {{"p", report.p}, {"ok", report.ok()}, {"conditions", conditions}}, text);
  return report.ok() ? 0 : 1;
}

using Handler = std::function<int(RunConfig const&, std::ostream&)>;

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Virtual singular braid monoid toolkit", "vsb"};
  app.require_subcommand(1);

  std::map<std::string, Handler> const handlers = {
      {"relations", cmd_relations},     {"perm", cmd_perm},
      {"translate", cmd_translate},     {"decompose", cmd_decompose},
      {"rewrite-pure", cmd_rewrite_pure}, {"equal", cmd_equal},
      {"eval", cmd_eval},               {"verify", cmd_verify},
      {"verify-ops", cmd_verify_ops}};
  std::map<std::string, std::string> const descriptions = {
      {"relations", "list relation instances of a catalog"},
      {"perm", "permutation of a word"},
      {"translate", "translate a word to another alphabet"},
      {"decompose", "split a word into pure part and coset representative"},
      {"rewrite-pure", "rewrite a pure word into generalized fusing strings"},
      {"equal", "search for a relation derivation between two words"},
      {"eval", "fingerprint a word under the cyclotomic representation"},
      {"verify", "check every relation of a catalog in the representation"},
      {"verify-ops", "check the operator conditions for T, R, S"}};

  std::string format = "json";
  for (auto const& [name, handler] : handlers) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("-n", cfg.strands, "strand count");
    sub->add_option("--p", cfg.p, "prime for the representation");
    sub->add_option("--catalog", cfg.catalog,
                    "standard | reduced-standard | fusing | reduced-fusing | pure");
    sub->add_option("--depth", cfg.depth, "search depth (relation applications)");
    sub->add_option("--max-states", cfg.max_states, "search state budget");
    sub->add_option("--max-length", cfg.max_length, "longest word the search may visit");
    sub->add_option("--threads", cfg.threads, "verification worker threads");
    sub->add_option("--seed", cfg.seed, "seed for randomized work");
    sub->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    if (name == "translate") {
      sub->add_option("--to", cfg.target, "fusing | standard | subscript-one | expanded");
    }
    if (name == "verify") {
      sub->add_option("--extra", cfg.extra, "additional relation 'lhs = rhs' to check");
    }
    sub->add_option("words", cfg.words, "words in token grammar, e.g. \"s1 v2 t1\"");
  }

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.format = format == "text" ? Format::Text : Format::Json;

  try {
    validate(cfg);
    return handlers.at(cfg.command)(cfg, out);
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << "\n" << app.get_subcommand(cfg.command)->help();
    return 2;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vsb::cli
