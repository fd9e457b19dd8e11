// wittlab command-line front end.
//
//   wittlab <verb> [--field D] [--form E]... [--n N] [--m M] [--max-k K]
//           [--trials T] [--seed S] [--threads P] [--json] [--config FILE]
//
// Exit status: 0 success, 1 property violated / budget exhausted / engine
// bug, 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wittlab/errors.hpp"
#include "wittlab/parse.hpp"
#include "wittlab/search.hpp"
#include "wittlab/structure.hpp"

using namespace wittlab;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string verb;
  std::string field = "F3";
  std::vector<std::string> forms;
  std::optional<int> n;
  std::optional<int> m;
  int max_k = 4;
  std::int64_t trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool json = false;
};

struct Outcome {
  json result;
  std::optional<json> witness;
  std::string text;
  bool violated = false;
};

std::string witness_str(const PfisterWitness& w) {
  return format_class(w.scalar) + "*" + format_pfister(w.slots);
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o), field_(parse_field(o.field)) {}

  Outcome run() {
    static const std::map<std::string, Outcome (Runner::*)()> verbs = {
        {"witt", &Runner::witt},
        {"isotropy", &Runner::isotropy},
        {"ideal", &Runner::ideal},
        {"pfister-number", &Runner::pfister_num},
        {"linkage", &Runner::linkage},
        {"divides", &Runner::divides_verb},
        {"ga-classify", &Runner::ga_classify_verb},
        {"albert-factor", &Runner::albert_factor},
        {"sim-check", &Runner::sim_check},
        {"ga-survey", &Runner::survey},
        {"going-up", &Runner::going_up},
        {"going-down", &Runner::going_down},
    };
    auto it = verbs.find(o_.verb);
    if (it == verbs.end()) throw ValidationError("unknown verb '" + o_.verb + "'");
    return (this->*(it->second))();
  }

  json input() const {
    json in;
    in["field"] = field_.descriptor();
    if (!o_.forms.empty()) in["forms"] = o_.forms;
    if (o_.n) in["n"] = *o_.n;
    if (o_.m) in["m"] = *o_.m;
    if (o_.verb == "pfister-number") in["max_k"] = o_.max_k;
    if (is_campaign()) {
      in["trials"] = o_.trials;
      in["seed"] = o_.seed;
    }
    return in;
  }

  bool is_campaign() const {
    return o_.verb == "sim-check" || o_.verb == "ga-survey" || o_.verb == "going-down";
  }

 private:
  const Options& o_;
  FieldTower field_;

  std::vector<Form> forms(std::size_t count) const {
    if (o_.forms.size() != count) {
      throw ValidationError(o_.verb + " expects " + std::to_string(count) + " --form argument" +
                            (count == 1 ? "" : "s") + ", got " + std::to_string(o_.forms.size()));
    }
    std::vector<Form> out;
    for (const auto& src : o_.forms) out.push_back(parse_form(src, field_));
    return out;
  }

  int need_n() const {
    if (!o_.n) throw ValidationError(o_.verb + " requires --n");
    return *o_.n;
  }

  Outcome witt() {
    Outcome out;
    if (o_.forms.size() == 2) {
      auto f = forms(2);
      bool we = witt_equal(f[0], f[1]);
      bool iso = isometric(f[0], f[1]);
      out.result = json{{"witt_equal", we}, {"isometric", iso}};
      out.text = std::string("witt_equal: ") + (we ? "true" : "false") + "\nisometric: " + (iso ? "true" : "false");
      return out;
    }
    Form f = forms(1)[0];
    WittClass c = anisotropic_part(f);
    out.result = json{{"anisotropic", format_form(c.form)}, {"diman", c.diman()}, {"witt_index", witt_index(f)}};
    out.text = "anisotropic part: " + format_form(c.form) + "\ndiman: " + std::to_string(c.diman()) +
               "\nwitt index: " + std::to_string(witt_index(f));
    return out;
  }

  Outcome isotropy() {
    Form f = forms(1)[0];
    Outcome out;
    bool iso = is_isotropic(f);
    out.result = iso;
    out.text = iso ? "isotropic" : "anisotropic";
    return out;
  }

  Outcome ideal() {
    Form f = forms(1)[0];
    IdealCert cert = in_In(f, need_n());
    Outcome out;
    out.result = cert.member;
    out.witness = json{{"rule", cert.rule}};
    out.text = std::string(cert.member ? "in" : "not in") + " I^" + std::to_string(cert.n) + " (" + cert.rule + ")";
    return out;
  }

  Outcome pfister_num() {
    Form f = forms(1)[0];
    PfisterNumber pn = pfister_number(f, need_n(), o_.max_k);
    Outcome out;
    if (pn.value) {
      out.result = *pn.value;
      json w = json::array();
      for (const auto& s : pn.summands) w.push_back(witness_str(s));
      out.witness = w;
      out.text = std::to_string(*pn.value);
      for (const auto& s : pn.summands) out.text += "\n  " + witness_str(s);
    } else {
      out.result = "exceeds max_k";
      out.text = "exceeds max_k = " + std::to_string(o_.max_k);
    }
    return out;
  }

  Outcome linkage() {
    auto f = forms(2);
    const SquareClass one = SquareClass::one(field_);
    Linkage l = linkage_number(f[0], f[1], one, class_of_minus_one(field_));
    Outcome out;
    out.result = json{{"witt_index", l.witt_index}, {"r", l.r ? json(*l.r) : json(nullptr)}};
    out.text = "witt index: " + std::to_string(l.witt_index);
    if (l.r) {
      out.text += "\nlinkage number: " + std::to_string(*l.r);
      if (*l.r >= 1) {
        Link link = find_link(f[0], f[1], *l.r);
        out.witness = json{{"link", format_pfister(link.alpha)},
                           {"sigma_cofactor", format_pfister(link.sigma1)},
                           {"pi_cofactor", format_pfister(link.pi1)}};
        out.text += "\nlink: " + format_pfister(link.alpha);
      }
    }
    return out;
  }

  Outcome divides_verb() {
    auto f = forms(2);
    std::optional<Form> tau = divides(f[0], f[1]);
    Outcome out;
    out.result = tau.has_value();
    if (tau) out.witness = json{{"tau", format_form(*tau)}};
    out.text = tau ? "divides, cofactor " + format_form(*tau) : "does not divide";
    return out;
  }

  Outcome ga_classify_verb() {
    Form f = forms(1)[0];
    GAClassification c = ga_classify(f, need_n());
    Outcome out;
    out.result = json{{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}, {"c5", c.c5}};
    json w = json::object();
    if (c.sum_pair) w["c1"] = {witness_str((*c.sum_pair)[0]), witness_str((*c.sum_pair)[1])};
    if (c.albert) w["c2"] = {{"pfister", witness_str(*c.albert_divisor)}, {"albert", format_form(*c.albert)}};
    if (c.triple) {
      w["c3"] = json::array();
      for (const auto& s : *c.triple) w["c3"].push_back(witness_str(s));
    }
    if (c.subform) w["c4"] = witness_str(*c.subform);
    if (c.neighbor) {
      w["c5"] = {{"neighbor", format_form(*c.neighbor)}, {"pfister", witness_str(*c.neighbor_pfister)}};
    }
    out.witness = w;
    for (int i = 0; i < 5; ++i) {
      bool v = std::array{c.c1, c.c2, c.c3, c.c4, c.c5}[i];
      out.text += (i ? "\n" : "") + std::string("c") + std::to_string(i + 1) + ": " + (v ? "true" : "false");
    }
    if (auto problem = verify_classification(c, f); !problem.empty()) {
      throw InvariantViolation(problem, format_form(f));
    }
    out.violated = !c.consistent();
    return out;
  }

  Outcome albert_factor() {
    auto f = forms(2);
    Form sigma = make_albert_factor(f[0], f[1], need_n());
    Outcome out;
    out.result = format_form(sigma);
    out.text = format_form(sigma);
    return out;
  }

  Outcome going_up() {
    Form f = forms(1)[0];
    GAUpWitness w = ga_up_witness(f, need_n());
    Outcome out;
    out.result = json{{"route", std::string(1, w.route)}};
    out.witness = json::array({witness_str(w.pair[0]), witness_str(w.pair[1])});
    out.text = "route " + std::string(1, w.route) + "\n  " + witness_str(w.pair[0]) + "\n  " +
               witness_str(w.pair[1]);
    return out;
  }

  Outcome campaign(const CampaignReport& r) {
    Outcome out;
    out.result = json::parse(r.to_json(true));
    out.violated = !r.passed();
    out.text = std::string(r.passed() ? "pass" : "FAIL") + ": " + std::to_string(r.checks) + " checks, " +
               std::to_string(r.failures.size()) + " failures, " + std::to_string(r.witnesses) +
               " witnesses (" + r.field + ", n=" + std::to_string(r.n) + ", seed " + std::to_string(r.seed) + ")";
    for (const auto& f : r.failures) out.text += "\n  " + f.form + ": " + f.detail;
    return out;
  }

  Outcome sim_check() { return campaign(sim_campaign(field_, need_n(), o_.trials, o_.seed)); }
  Outcome survey() { return campaign(ga_survey(field_, need_n(), o_.trials, o_.seed)); }
  Outcome going_down() { return campaign(going_down_check(field_, need_n(), o_.trials, o_.seed)); }
};

std::optional<std::chrono::milliseconds> budget_from_env() {
  const char* raw = std::getenv("WITTLAB_BUDGET_MS");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  long long ms = std::strtoll(raw, &end, 10);
  if (*end != '\0' || ms < 0) throw ValidationError("WITTLAB_BUDGET_MS must be a nonnegative integer");
  return std::chrono::milliseconds(ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quadratic form computations over iterated Laurent series towers"};
  Options o;
  app.add_option("verb", o.verb,
                 "witt | isotropy | ideal | pfister-number | linkage | divides | ga-classify | "
                 "albert-factor | sim-check | ga-survey | going-up | going-down")
      ->required();
  app.add_option("--field", o.field, "field descriptor, e.g. F3[[t1,t2]]");
  app.add_option("--form", o.forms, "form expression (repeatable)");
  app.add_option("--n", o.n, "ideal power / Pfister fold");
  app.add_option("--m", o.m, "secondary fold");
  app.add_option("--max-k", o.max_k, "Pfister number search bound");
  app.add_option("--trials", o.trials, "campaign trials");
  app.add_option("--seed", o.seed, "campaign seed");
  app.add_option("--threads", o.threads, "worker threads for searches")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "emit one JSON object");
  app.set_config("--config", "", "key = value file; command-line flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    set_search_threads(o.threads);
    set_search_budget(budget_from_env());
    Runner runner(o);
    json in = runner.input();
    Outcome out = runner.run();
    if (o.json) {
      json j;
      j["verb"] = o.verb;
      j["input"] = in;
      j["result"] = out.result;
      if (out.witness) j["witness"] = *out.witness;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << out.text << "\n";
    }
    return out.violated ? 1 : 0;
  } catch (const ResourceError& e) {
    std::cerr << "wittlab: budget exhausted: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "wittlab: engine invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "wittlab: " << e.what() << "\n";
    return 2;
  }
}
