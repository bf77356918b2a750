// sturm: exact computations around Sturmian morphisms and the derivated
// words of their fixed points.  Every command prints JSON by default
// (--text for one-line summaries); exit codes: 0 ok, 2 parse error,
// 3 domain error, 4 extension budget exhausted.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sturm/json_io.hpp>
#include <sturm/sturm.hpp>

namespace {

struct Options {
  bool text = false;
  bool unicode = false;
  std::size_t budget = sturm::kDefaultBudget;
};

sturm::ordered_json envelope() {
  sturm::ordered_json j;
  j["schema"] = "sturm/1";
  return j;
}

void emit(const Options& opt, const sturm::ordered_json& j,
          const std::string& text_line) {
  if (opt.text)
    std::cout << text_line << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

std::optional<char> parse_start(const std::string& start) {
  if (start.empty()) return std::nullopt;
  if (start == "0" || start == "1") return start[0];
  throw sturm::parse_error("--start must be 0 or 1");
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += " ";
    out += s;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Sturmian morphism and derivated-word toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("STURM_BUDGET"))
    opt.budget = std::strtoull(env, nullptr, 10);
  app.add_flag("--text", opt.text, "plain text output instead of JSON");
  app.add_flag("--unicode", opt.unicode, "render Greek letters");
  app.add_option("--budget", opt.budget, "stream extension cap in letters");

  std::string name_arg, other_arg, cf_arg, start_arg;
  std::size_t iterate = 1, max_iter = 0, length = 100, prefix_len = 1;
  std::size_t out_len = 100, max_prefix = 20, sample = 100, max_len = 4;
  std::size_t cf_word = 0;
  bool cf_derset = false, cf_complement = false, upper = false;
  std::string slope_of;

  auto* c_norm = app.add_subcommand("normalize", "normal form of a name");
  c_norm->add_option("name", name_arg)->required();

  auto* c_equal =
      app.add_subcommand("equal", "do two names denote the same morphism");
  c_equal->add_option("left", name_arg)->required();
  c_equal->add_option("right", other_arg)->required();

  auto* c_delta = app.add_subcommand("delta", "rotation operator on names");
  c_delta->add_option("name", name_arg)->required();
  c_delta->add_option("--iterate", iterate, "number of iterations");

  auto* c_orbit = app.add_subcommand("orbit", "eventual cycle of delta");
  c_orbit->add_option("name", name_arg)->required();
  c_orbit->add_option("--max-iter", max_iter, "iteration cap (0 = auto)");

  auto* c_derset =
      app.add_subcommand("derset", "derivated-word certificates");
  c_derset->add_option("name", name_arg)->required();
  c_derset->add_option("--start", start_arg, "fixed point start letter");

  auto* c_fix = app.add_subcommand("fixpoint", "prefix of a fixed point");
  c_fix->add_option("name", name_arg)->required();
  c_fix->add_option("--start", start_arg, "start letter");
  c_fix->add_option("--length", length, "letters to print");

  auto* c_der = app.add_subcommand("derivate", "return-word coding");
  c_der->add_option("name", name_arg)->required();
  c_der->add_option("--start", start_arg, "start letter");
  c_der->add_option("--prefix-len", prefix_len, "prefix length");
  c_der->add_option("--length", out_len, "coding letters to produce");

  auto* c_cf = app.add_subcommand("cf", "continued-fraction computations");
  c_cf->add_option("fraction", cf_arg, "slope like \"[0; 2, (1)]\"");
  c_cf->add_option("--of-name", slope_of,
                   "use the slope of this name's fixed point");
  c_cf->add_option("--word", cf_word, "characteristic word prefix length");
  c_cf->add_flag("--derset", cf_derset, "derivated slopes of c(gamma)");
  c_cf->add_flag("--complement", cf_complement, "use 1 - gamma");
  c_cf->add_flag("--upper", upper, "upper mechanical word for --word");

  auto* c_verify =
      app.add_subcommand("verify", "oracle check of the certificate list");
  c_verify->add_option("name", name_arg)->required();
  c_verify->add_option("--max-prefix", max_prefix, "direction-1 horizon");
  c_verify->add_option("--sample", sample, "coding letters compared");

  auto* c_sweep =
      app.add_subcommand("sweep", "exhaustive small-name invariant sweep");
  c_sweep->add_option("--max-len", max_len, "largest name length");

  try {
    app.parse(argc, argv);

    if (*c_norm) {
      const auto w = sturm::MorphismName::parse(name_arg);
      const auto n = sturm::normalize(w);
      auto j = envelope();
      j["command"] = "normalize";
      j["input"] = w.render(opt.unicode);
      j["output"] = n.render(opt.unicode);
      emit(opt, j, n.render(opt.unicode));
    } else if (*c_equal) {
      const auto w = sturm::MorphismName::parse(name_arg);
      const auto v = sturm::MorphismName::parse(other_arg);
      const bool eq = sturm::names_equal_as_morphisms(w, v);
      auto j = envelope();
      j["command"] = "equal";
      j["left"] = w.render(opt.unicode);
      j["right"] = v.render(opt.unicode);
      j["equal"] = eq;
      emit(opt, j, eq ? "equal" : "different");
    } else if (*c_delta) {
      auto w = sturm::normalize(sturm::MorphismName::parse(name_arg));
      auto j = envelope();
      j["command"] = "delta";
      j["input"] = w.render(opt.unicode);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < iterate; ++i) {
        w = sturm::delta(w);
        names.push_back(w.render(opt.unicode));
      }
      j["iterates"] = names;
      emit(opt, j, join(names));
    } else if (*c_orbit) {
      const auto w = sturm::MorphismName::parse(name_arg);
      const auto orbit = sturm::delta_orbit(w, max_iter);
      auto j = envelope();
      j["command"] = "orbit";
      j.update(sturm::to_json(orbit, opt.unicode));
      emit(opt, j,
           "preperiod " + std::to_string(orbit.preperiod) + " period " +
               std::to_string(orbit.period) + " distinct " +
               std::to_string(orbit.distinct_mod_f.size()));
    } else if (*c_derset) {
      const auto w = sturm::MorphismName::parse(name_arg);
      const auto report = sturm::der_set(w, parse_start(start_arg));
      auto j = envelope();
      j["command"] = "derset";
      j.update(sturm::to_json(report, opt.unicode));
      std::vector<std::string> names;
      for (const auto& c : report.certificates)
        names.push_back(c.render(opt.unicode));
      emit(opt, j, join(names));
    } else if (*c_fix) {
      const auto w = sturm::MorphismName::parse(name_arg);
      const auto starts = sturm::fixed_point_starts(w);
      const auto start = parse_start(start_arg);
      if (starts.empty())
        throw sturm::domain_error("the morphism has no fixed point");
      const char s0 = start.value_or(starts.front());
      auto stream = sturm::fixed_point(w, s0);
      if (length > opt.budget)
        throw sturm::budget_error("requested prefix exceeds the budget");
      const std::string prefix = stream.prefix(length);
      auto j = envelope();
      j["command"] = "fixpoint";
      j["name"] = w.render(opt.unicode);
      j["start"] = s0 - '0';
      j["length"] = length;
      j["prefix"] = prefix;
      emit(opt, j, prefix);
    } else if (*c_der) {
      const auto w = sturm::MorphismName::parse(name_arg);
      const auto starts = sturm::fixed_point_starts(w);
      const auto start = parse_start(start_arg);
      if (starts.empty())
        throw sturm::domain_error("the morphism has no fixed point");
      auto stream = sturm::fixed_point(w, start.value_or(starts.front()));
      auto record = sturm::derivate(stream, prefix_len, out_len, opt.budget);
      auto j = envelope();
      j["command"] = "derivate";
      j["name"] = w.render(opt.unicode);
      j["prefix"] = record.decomposition.prefix;
      j["return_words"] = {record.decomposition.return_words[0],
                           record.decomposition.return_words[1]};
      j["coding"] = record.derivated.prefix(out_len);
      emit(opt, j, record.derivated.prefix(out_len));
    } else if (*c_cf) {
      sturm::ContinuedFraction cf;
      if (!slope_of.empty()) {
        const auto w = sturm::MorphismName::parse(slope_of);
        cf = sturm::to_continued_fraction(sturm::slope_of_fixed_point(w));
      } else if (!cf_arg.empty()) {
        cf = sturm::ContinuedFraction::parse(cf_arg);
      } else {
        throw sturm::parse_error("cf needs a fraction or --of-name");
      }
      if (cf_complement) cf = cf.complement();
      cf = cf.canonical();
      auto j = envelope();
      j["command"] = "cf";
      j["canonical"] = cf.render();
      j["value"] = cf.value().render();
      std::string text = cf.render();
      if (cf_word > 0) {
        if (cf_word > opt.budget)
          throw sturm::budget_error("requested prefix exceeds the budget");
        std::string word;
        if (upper) {
          const auto v = cf.value();
          word = sturm::mechanical_word(v, v, true).prefix(cf_word);
        } else {
          word = sturm::characteristic_word(cf).prefix(cf_word);
        }
        j["word"] = word;
        text = word;
      }
      if (cf_derset) {
        std::vector<std::string> ders;
        for (const auto& d : sturm::cf_der_set(cf)) ders.push_back(d.render());
        j["derset"] = ders;
        text = join(ders);
      }
      emit(opt, j, text);
    } else if (*c_verify) {
      const auto w = sturm::MorphismName::parse(name_arg);
      const auto report =
          sturm::verify_derivated_words(w, max_prefix, sample, opt.budget);
      auto j = envelope();
      j["command"] = "verify";
      j.update(sturm::to_json(report, opt.unicode));
      emit(opt, j,
           std::string(report.passed() ? "pass" : "FAIL") + " (" +
               std::to_string(report.checks.size()) + " checks)");
      return report.passed() ? 0 : 1;
    } else if (*c_sweep) {
      const auto report = sturm::verify_sweep(max_len, opt.budget);
      auto j = envelope();
      j["command"] = "sweep";
      j.update(sturm::to_json(report, opt.unicode));
      emit(opt, j,
           std::string(report.passed() ? "pass" : "FAIL") + " (" +
               std::to_string(report.checks.size()) + " checks)");
      return report.passed() ? 0 : 1;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const sturm::parse_error& e) {
    auto j = envelope();
    j["error"] = {{"type", "parse"}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 2;
  } catch (const sturm::budget_error& e) {
    auto j = envelope();
    j["error"] = {{"type", "budget"}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 4;
  } catch (const sturm::domain_error& e) {
    auto j = envelope();
    j["error"] = {{"type", "domain"}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    auto j = envelope();
    j["error"] = {{"type", "internal"}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 1;
  }
}
