#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freeplate/freeplate.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Options {
  int dim = 2;
  int l = 1;
  int order = 0;
  std::vector<double> z;
  double tau = 1.0;
  double tau_min = 0.1;
  double tau_max = 10.0;
  int steps = 50;
  int modes = 6;
  std::string domain;
  double aspect = 0.0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string output = "-";
  std::string config;
  std::string suite = "domain";
  std::string module;
  bool all = false;
  bool timings = false;
};

int report_error(fp_status s) {
  std::cerr << "error (" << fp_status_name(s) << "): " << fp_last_error_message() << "\n";
  switch (s) {
    case FP_ERR_INVALID_ARGUMENT:
    case FP_ERR_DOMAIN:
    case FP_ERR_PARSE:
      return kUsage;
    default:
      return kFailed;
  }
}

fp_format format_of(const Options& o) { return o.format == "json" ? FP_FORMAT_JSON : FP_FORMAT_CSV; }

int emit_table(fp_status s, fp_table*& t, const Options& o, int row_errors = 0) {
  if (s != FP_OK) return report_error(s);
  fp_status w = fp_table_write(t, o.output.c_str(), format_of(o));
  fp_table_free(t);
  if (w != FP_OK) return report_error(w);
  if (row_errors > 0) {
    std::cerr << row_errors << " grid point(s) failed and were omitted\n";
    return kFailed;
  }
  return kOk;
}

int emit_report(fp_status s, fp_report*& r, const Options& o, bool timings = false) {
  if (s != FP_OK) return report_error(s);
  fp_status w = fp_report_write(r, o.output.c_str(), format_of(o), timings ? 1 : 0);
  int passed = fp_report_passed(r);
  fp_report_free(r);
  if (w != FP_OK) return report_error(w);
  return passed ? kOk : kFailed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string domain_text(const Options& o) {
  std::string text;
  if (o.domain.empty()) {
    text = o.aspect > 0 ? "kind=ellipse" : "kind=ball d=" + std::to_string(o.dim);
  } else if (o.domain.find('=') == std::string::npos) {
    std::ifstream in(o.domain);
    if (!in) {
      // bare kind name such as "square" or "lshape"
      text = "kind=" + o.domain;
    } else {
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
  } else {
    text = o.domain;
  }
  if (o.aspect > 0) text += "\naspect=" + std::to_string(o.aspect);
  return text;
}

int run_iso(const Options& o) {
  fp_report* r = nullptr;
  if (o.suite == "monotonicity") return emit_report(fp_iso_monotonicity_report(o.dim, o.tau, &r), r, o);
  if (o.suite == "polynomial") return emit_report(fp_iso_polynomial_report(&r), r, o);
  if (o.suite == "calculus") return emit_report(fp_iso_calculus_report(o.seed, &r), r, o);
  fp_domain* dom = nullptr;
  std::string text = domain_text(o);
  if (fp_status s = fp_domain_parse(text.c_str(), &dom); s != FP_OK) return report_error(s);
  fp_status s = fp_iso_domain_report(dom, o.tau, o.seed, &r);
  fp_domain_free(dom);
  return emit_report(s, r, o);
}

// Turns --config entries into flags, skipping any flag already given explicitly.
std::vector<std::string> with_config(const std::vector<std::string>& args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::vector<std::string> out = args;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--config", "expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
    if (given) continue;
    out.push_back(flag);
    if (value != "true") out.push_back(value);
  }
  return out;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("-o,--output", o.output, "output path, - for stdout");
  app->add_option("--seed", o.seed, "random seed");
  app->add_option("--config", o.config, "key=value file; explicit flags win");
}

}  // namespace

int run(int argc, char** argv) {
  Options o;
  CLI::App app{"Free-plate fundamental tones: Bessel engine, ball and rod spectra, isoperimetric checks"};
  app.require_subcommand(1);

  auto* bessel = app.add_subcommand("bessel", "ultraspherical Bessel functions");
  bessel->require_subcommand(1);
  auto* b_eval = bessel->add_subcommand("eval", "j_l and i_l (or a derivative) at the given points");
  b_eval->add_option("--dim", o.dim)->check(CLI::Range(2, 1000));
  b_eval->add_option("--l", o.l)->check(CLI::NonNegativeNumber);
  b_eval->add_option("--order", o.order, "derivative order 0..4")->check(CLI::Range(0, 4));
  b_eval->add_option("--z", o.z, "evaluation points")->required()->delimiter(',');
  add_common(b_eval, o);
  auto* b_zero = bessel->add_subcommand("zero", "first positive zero of j_l'");
  b_zero->add_option("--dim", o.dim)->check(CLI::Range(2, 1000));
  b_zero->add_option("--l", o.l)->check(CLI::PositiveNumber);
  add_common(b_zero, o);

  auto* ball = app.add_subcommand("ball", "free plate on the unit ball");
  ball->require_subcommand(1);
  auto* ball_tone = ball->add_subcommand("tone", "fundamental tone, or first tone of order --l");
  ball_tone->add_option("--dim", o.dim)->check(CLI::Range(2, 1000));
  ball_tone->add_option("--tau", o.tau);
  ball_tone->add_option("--l", o.l)->check(CLI::NonNegativeNumber);
  add_common(ball_tone, o);
  auto* ball_curve = ball->add_subcommand("curve", "fundamental tone over a tension grid");
  ball_curve->add_option("--dim", o.dim)->check(CLI::Range(2, 1000));
  ball_curve->add_option("--tau-min", o.tau_min);
  ball_curve->add_option("--tau-max", o.tau_max);
  ball_curve->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
  add_common(ball_curve, o);

  auto* rod = app.add_subcommand("rod", "free rod on [-1, 1]");
  rod->require_subcommand(1);
  auto* rod_modes = rod->add_subcommand("modes", "eigenmodes at one tension");
  rod_modes->add_option("--tau", o.tau);
  rod_modes->add_option("--modes", o.modes)->check(CLI::PositiveNumber);
  add_common(rod_modes, o);
  auto* rod_curve = rod->add_subcommand("curve", "branch curves over a tension grid");
  rod_curve->add_option("--tau-min", o.tau_min);
  rod_curve->add_option("--tau-max", o.tau_max);
  rod_curve->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
  rod_curve->add_option("--modes", o.modes)->check(CLI::PositiveNumber);
  add_common(rod_curve, o);

  auto* iso = app.add_subcommand("iso", "quotient bound and lemma checks");
  iso->add_option("--suite", o.suite, "domain, monotonicity, polynomial or calculus")
      ->check(CLI::IsMember({"domain", "monotonicity", "polynomial", "calculus"}));
  iso->add_option("--domain", o.domain, "key=value text, a file, or a kind name");
  iso->add_option("--aspect", o.aspect)->check(CLI::PositiveNumber);
  iso->add_option("--dim", o.dim)->check(CLI::Range(2, 16));
  iso->add_option("--tau", o.tau);
  add_common(iso, o);

  auto* verify = app.add_subcommand("verify", "run the lemma verification suite");
  auto* all = verify->add_flag("--all", o.all, "every module");
  verify->add_option("--module", o.module, "one module")->excludes(all);
  verify->add_flag("--timings", o.timings, "include runtime_ms");
  add_common(verify, o);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = with_config(args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n\n";
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
    std::cerr << leaf->help();
    return kUsage;
  }

  if (b_eval->parsed()) {
    fp_table* t = nullptr;
    return emit_table(fp_bessel_table(o.dim, o.l, o.order, o.z.data(), o.z.size(), &t), t, o);
  }
  if (b_zero->parsed()) {
    fp_table* t = nullptr;
    return emit_table(fp_bessel_zero_table(o.dim, o.l, &t), t, o);
  }
  if (ball_tone->parsed()) {
    fp_table* t = nullptr;
    return emit_table(fp_ball_tone_table(o.dim, o.l, o.tau, &t), t, o);
  }
  if (ball_curve->parsed()) {
    fp_table* t = nullptr;
    int errors = 0;
    fp_status s = fp_ball_curve(o.dim, o.tau_min, o.tau_max, o.steps, &t, &errors);
    return emit_table(s, t, o, errors);
  }
  if (rod_modes->parsed()) {
    fp_table* t = nullptr;
    return emit_table(fp_rod_modes(o.tau, o.modes, &t), t, o);
  }
  if (rod_curve->parsed()) {
    fp_table* t = nullptr;
    int errors = 0;
    fp_status s = fp_rod_branch_curves(o.tau_min, o.tau_max, o.steps, o.modes, &t, &errors);
    return emit_table(s, t, o, errors);
  }
  if (iso->parsed()) return run_iso(o);
  if (verify->parsed()) {
    fp_report* r = nullptr;
    std::string selection = o.module.empty() ? "all" : o.module;
    return emit_report(fp_verify(selection.c_str(), o.seed, &r), r, o, o.timings);
  }
  return kUsage;
}

int main(int argc, char** argv) { return run(argc, argv); }
