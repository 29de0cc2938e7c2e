#include "latkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "latkit/counting.hpp"
#include "latkit/errors.hpp"
#include "latkit/generators.hpp"
#include "latkit/io.hpp"
#include "latkit/pruning.hpp"
#include "latkit/render.hpp"
#include "latkit/verify.hpp"

namespace latkit {

namespace {

std::size_t ideal_cap() {
  if (const char* env = std::getenv("LATKIT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error(std::string("LATKIT_CAP must be a positive integer, got '") + env + "'");
    return static_cast<std::size_t>(v);
  }
  return kDefaultIdealCap;
}

// Verifies many posets; prints failing reports in full and one summary line.
int verify_many(const std::string& label, const std::vector<Poset>& posets, std::size_t cap,
                std::ostream& out) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < posets.size(); ++i) {
    const auto rep = verify_poset(posets[i], cap);
    if (rep.passed()) continue;
    ++failures;
    out << "instance " << i << " FAIL\n" << serialize(posets[i]) << rep.format();
  }
  out << label << ": lattices=" << posets.size() << " failures=" << failures << ' '
      << (failures ? "FAIL" : "PASS") << '\n';
  return failures ? kExitCheckFailed : kExitOk;
}

int cmd_verify(const std::string& file, const std::string& gen, std::ostream& out) {
  const std::size_t cap = ideal_cap();
  if (!gen.empty()) {
    const GenSpec spec = parse_gen_spec(gen);
    if (spec.kind == GenSpec::Kind::enumerate) return verify_many(to_string(spec), generate(spec), cap, out);
    const Lattice l = downset_lattice(generate(spec).front(), cap);
    const auto rep = verify_lattice(l);
    out << rep.format() << "verdict: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
    return rep.passed() ? kExitOk : kExitCheckFailed;
  }
  const Lattice l = load_lattice(file, cap);
  const auto rep = verify_lattice(l);
  out << rep.format() << "verdict: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_stats(const std::string& file, std::ostream& out) {
  const Lattice l = load_lattice(file, ideal_cap());
  out << format_profile(count_profile(l));
  return kExitOk;
}

int cmd_prune(const std::string& file, std::size_t alpha, std::ostream& out) {
  const Lattice l = load_lattice(file, ideal_cap());
  const auto r = decomposition_report(l, alpha);
  out << format_report(r);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_fuzz(const FuzzOptions& opts, std::ostream& out) {
  const auto result = run_fuzz(opts);
  for (const auto& f : result.failures) {
    out << "instance " << f.index << " gen=" << to_string(f.spec) << " FAIL\n";
    out << f.report.format();
    out << "shrunk witness:\n" << serialize(f.shrunk);
  }
  out << "fuzz: instances=" << result.instances << " seed=" << opts.seed
      << " failures=" << result.failures.size() << ' ' << (result.failures.empty() ? "PASS" : "FAIL")
      << '\n';
  return result.failures.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_render(const std::string& file, const std::string& format, const std::string& annotate,
               std::ostream& out) {
  RenderSpec spec;
  spec.format = format == "tikz" ? RenderSpec::Format::tikz : RenderSpec::Format::dot;
  spec.annotate = annotate == "s"      ? RenderSpec::Annotate::s
                  : annotate == "l"    ? RenderSpec::Annotate::l
                  : annotate == "none" ? RenderSpec::Annotate::none
                                       : RenderSpec::Annotate::both;
  out << render(load_lattice(file, ideal_cap()), spec);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite distributive lattice toolkit", "latkit"};
  app.require_subcommand(1);

  std::string file, gen, format = "dot", annotate = "both";
  std::size_t alpha = 0, points = 0;
  FuzzOptions fuzz;
  double fuzz_p = -1.0;

  auto* verify = app.add_subcommand("verify", "Run the full check battery on a lattice or poset");
  verify->add_option("file", file, "Lattice or poset file");
  verify->add_option("--gen", gen, "Generator spec, e.g. chain:5, random:8:0.4:42, enumerate:4");

  auto* stats = app.add_subcommand("stats", "Print the counting profile");
  stats->add_option("file", file, "Lattice or poset file")->required();

  auto* prune = app.add_subcommand("prune", "Print the decomposition report for one element");
  prune->add_option("file", file, "Lattice or poset file")->required();
  prune->add_option("--alpha", alpha, "Maximal join-irreducible element index")->required();

  auto* fz = app.add_subcommand("fuzz", "Verify seeded random posets");
  fz->add_option("--count", fuzz.count, "Number of instances")->capture_default_str();
  fz->add_option("--size", fuzz.max_size, "Maximum point count")->capture_default_str()->check(
      CLI::Range(std::size_t{1}, kMaxPoints));
  fz->add_option("--p", fuzz_p, "Edge probability (default: cycle 0.2, 0.4, 0.6)")
      ->check(CLI::Range(0.0, 1.0));
  fz->add_option("--seed", fuzz.seed, "Master seed")->capture_default_str();
  fz->add_option("--jobs", fuzz.jobs, "Worker threads")->capture_default_str()->check(
      CLI::PositiveNumber);

  auto* en = app.add_subcommand("enumerate", "Verify every labeled poset on n points");
  en->add_option("--points", points, "Point count (at most 5)")->required();

  auto* rd = app.add_subcommand("render", "Emit a Hasse diagram");
  rd->add_option("file", file, "Lattice or poset file")->required();
  rd->add_option("--format", format, "dot or tikz")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "tikz"}));
  rd->add_option("--annotate", annotate, "s, l, both or none")
      ->capture_default_str()
      ->check(CLI::IsMember({"s", "l", "both", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*verify) {
      if (file.empty() == gen.empty()) {
        err << "error: verify takes exactly one of <file> or --gen\n";
        return kExitInputError;
      }
      return cmd_verify(file, gen, out);
    }
    if (*stats) return cmd_stats(file, out);
    if (*prune) return cmd_prune(file, alpha, out);
    if (*fz) {
      if (fuzz_p >= 0.0) fuzz.p = fuzz_p;
      fuzz.cap = ideal_cap();
      return cmd_fuzz(fuzz, out);
    }
    if (*en) {
      GenSpec spec{GenSpec::Kind::enumerate, {points}, 0.0, 0};
      return verify_many(to_string(spec), generate(spec), ideal_cap(), out);
    }
    if (*rd) return cmd_render(file, format, annotate, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace latkit
