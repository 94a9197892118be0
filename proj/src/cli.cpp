#include "braidsym/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidsym/action.hpp"
#include "braidsym/braid.hpp"
#include "braidsym/error.hpp"
#include "braidsym/monoid.hpp"
#include "braidsym/sp4.hpp"
#include "braidsym/symplectic.hpp"

namespace braidsym {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;
constexpr int kRandomBraids = 500;
constexpr int kRandomBraidLength = 40;
constexpr int kFreeOracleLength = 10;

struct Options {
  int genus = 2;
  bool json = false;
  std::size_t length_cap = kDefaultLengthCap;
  int strands = 0;  // 0: 2g+2
  int max_len = 4;
  std::uint64_t seed = kDefaultSeed;
  std::string first;
  std::string second;
  std::string suite;
  std::string kind = "braid";
};

VerificationReport run_suite(const std::string& suite, const Options& opt) {
  const GenusContext ctx(opt.genus);
  VerificationReport report;
  const bool all = suite == "all";
  if (all || suite == "relations") {
    report.merge(verify_u_braid_relations(ctx));
  }
  if (all || suite == "center") {
    report.merge(verify_center_vanishes(ctx));
  }
  if (all || suite == "symplectic") {
    report.merge(verify_symplectic_generators(opt.genus, opt.genus));
    report.merge(verify_random_symplectic_image(ctx, kRandomBraids, kRandomBraidLength, opt.seed));
    report.add_note("random braid words: seed " + std::to_string(opt.seed));
  }
  if (all || suite == "sp4") {
    if (opt.genus != 2) {
      report.add_note("the sp4 suite is specific to genus 2; --genus is ignored for it");
    }
    report.merge(sp4::verify_all());
  }
  if (all || suite == "monoid") {
    report.merge(check_omega_alphabet(ctx));
    report.merge(free_monoid_oracle(kFreeOracleLength));
    if (opt.genus >= 2) {
      report.merge(verify_omega_injectivity(ctx, opt.max_len));
      report.merge(verify_normal_form_roundtrip(ctx, opt.max_len));
      report.merge(verify_normal_form_uniqueness(ctx, opt.max_len));
    } else {
      report.add_note("normal form and section checks need genus >= 2");
    }
  }
  report.sort();
  return report;
}

int cmd_apply(const Options& opt, std::ostream& out) {
  const GenusContext ctx(opt.genus);
  const BraidWord b = parse_braid(opt.first, ctx.strands());
  const FreeWord w = parse_word(opt.second, ctx.rank());
  const FreeWord image = braid_action(b, ctx, opt.length_cap).apply(w, opt.length_cap);
  if (opt.json) {
    out << nlohmann::json{{"braid", format_braid(b)}, {"word", format_word(w)},
                          {"image", format_word(image)}}
               .dump(2)
        << '\n';
  } else {
    out << format_word(image) << '\n';
  }
  return kExitOk;
}

int cmd_matrix(const Options& opt, std::ostream& out) {
  const GenusContext ctx(opt.genus);
  const IntMatrix m = symplectic_image(parse_braid(opt.first, ctx.strands()), ctx);
  out << (opt.json ? to_json(m) + "\n" : format_matrix(m));
  return kExitOk;
}

int cmd_equal(const Options& opt, std::ostream& out) {
  const int n = opt.strands > 0 ? opt.strands : GenusContext(opt.genus).strands();
  const BraidWord lhs = parse_braid(opt.first, n);
  const BraidWord rhs = parse_braid(opt.second, n);
  const bool eq = braids_equal(lhs, rhs, opt.length_cap);
  if (opt.json) {
    out << nlohmann::json{{"strands", n}, {"lhs", format_braid(lhs)}, {"rhs", format_braid(rhs)},
                          {"equal", eq}}
               .dump(2)
        << '\n';
  } else {
    out << (eq ? "equal" : "not equal") << " in B_" << n << '\n';
  }
  return eq ? kExitOk : kExitFalse;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const VerificationReport report = run_suite(opt.suite, opt);
  out << (opt.json ? report.to_json() : report.to_text()) << '\n';
  return report.all_passed() ? kExitOk : kExitFalse;
}

int cmd_parse(const Options& opt, std::ostream& out) {
  const GenusContext ctx(opt.genus);
  std::string canonical;
  std::size_t length = 0;
  if (opt.kind == "word") {
    const FreeWord w = parse_word(opt.first, ctx.rank());
    canonical = format_word(w);
    length = w.size();
  } else if (opt.kind == "braid") {
    const int n = opt.strands > 0 ? opt.strands : ctx.strands();
    const BraidWord b = parse_braid(opt.first, n);
    canonical = format_braid(b);
    length = b.size();
  } else {
    const OmegaWord w = parse_omega(opt.first, opt.genus);
    canonical = format_omega(w);
    length = w.size();
  }
  if (opt.json) {
    out << nlohmann::json{{"kind", opt.kind}, {"canonical", canonical}, {"length", length}}.dump(2)
        << '\n';
  } else {
    out << canonical << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Braid group actions on free groups and their symplectic images", "braidsym"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--genus", opt.genus, "surface genus g (braids on 2g+2 strands)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "emit JSON");
  app.add_option("--length-cap", opt.length_cap, "maximum length of any intermediate word")
      ->check(CLI::PositiveNumber);

  auto* apply = app.add_subcommand("apply", "image of a free-group word under a braid");
  apply->add_option("braid", opt.first, "braid word, e.g. \"1 -3 5\"")->required();
  apply->add_option("word", opt.second, "free-group word, e.g. \"a1 B2\"")->required();

  auto* matrix = app.add_subcommand("matrix", "symplectic matrix of a braid");
  matrix->add_option("braid", opt.first, "braid word")->required();

  auto* equal = app.add_subcommand("equal", "decide equality of two braids");
  equal->add_option("lhs", opt.first, "braid word")->required();
  equal->add_option("rhs", opt.second, "braid word")->required();
  equal->add_option("--strands", opt.strands, "number of strands (default 2g+2)")
      ->check(CLI::Range(2, 1 << 20));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", opt.suite, "relations, center, symplectic, sp4, monoid or all")
      ->required()
      ->check(CLI::IsMember({"relations", "center", "symplectic", "sp4", "monoid", "all"}));
  verify->add_option("--max-len", opt.max_len, "word length bound for exhaustive sweeps")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "seed for random braid words");

  auto* parse = app.add_subcommand("parse", "parse and print in canonical form");
  parse->add_option("text", opt.first, "input text")->required();
  parse->add_option("--as", opt.kind, "word, braid or omega")
      ->check(CLI::IsMember({"word", "braid", "omega"}));
  parse->add_option("--strands", opt.strands, "number of strands for braids (default 2g+2)")
      ->check(CLI::Range(2, 1 << 20));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*apply) return cmd_apply(opt, out);
    if (*matrix) return cmd_matrix(opt, out);
    if (*equal) return cmd_equal(opt, out);
    if (*verify) return cmd_verify(opt, out);
    return cmd_parse(opt, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace braidsym
