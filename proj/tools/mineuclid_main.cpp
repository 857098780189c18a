#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "mineuclid/bset.hpp"
#include "mineuclid/euclid.hpp"
#include "mineuclid/motzkin.hpp"
#include "mineuclid/render.hpp"
#include "mineuclid/wseq.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;
constexpr int kDefaultVerifyBudget = 8;

using mineuclid::GaussInt;

GaussInt parse_or_exit(const std::string& text) {
  auto z = mineuclid::parse_gauss(text);
  if (!z) {
    std::fprintf(stderr, "error: invalid Gaussian integer literal '%s'\n", text.c_str());
    std::exit(kExitParse);
  }
  return *z;
}

int verify_budget() {
  const char* env = std::getenv("MINEUCLID_BUDGET");
  if (!env || !*env) return kDefaultVerifyBudget;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) {
    std::fprintf(stderr, "warning: ignoring malformed MINEUCLID_BUDGET '%s'\n", env);
    return kDefaultVerifyBudget;
  }
  return static_cast<int>(v);
}

int write_output(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    if (std::fwrite(bytes.data(), 1, bytes.size(), stdout) != bytes.size()) {
      std::fprintf(stderr, "error: write failed\n");
      return kExitIo;
    }
    return kExitOk;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", path.c_str());
    return kExitIo;
  }
  bool ok = std::fwrite(bytes.data(), 1, bytes.size(), f) == bytes.size();
  ok = (std::fclose(f) == 0) && ok;
  if (!ok) {
    std::fprintf(stderr, "error: write to '%s' failed\n", path.c_str());
    return kExitIo;
  }
  return kExitOk;
}

int run_phi(const std::string& zs) {
  GaussInt z = parse_or_exit(zs);
  int p = mineuclid::phi(z);  // throws for 0
  auto exp = mineuclid::expand_min(z, p);
  if (!exp) throw mineuclid::invariant_violation("phi: no expansion of the predicted length");
  std::printf("phi=%d; expansion=%s\n", p, mineuclid::to_string(*exp).c_str());
  return kExitOk;
}

int run_member(int n, const std::string& zs) {
  GaussInt z = parse_or_exit(zs);
  std::printf("%s\n", mineuclid::b_member(n, z) ? "true" : "false");
  return kExitOk;
}

int run_expand(const std::string& zs, int cap) {
  GaussInt z = parse_or_exit(zs);
  auto exp = mineuclid::expand_min(z, cap);
  std::printf("%s\n", exp ? mineuclid::to_string(*exp).c_str() : "none");
  return kExitOk;
}

int run_div(const std::string& as, const std::string& bs, const std::string& strat) {
  GaussInt a = parse_or_exit(as);
  GaussInt b = parse_or_exit(bs);
  if (strat == "min-phi") {
    mineuclid::DivResult d = mineuclid::div_min(a, b);
    std::printf("q=%s r=%s\n", mineuclid::to_string(d.q).c_str(),
                mineuclid::to_string(d.r).c_str());
    if (mineuclid::is_zero(d.r))
      std::printf("phi(b)=%d r=0\n", mineuclid::phi(b));
    else
      std::printf("phi(b)=%d phi(r)=%d\n", mineuclid::phi(b), mineuclid::phi(d.r));
  } else {
    mineuclid::DivResult d = mineuclid::div_norm(a, b);
    std::printf("q=%s r=%s\n", mineuclid::to_string(d.q).c_str(),
                mineuclid::to_string(d.r).c_str());
    if (mineuclid::is_zero(d.r))
      std::printf("N(b)=%llu r=0\n", static_cast<unsigned long long>(mineuclid::norm(b)));
    else
      std::printf("N(b)=%llu N(r)=%llu\n", static_cast<unsigned long long>(mineuclid::norm(b)),
                  static_cast<unsigned long long>(mineuclid::norm(d.r)));
  }
  return kExitOk;
}

int run_gcd(const std::string& as, const std::string& bs, const std::string& strat) {
  GaussInt a = parse_or_exit(as);
  GaussInt b = parse_or_exit(bs);
  mineuclid::Strategy s =
      strat == "min-phi" ? mineuclid::Strategy::min_phi : mineuclid::Strategy::norm;
  mineuclid::RemainderTableCache cache;
  mineuclid::ChainReport report = mineuclid::gcd_chain(a, b, s, &cache);
  std::printf("gcd=%s steps=%zu\n", mineuclid::to_string(report.gcd).c_str(),
              report.steps.size());
  for (std::size_t k = 0; k < report.steps.size(); ++k)
    std::printf("step %zu: q=%s r=%s\n", k + 1, mineuclid::to_string(report.steps[k].q).c_str(),
                mineuclid::to_string(report.steps[k].r).c_str());
  return kExitOk;
}

int run_bset(int n) {
  for (GaussInt z : mineuclid::enumerate_b(n))
    std::printf("%s\n", mineuclid::to_string(z).c_str());
  return kExitOk;
}

int run_verify(int nmax) {
  int budget = verify_budget();
  if (nmax > budget) {
    std::fprintf(stderr, "error: verify level %d exceeds budget %d (set MINEUCLID_BUDGET)\n",
                 nmax, budget);
    return kExitBudget;
  }
  auto levels = mineuclid::levels_up_to(nmax);
  bool all_ok = true;
  std::string line;
  for (const auto& level : levels) {
    auto expected = mineuclid::enumerate_b(level.n);
    bool ok = level.elements == expected;  // both sorted
    all_ok = all_ok && ok;
    char part[96];
    std::snprintf(part, sizeof part, "%sn=%d: %zu=%zu %s", level.n ? "; " : "", level.n,
                  level.elements.size(), expected.size(), ok ? "PASS" : "FAIL");
    line += part;
  }
  std::printf("%s\n", line.c_str());
  return all_ok ? kExitOk : kExitDomain;
}

int run_export(int n, const std::string& format, const std::string& path,
               const mineuclid::RenderSpec& spec) {
  auto points = mineuclid::enumerate_b(n);
  std::string bytes;
  if (format == "csv")
    bytes = mineuclid::render_csv(points);
  else if (format == "json")
    bytes = mineuclid::render_json(points);
  else
    bytes = mineuclid::render_svg(n, points, spec);
  return write_output(path, bytes);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal Euclidean function on the Gaussian integers"};
  app.set_version_flag("--version", "mineuclid 0.1.0");
  app.require_subcommand(1);

  std::string z_text, a_text, b_text, format, path;
  std::string strategy = "min-phi";
  int n = 0, cap = 64;
  mineuclid::RenderSpec spec;
  std::string style = "square";

  auto* phi_cmd = app.add_subcommand("phi", "phi(z) and a minimal digit expansion");
  phi_cmd->add_option("z", z_text, "Gaussian integer, e.g. 4+1i")->required();

  auto* member_cmd = app.add_subcommand("member", "is z expressible with n+1 digits");
  member_cmd->add_option("n", n, "level")->required()->check(CLI::NonNegativeNumber);
  member_cmd->add_option("z", z_text, "Gaussian integer")->required();

  auto* expand_cmd = app.add_subcommand("expand", "shortest base-(1+i) expansion");
  expand_cmd->add_option("z", z_text, "Gaussian integer")->required();
  expand_cmd->add_option("--cap", cap, "maximum digits minus one")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  auto* div_cmd = app.add_subcommand("div", "division with remainder");
  div_cmd->add_option("a", a_text, "dividend")->required();
  div_cmd->add_option("b", b_text, "divisor")->required();
  div_cmd->add_option("--strategy", strategy, "remainder rule")->capture_default_str()
      ->check(CLI::IsMember({"min-phi", "norm"}));

  auto* gcd_cmd = app.add_subcommand("gcd", "Euclidean algorithm trace");
  gcd_cmd->add_option("a", a_text, "first argument")->required();
  gcd_cmd->add_option("b", b_text, "second argument")->required();
  gcd_cmd->add_option("--strategy", strategy, "remainder rule")->capture_default_str()
      ->check(CLI::IsMember({"min-phi", "norm"}));

  auto* bset_cmd = app.add_subcommand("bset", "enumerate all z with phi(z) <= n");
  bset_cmd->add_option("n", n, "level")->required()->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand(
      "verify", "rebuild levels 0..nmax from residue coverage and compare");
  verify_cmd->add_option("nmax", n, "highest level")->required()->check(CLI::NonNegativeNumber);

  auto* export_cmd = app.add_subcommand("export", "write the level-n point set");
  export_cmd->add_option("n", n, "level")->required()->check(CLI::NonNegativeNumber);
  export_cmd->add_option("format", format, "csv, json or svg")
      ->required()
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  export_cmd->add_option("path", path, "output file, or - for stdout")->required();
  export_cmd->add_option("--scale", spec.scale, "pixels per lattice unit (svg)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  export_cmd->add_option("--style", style, "glyph shape (svg)")->capture_default_str()
      ->check(CLI::IsMember({"square", "disc"}));
  export_cmd->add_flag("--outline", spec.outline, "draw the octagonal hull (svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*phi_cmd) return run_phi(z_text);
    if (*member_cmd) return run_member(n, z_text);
    if (*expand_cmd) return run_expand(z_text, cap);
    if (*div_cmd) return run_div(a_text, b_text, strategy);
    if (*gcd_cmd) return run_gcd(a_text, b_text, strategy);
    if (*bset_cmd) return run_bset(n);
    if (*verify_cmd) return run_verify(n);
    if (*export_cmd) {
      spec.style = style == "disc" ? mineuclid::RenderSpec::Style::disc
                                   : mineuclid::RenderSpec::Style::square;
      return run_export(n, format, path, spec);
    }
  } catch (const std::bad_alloc&) {
    std::fprintf(stderr, "error: out of memory\n");
    return kExitDomain;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
  return kExitParse;
}
