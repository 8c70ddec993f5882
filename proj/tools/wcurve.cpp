#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "wcurve/errors.hpp"
#include "wcurve/io.hpp"

#ifndef WCURVE_CORPUS_DIR
#define WCURVE_CORPUS_DIR "data/corpus"
#endif

using namespace wcurve;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kUnsupported = 3, kPrecondition = 4, kIdentity = 5 };

GermMap load_germ(const GermFile& file) {
  if (file.kind != GermFile::Kind::GERM) throw PreconditionViolation(file.name + " describes an unfolding, not a germ");
  return make_germ(file.f);
}

int analyze(const std::string& path, std::uint64_t seed, bool with_e_d, bool text) {
  const GermFile file = read_germ_file(path);
  const InvariantReport r = invariant_profile(load_germ(file), seed, with_e_d);
  std::cout << (text ? report_text(file.name, r, seed) : report_json(file.name, r, seed));
  return r.all_passed() ? kOk : kIdentity;
}

int unfold(const std::string& path, int samples, std::uint64_t seed, bool text) {
  const GermFile file = read_germ_file(path);
  if (file.kind != GermFile::Kind::UNFOLDING) throw PreconditionViolation(file.name + " is not an unfolding");
  const VerdictTable t = whitney_verdict(make_family(file.f), samples, seed);
  std::cout << (text ? verdict_text(file.name, t, seed) : verdict_json(file.name, t, seed));
  return t.identity_checks_passed() && t.semicontinuity_violations.empty() ? kOk : kIdentity;
}

int check_fd(const std::string& path, bool json) {
  const GermFile file = read_germ_file(path);
  const GermMap g = load_germ(file);
  const FdVerdict v = is_finitely_determined(g);
  std::cout << (json ? fd_json(file.name, g, v) : fd_text(file.name, g, v));
  return kOk;
}

int corpus(const std::string& dir, const std::string& filter) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".germ") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int failures = 0, run = 0;
  for (const auto& p : files) {
    const std::string name = p.stem().string();
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    ++run;
    try {
      const GermFile file = read_germ_file(p.string());
      if (file.kind == GermFile::Kind::UNFOLDING) {
        const VerdictTable t = whitney_verdict(make_family(file.f), 3, 1);
        const bool ok = t.identity_checks_passed() && t.semicontinuity_violations.empty();
        std::cout << (ok ? "PASS " : "FAIL ") << name << "  verdict " << to_string(t.verdict) << "\n";
        failures += ok ? 0 : 1;
        continue;
      }
      const GermMap g = make_germ(file.f);
      if (g.input_class == GermClass::UNSUPPORTED) {
        std::cout << "SKIP " << name << "  unsupported: " << g.reason << "\n";
        continue;
      }
      const FdVerdict fd = is_finitely_determined(g);
      if (!fd.finitely_determined) {
        std::cout << "PASS " << name << "  not finitely determined, D(f) = V(" << fd.lambda.to_string() << ")\n";
        continue;
      }
      for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const InvariantReport r = invariant_profile(g, seed);
        if (r.d_empty) {
          std::cout << "PASS " << name << " seed " << seed << "  D(f) empty\n";
          continue;
        }
        for (const auto& c : r.checks) {
          if (c.status == CheckStatus::NOT_APPLICABLE) continue;
          const bool ok = c.status == CheckStatus::PASS;
          failures += ok ? 0 : 1;
          std::cout << (ok ? "PASS " : "FAIL ") << name << " seed " << seed << "  " << c.name << "  " << c.lhs << " "
                    << c.relation << " " << c.rhs << "\n";
        }
      }
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << name << "  " << e.what() << "\n";
    }
  }
  std::cout << run << " fixtures, " << failures << " failures\n";
  return failures == 0 ? kOk : kIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double point curves, slice invariants and Whitney equisingularity of map germs (C^2,0) -> (C^3,0)"};
  app.require_subcommand(1);

  std::string file, filter, dir = WCURVE_CORPUS_DIR;
  std::uint64_t seed = 1;
  int samples = 3;
  bool with_e_d = false, as_json = false, as_text = false;

  auto* an = app.add_subcommand("analyze", "invariant report of one germ");
  an->add_option("file", file, "germ file")->required();
  an->add_option("--seed", seed, "seed for the generic plane");
  an->add_flag("--e-d", with_e_d, "also compute e_D");
  auto* an_json = an->add_flag("--json", as_json, "JSON output (default)");
  an->add_flag("--text", as_text, "text output")->excludes(an_json);

  auto* un = app.add_subcommand("unfold", "Whitney equisingularity verdict for an unfolding");
  un->add_option("file", file, "unfolding file")->required();
  un->add_option("--samples", samples, "number of nonzero parameter samples")->check(CLI::PositiveNumber);
  un->add_option("--seed", seed, "seed for samples and planes");
  auto* un_json = un->add_flag("--json", as_json, "JSON output (default)");
  un->add_flag("--text", as_text, "text output")->excludes(un_json);

  auto* co = app.add_subcommand("corpus", "run the bundled fixtures");
  co->add_option("--filter", filter, "only fixtures whose name contains this");
  co->add_option("--dir", dir, "fixture directory");

  auto* fd = app.add_subcommand("check-fd", "finite determinacy test");
  fd->add_option("file", file, "germ file")->required();
  fd->add_flag("--json", as_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (an->parsed()) return analyze(file, seed, with_e_d, as_text);
    if (un->parsed()) return unfold(file, samples, seed, as_text);
    if (co->parsed()) return corpus(dir, filter);
    if (fd->parsed()) return check_fd(file, as_json);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedGerm& e) {
    std::cerr << "unsupported germ: " << e.what() << "\n";
    return kUnsupported;
  } catch (const PreconditionViolation& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const IdentityFailure& e) {
    std::cerr << "identity check failed: " << e.what() << "\n";
    return kIdentity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
