// Command line front end; talks to the library through the C interface only.
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relator_c.h"

namespace {

using nlohmann::json;

struct Context {
  rlt_ctx* p;
  Context() : p(rlt_ctx_new()) {}
  ~Context() { rlt_ctx_free(p); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { rlt_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string last_error(rlt_ctx* ctx) {
  size_t n = rlt_last_error(ctx, nullptr, 0);
  std::string s(n, '\0');
  if (n > 0) rlt_last_error(ctx, s.data(), n + 1);
  return s;
}

int exit_code(rlt_status st, rlt_ctx* ctx, const char* what) {
  switch (st) {
    case RLT_OK:
      return 0;
    case RLT_CHECK_FAILED:
      std::fprintf(stderr, "%s: %s\n", what, last_error(ctx).c_str());
      return 1;
    case RLT_USAGE:
      std::fprintf(stderr, "%s: %s\n", what, last_error(ctx).c_str());
      return 2;
    default:
      std::fprintf(stderr, "%s: internal error: %s\n", what, last_error(ctx).c_str());
      return 1;
  }
}

struct RelatorSpec {
  std::string family;
  std::string word;
  int genus = 0;
  bool genus_set = false;
  int n = 1;

  void add_options(CLI::App* cmd) {
    auto* fam = cmd->add_option("--family", family, "relator family (A B C D GSR_capped torus_elliptic)");
    auto* wrd = cmd->add_option("--word", word, "word text over the standard chain curves");
    fam->excludes(wrd);
    cmd->add_option("--genus", genus, "surface genus")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", n, "exponent multiplier for families")->default_val(1);
  }

  // Returns empty on bad combinations; genus_set must be refreshed first.
  std::string to_json() const {
    json j;
    if (!family.empty()) {
      j["family"] = family;
      if (genus_set) j["genus"] = genus;
      j["n"] = n;
    } else if (!word.empty()) {
      if (!genus_set) return {};
      j["word"] = word;
      j["genus"] = genus;
    } else {
      return {};
    }
    return j.dump();
  }
};

int run_verify_all(int max_genus) {
  struct Job {
    std::string label;
    std::string spec;
  };
  std::vector<Job> jobs;
  for (const char* fam : {"A", "B", "C", "D", "GSR_capped"})
    for (int g = 1; g <= max_genus; ++g) {
      json j;
      j["family"] = fam;
      j["genus"] = g;
      j["n"] = 1;
      jobs.push_back({std::string(fam) + " genus " + std::to_string(g), j.dump()});
    }
  {
    json j;
    j["family"] = "torus_elliptic";
    j["genus"] = 1;
    j["n"] = 1;
    jobs.push_back({"torus_elliptic genus 1", j.dump()});
  }

  // Independent pure checks, one context per task.
  std::vector<std::future<std::pair<rlt_status, std::string>>> futures;
  futures.reserve(jobs.size());
  for (const auto& job : jobs)
    futures.push_back(std::async(std::launch::async, [spec = job.spec]() {
      Context ctx;
      OwnedString out;
      rlt_status st = rlt_verify(ctx.p, spec.c_str(), &out.p);
      std::string msg = st == RLT_OK ? std::string() : last_error(ctx.p);
      return std::make_pair(st, msg);
    }));

  int worst = 0;
  for (size_t i = 0; i < jobs.size(); ++i) {
    auto [st, msg] = futures[i].get();
    if (st == RLT_OK) {
      std::printf("%s: trivial\n", jobs[i].label.c_str());
    } else {
      std::printf("%s: FAILED (%s)\n", jobs[i].label.c_str(), msg.c_str());
      worst = st == RLT_CHECK_FAILED ? std::max(worst, 1) : 2;
    }
  }
  return worst;
}

std::string read_file(const std::string& path, bool* ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *ok = false;
    return {};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  *ok = true;
  return ss.str();
}

int run_reproduce(const std::string& id) {
  Context ctx;
  OwnedString out;
  rlt_status st = rlt_reproduce(ctx.p, id.c_str(), &out.p);
  if (!out.p) return exit_code(st, ctx.p, "reproduce");
  json j = json::parse(out.str());
  for (const auto& line : j.at("log_lines")) std::printf("%s\n", line.get<std::string>().c_str());
  std::fflush(stdout);
  std::fprintf(stderr, "reproduction %s: %s\n", j.at("id").get<std::string>().c_str(),
               j.at("ok").get<bool>() ? "all checks passed" : "CHECKS FAILED");
  for (const auto& c : j.at("checks"))
    std::fprintf(stderr, "  [%s] %s: computed %s, expected %s (%s)\n",
                 c.at("ok").get<bool>() ? "ok" : "MISMATCH",
                 c.at("label").get<std::string>().c_str(),
                 c.at("computed").get<std::string>().c_str(),
                 c.at("expected").get<std::string>().c_str(),
                 c.at("source").get<std::string>().c_str());
  for (const auto& s : j.at("substitutions"))
    std::fprintf(stderr, "  [%s] substitution %s: (de, dsigma) = (%lld, %lld), relation terms (%lld, %lld)\n",
                 s.at("ok").get<bool>() ? "ok" : "MISMATCH",
                 s.at("relation").get<std::string>().c_str(),
                 static_cast<long long>(s.at("observed").at("de").get<long long>()),
                 static_cast<long long>(s.at("observed").at("dsigma").get<long long>()),
                 static_cast<long long>(s.at("relation_terms").at("de").get<long long>()),
                 static_cast<long long>(s.at("relation_terms").at("dsigma").get<long long>()));
  for (const auto& m : j.at("mismatches"))
    std::fprintf(stderr, "  mismatch: %s\n", m.get<std::string>().c_str());
  return exit_code(st, ctx.p, "reproduce");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive relator toolkit: verification, invariants, logged rewrites"};
  app.require_subcommand(1);

  char version[32];
  rlt_version(version, sizeof version);
  app.set_version_flag("--version", std::string(version));

  RelatorSpec verify_spec;
  bool verify_all = false;
  int max_genus = 5;
  CLI::App* verify = app.add_subcommand("verify", "check that a relator acts trivially on homology");
  verify_spec.add_options(verify);
  verify->add_flag("--all", verify_all, "check every family over a genus range");
  verify->add_option("--max-genus", max_genus, "genus range bound for --all")->default_val(5);

  RelatorSpec inv_spec;
  bool blowdown = false;
  CLI::App* invariants = app.add_subcommand("invariants", "fiber counts and e, sigma, c1^2, chi");
  inv_spec.add_options(invariants);
  invariants->add_flag("--blowdown", blowdown, "remove nullhomotopic cycles as (-1)-spheres");

  RelatorSpec rw_spec;
  std::string script_path;
  CLI::App* rewrite = app.add_subcommand("rewrite", "replay a rewrite script, emitting the hashed log");
  rw_spec.add_options(rewrite);
  rewrite->add_option("--script", script_path, "script file: JSON array of operations, or a previous log")
      ->required();

  std::string repro_id;
  CLI::App* reproduce = app.add_subcommand("reproduce", "run a shipped derivation and check its expected values");
  reproduce->add_option("id", repro_id, "derivation id: 5.1 5.2 5.3 5.4 5.5p 5.5 5.6")->required();

  CLI::App* library = app.add_subcommand("library", "print the stored relation set as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  verify_spec.genus_set = verify->count("--genus") > 0;
  inv_spec.genus_set = invariants->count("--genus") > 0;
  rw_spec.genus_set = rewrite->count("--genus") > 0;

  if (*verify) {
    if (verify_all) return run_verify_all(max_genus);
    std::string spec = verify_spec.to_json();
    if (spec.empty()) {
      std::fprintf(stderr, "verify: needs --family or --word (words also need --genus)\n");
      return 2;
    }
    Context ctx;
    OwnedString out;
    rlt_status st = rlt_verify(ctx.p, spec.c_str(), &out.p);
    if (out.p) std::fputs(out.p, stdout);
    return exit_code(st, ctx.p, "verify");
  }

  if (*invariants) {
    std::string spec = inv_spec.to_json();
    if (spec.empty()) {
      std::fprintf(stderr, "invariants: needs --family or --word (words also need --genus)\n");
      return 2;
    }
    Context ctx;
    OwnedString out;
    rlt_status st = rlt_invariants(ctx.p, spec.c_str(), blowdown ? 1 : 0, &out.p);
    if (out.p) std::fputs(out.p, stdout);
    return exit_code(st, ctx.p, "invariants");
  }

  if (*rewrite) {
    std::string spec = rw_spec.to_json();
    if (spec.empty()) {
      std::fprintf(stderr, "rewrite: needs --family or --word (words also need --genus)\n");
      return 2;
    }
    bool ok = false;
    std::string script = read_file(script_path, &ok);
    if (!ok) {
      std::fprintf(stderr, "rewrite: cannot read script file %s\n", script_path.c_str());
      return 2;
    }
    Context ctx;
    OwnedString out;
    rlt_status st = rlt_rewrite(ctx.p, spec.c_str(), script.c_str(), &out.p);
    if (out.p) std::fputs(out.p, stdout);
    return exit_code(st, ctx.p, "rewrite");
  }

  if (*reproduce) return run_reproduce(repro_id);

  if (*library) {
    Context ctx;
    OwnedString out;
    rlt_status st = rlt_library(ctx.p, &out.p);
    if (out.p) std::fputs(out.p, stdout);
    return exit_code(st, ctx.p, "library");
  }

  return 2;
}
