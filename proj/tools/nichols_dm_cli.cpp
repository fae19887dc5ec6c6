// nichols-dm: command-line front end over the C API. Prints one JSON document on stdout.
// Exit codes: 0 success, 1 failed check or internal error, 2 invalid input.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "nichols_dm/nichols_dm.h"

namespace {

constexpr const char* kSyntax = R"TXT(Syntax:
  pairs     (i,k)+(i,k)          e.g. "(1,6)+(5,6)"
  ells      l+l                  e.g. "1+3"
  modules   I:<pairs>  L:<ells>  K:<pairs>|<ells>  irr:CLASS/REP[+CLASS/REP]
            classes e, r1.., s, sr; reps chi1..chi4, rho1.., k0..k{m-1}, ee es se ss
  families  a  single (i,k), k != n (no parameters)
            b  L only (no parameters)
            c  A_I with lambda, gamma
            d  B_{I,L} with lambda, gamma, theta, mu
  scalars   elements of Q(w), w = exp(2 pi i/m): "1", "-3/2", "w^2 + 1", "1/2*w^3"
  slots     lambda[a,b], gamma[a,b], theta[a,c], mu[a,c] (a, b slots of I; c slot of L))TXT";

int exit_code(ndm_status s) {
  switch (s) {
    case NDM_OK: return 0;
    case NDM_ERR_DOMAIN:
    case NDM_ERR_ARG: return 2;
    default: return 1;
  }
}

void print_error(const std::string& kind, const std::string& message) {
  nlohmann::json e = {{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}};
  std::cout << e.dump() << "\n";
}

/// Prints the result (if any) or the context error and maps the status to an exit code.
int finish(ndm_context* ctx, ndm_status s, ndm_result* r) {
  if (r) std::cout << ndm_result_json(r) << "\n";
  else if (s != NDM_OK) std::cout << ndm_context_last_error(ctx) << "\n";
  if (r && s != NDM_OK) std::cerr << ndm_context_last_error(ctx) << "\n";
  ndm_result_destroy(r);
  return exit_code(s);
}

struct LiftingArgs {
  std::string family = "c";
  std::string I, L;
  std::string lambda, gamma, theta, mu;
  std::vector<std::string> params;
};

void add_lifting_options(CLI::App* cmd, LiftingArgs& a) {
  cmd->add_option("--family", a.family, "a, b, c or d")->check(CLI::IsMember({"a", "b", "c", "d"}));
  cmd->add_option("--I", a.I, "pairs, e.g. \"(1,6)+(5,6)\"");
  cmd->add_option("--L", a.L, "odd ells, e.g. \"1+3\"");
  cmd->add_option("--lambda", a.lambda, "value for every free lambda entry");
  cmd->add_option("--gamma", a.gamma, "value for every free gamma entry");
  cmd->add_option("--theta", a.theta, "value for every free theta entry");
  cmd->add_option("--mu", a.mu, "value for every free mu entry");
  cmd->add_option("--param", a.params, "single entry, e.g. \"lambda[0,1]=w^2\" (repeatable)");
}

ndm_status make_lifting(ndm_context* ctx, int m, const LiftingArgs& a, ndm_lifting** out) {
  ndm_status s = ndm_lifting_create(ctx, m, a.family[0], a.I.c_str(), a.L.c_str(), out);
  if (s != NDM_OK) return s;
  const std::pair<const char*, const std::string*> all[] = {
      {"lambda", &a.lambda}, {"gamma", &a.gamma}, {"theta", &a.theta}, {"mu", &a.mu}};
  for (const auto& [kind, v] : all)
    if (!v->empty() && (s = ndm_lifting_set_all(*out, kind, v->c_str())) != NDM_OK) return s;
  for (const auto& p : a.params) {
    const auto eq = p.find('=');
    const std::string slot = p.substr(0, eq), value = p.substr(eq + 1);
    if ((s = ndm_lifting_set(*out, slot.c_str(), value.c_str())) != NDM_OK) return s;
  }
  return NDM_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nichols algebras and pointed Hopf algebras over D_m, m = 4t >= 12"};
  app.footer(kSyntax);
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  app.add_option("--threads", threads, "worker threads")->envname("NICHOLS_DM_THREADS")->check(CLI::PositiveNumber);

  int m = 0;
  int max_size = 2;
  bool set_only = false, rescale = false;
  std::string module, class_label, grid;
  LiftingArgs lift;

  auto* classify = app.add_subcommand("classify", "families, dimensions and irreducible verdicts");
  classify->add_option("--m", m, "m = 4t, t >= 3")->required();
  classify->add_option("--max-size", max_size, "bound on |I|, |L|, |I|+|L|");
  classify->add_flag("--set-only", set_only, "distinct members only");

  auto* nichols = app.add_subcommand("nichols", "Finite/Infinite decision with certificate");
  nichols->add_option("--m", m, "m = 4t, t >= 3")->required();
  nichols->add_option("--module", module, "module string, see below")->required();

  auto* liftings = app.add_subcommand("liftings", "presentation of a lifting");
  liftings->add_option("--m", m, "m = 4t, t >= 3")->required();
  add_lifting_options(liftings, lift);

  auto* verify = app.add_subcommand("verify", "rewriting dimension and Hopf checks of a lifting");
  verify->add_option("--m", m, "m = 4t, t >= 3")->required();
  add_lifting_options(verify, lift);

  auto* iso = app.add_subcommand("iso", "isomorphism classes over a parameter grid");
  iso->add_option("--m", m, "m = 4t, t >= 3")->required();
  iso->add_option("--max-size", max_size, "bound on |I|+|L|");
  iso->add_option("--grid", grid, "comma separated values, default \"0,1\"");
  iso->add_flag("--rescale", rescale, "also identify data related by generator rescaling");

  auto* rack = app.add_subcommand("rack", "type D verdict for a conjugacy class");
  rack->add_option("--m", m, "m >= 3")->required();
  rack->add_option("--class", class_label, "e, r1.., s, sr")->required();

  auto* reps = app.add_subcommand("reps", "irreducible representations and characters");
  reps->add_option("--m", m, "m >= 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }
  for (const auto& p : lift.params)
    if (p.find('=') == std::string::npos) {
      print_error("usage", "--param expects slot=value, got '" + p + "'");
      return 2;
    }

  ndm_context* ctx = nullptr;
  if (ndm_context_create(&ctx) != NDM_OK) return 1;
  ndm_context_set_threads(ctx, threads);
  ndm_result* r = nullptr;
  ndm_status s = NDM_OK;

  if (*classify) {
    s = ndm_classify_report(ctx, m, max_size, set_only ? 1 : 0, &r);
  } else if (*nichols) {
    s = ndm_nichols(ctx, m, module.c_str(), &r);
  } else if (*liftings || *verify) {
    ndm_lifting* l = nullptr;
    s = make_lifting(ctx, m, lift, &l);
    if (s == NDM_OK) s = *verify ? ndm_lifting_verify(l, &r) : ndm_lifting_presentation(l, &r);
    ndm_lifting_destroy(l);
  } else if (*iso) {
    s = ndm_iso_report(ctx, m, max_size, grid.c_str(), rescale ? 1 : 0, &r);
  } else if (*rack) {
    s = ndm_rack_report(ctx, m, class_label.c_str(), &r);
  } else if (*reps) {
    s = ndm_reps_report(ctx, m, &r);
  }
  const int code = finish(ctx, s, r);
  ndm_context_destroy(ctx);
  return code;
}
