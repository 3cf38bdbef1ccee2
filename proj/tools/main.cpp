// chebdyn command-line front end. Links only the C API.
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "chebdyn.h"

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kUsage = 2, kDegenerate = 3, kIo = 4 };

int exit_for(chebdyn_status status) {
  switch (status) {
    case CHEBDYN_OK: return kOk;
    case CHEBDYN_PARSE:
    case CHEBDYN_ZERO_POLYNOMIAL:
    case CHEBDYN_INVALID_ARGUMENT:
    case CHEBDYN_UNKNOWN_CLAIM: return kUsage;
    case CHEBDYN_IO: return kIo;
    default: return kDegenerate;
  }
}

int report(chebdyn_status status) {
  std::fprintf(stderr, "chebdyn: %s: %s\n", chebdyn_status_name(status), chebdyn_last_error());
  return exit_for(status);
}

int usage(const std::string& message) {
  std::fprintf(stderr, "chebdyn: usage: %s\n", message.c_str());
  return kUsage;
}

void print_owned(char* text) {
  std::fputs(text, stdout);
  chebdyn_string_free(text);
}

struct AnalyzeArgs {
  std::optional<int> n;
  std::optional<std::string> p, q;
};

int run_analyze(const AnalyzeArgs& a) {
  if (a.n && (a.p || a.q)) return usage("--n cannot be combined with --p/--q");
  if (!a.n && !a.p) return usage("analyze needs --n or --p");
  chebdyn_map* map = nullptr;
  chebdyn_status st = a.n ? chebdyn_map_create_cn(*a.n, &map)
                          : chebdyn_map_create_literal(a.p->c_str(), a.q ? a.q->c_str() : nullptr, &map);
  if (st != CHEBDYN_OK) return report(st);
  char* json = nullptr;
  st = chebdyn_map_analyze_json(map, &json);
  chebdyn_map_free(map);
  if (st != CHEBDYN_OK) return report(st);
  print_owned(json);
  return kOk;
}

struct RenderArgs {
  int n = 1;
  std::string out;
  std::string center = "0";
  double half_width = 3.0;
  std::string size = "512x512";
  int budget = 5000;
  std::string view = "plane";
};

bool parse_size(const std::string& text, int& w, int& h) {
  const auto x = text.find('x');
  if (x == std::string::npos) return false;
  try {
    std::size_t used = 0;
    w = std::stoi(text.substr(0, x), &used);
    if (used != x) return false;
    h = std::stoi(text.substr(x + 1), &used);
    return used == text.size() - x - 1 && w > 0 && h > 0;
  } catch (const std::exception&) {
    return false;
  }
}

// CHEBDYN_THREADS caps render parallelism; unset or 0 means automatic.
bool thread_cap(unsigned& threads) {
  threads = 0;
  const char* env = std::getenv("CHEBDYN_THREADS");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) return false;
  threads = static_cast<unsigned>(v);
  return true;
}

int run_render(const RenderArgs& a) {
  chebdyn_render_params params;
  chebdyn_render_params_default(&params);
  if (!parse_size(a.size, params.width, params.height)) return usage("--size expects WxH, got '" + a.size + "'");
  if (a.view != "plane" && a.view != "infinity") return usage("--view expects plane or infinity");
  if (!thread_cap(params.threads)) return usage("CHEBDYN_THREADS must be a non-negative integer");
  chebdyn_status st = chebdyn_parse_complex(a.center.c_str(), &params.center_re, &params.center_im);
  if (st != CHEBDYN_OK) return report(st);
  params.half_width = a.half_width;
  params.budget = a.budget;
  params.view_infinity = a.view == "infinity";

  chebdyn_map* map = nullptr;
  if ((st = chebdyn_map_create_cn(a.n, &map)) != CHEBDYN_OK) return report(st);
  chebdyn_grid* grid = nullptr;
  st = chebdyn_render(map, &params, &grid);
  chebdyn_map_free(map);
  if (st != CHEBDYN_OK) return report(st);
  st = chebdyn_grid_write_ppm(grid, a.out.c_str());
  chebdyn_grid_free(grid);
  return st == CHEBDYN_OK ? kOk : report(st);
}

struct VerifyArgs {
  int n_max = 16;
  std::optional<std::string> claim;
};

int run_verify(const VerifyArgs& a) {
  char* json = nullptr;
  int passed = 0;
  const chebdyn_status st = chebdyn_verify_json(a.n_max, a.claim ? a.claim->c_str() : nullptr, &json, &passed);
  if (st != CHEBDYN_OK) return report(st);
  print_owned(json);
  return passed ? kOk : kClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev iteration maps of p(z) e^{q(z)}: analysis, basin rendering and claim checks"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Fixed points, critical points and series at infinity as JSON");
  cmd_analyze->add_option("--n", analyze.n, "Use f = z e^{z^n}");
  cmd_analyze->add_option("--p", analyze.p, "Ascending comma-separated complex coefficients of p");
  cmd_analyze->add_option("--q", analyze.q, "Ascending comma-separated complex coefficients of q");

  RenderArgs render;
  auto* cmd_render = app.add_subcommand("render", "Basin image of C_n as binary PPM");
  cmd_render->add_option("--n", render.n, "Exponent n of z e^{z^n}")->required();
  cmd_render->add_option("--out", render.out, "Output PPM path")->required();
  cmd_render->add_option("--center", render.center, "Window center, e.g. 0.5-1i");
  cmd_render->add_option("--half-width", render.half_width, "Horizontal half-extent of the window");
  cmd_render->add_option("--size", render.size, "Pixel size WxH");
  cmd_render->add_option("--budget", render.budget, "Iteration budget per pixel");
  cmd_render->add_option("--view", render.view, "plane, or infinity to render w = 1/z");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check the quantitative claims and print JSON reports");
  cmd_verify->add_option("--n-max", verify.n_max, "Largest n to check (1..18)");
  cmd_verify->add_option("--claim", verify.claim, "Only this claim id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (cmd_analyze->parsed()) return run_analyze(analyze);
  if (cmd_render->parsed()) return run_render(render);
  return run_verify(verify);
}
