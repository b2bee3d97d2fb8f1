// lgl verify | eggbox | report --instance <file>

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lgl/config.hpp"
#include "lgl/error.hpp"
#include "lgl/output.hpp"
#include "lgl/verify.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Options {
  std::string instance;
  std::string out;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> rank_cap;
};

lgl::InstanceConfig load(const Options& o) {
  auto cfg = lgl::load_config(o.instance);
  if (o.cap) cfg.cap = *o.cap;
  if (o.rank_cap) cfg.rank_cap = *o.rank_cap;
  if (cfg.cap == 0 || cfg.rank_cap == 0) throw lgl::ConfigError("caps must be positive");
  return cfg;
}

void add_common(CLI::App* cmd, Options& o, bool out_required) {
  cmd->add_option("--instance", o.instance, "instance file")->required()->check(CLI::ExistingFile);
  auto* out = cmd->add_option("--out", o.out, "output file");
  if (out_required) out->required();
  cmd->add_option("--cap", o.cap, "enumeration cap (overrides LGL_CAP and the file)");
  cmd->add_option("--rank-cap", o.rank_cap, "largest generating set searched (overrides LGL_RANK_CAP and the file)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroups of linear maps that restrict to automorphisms of a subspace"};
  app.require_subcommand(1);
  Options o;
  auto* verify = app.add_subcommand("verify", "run every theorem check on an instance");
  add_common(verify, o, false);
  auto* eggbox = app.add_subcommand("eggbox", "write the egg-box diagram as DOT");
  add_common(eggbox, o, true);
  auto* report = app.add_subcommand("report", "write structural data as JSON");
  add_common(report, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    const auto cfg = load(o);
    if (verify->parsed()) {
      const auto rep = lgl::cmd_verify(cfg);
      std::cout << rep.text();
      if (!o.out.empty()) lgl::write_file(o.out, rep.to_json().dump(2) + "\n");
      return rep.ok() ? 0 : kExitFailed;
    }
    if (eggbox->parsed()) {
      const lgl::Semigroup s(cfg.instance(), cfg.cap);
      lgl::write_file(o.out, lgl::eggbox_dot(s));
      std::cout << "wrote " << o.out << "\n";
      return 0;
    }
    lgl::write_file(o.out, lgl::structured_report(cfg).dump(2) + "\n");
    std::cout << "wrote " << o.out << "\n";
    return 0;
  } catch (const lgl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
