#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wops/cli.hpp"
#include "wops/errors.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  int degree = -1;
  std::string mode;
  std::string out_path;
};

void attach(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "JSON run configuration")
      ->required();
  cmd->add_option("--degree", opts.degree, "override max_degree");
  cmd->add_option("--mode", opts.mode, "override mode (verify|explore)");
  cmd->add_option("--out", opts.out_path, "write the report here (default stdout)");
}

int dispatch(const CommonOpts& opts,
             int (*runner)(const wops::RunConfig&, std::ostream&)) {
  wops::RunConfig cfg = wops::load_config_file(opts.config_path);
  if (opts.degree >= 0) cfg.max_degree = opts.degree;
  if (!opts.mode.empty()) cfg.mode = opts.mode;
  if (cfg.max_degree < 1) throw wops::BadParameter("max_degree must be >= 1");
  if (cfg.mode != "verify" && cfg.mode != "explore")
    throw wops::BadParameter("mode must be \"verify\" or \"explore\"");
  if (opts.out_path.empty()) return runner(cfg, std::cout);
  std::ofstream out(opts.out_path);
  if (!out) throw wops::BadParameter("cannot open output file: " + opts.out_path);
  return runner(cfg, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for weak orthogonal polynomial "
               "systems and matrix Pearson equations"};
  app.require_subcommand(1);

  CommonOpts classify_opts, verify_opts, export_opts;
  std::string export_what;

  CLI::App* classify = app.add_subcommand(
      "classify", "class number, det condition, residual status");
  attach(classify, classify_opts);

  CLI::App* verify = app.add_subcommand(
      "verify", "full identity/band/rank suite up to max_degree");
  attach(verify, verify_opts);

  CLI::App* exp = app.add_subcommand("export", "emit exact objects as JSON");
  attach(exp, export_opts);
  exp->add_option("what", export_what,
                  "moments|wops|recurrence|structure|ddr")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return dispatch(classify_opts, wops::run_classify);
    if (verify->parsed()) return dispatch(verify_opts, wops::run_verify);
    wops::RunConfig cfg = wops::load_config_file(export_opts.config_path);
    if (export_opts.degree >= 0) cfg.max_degree = export_opts.degree;
    if (cfg.max_degree < 1) throw wops::BadParameter("max_degree must be >= 1");
    if (export_opts.out_path.empty())
      return wops::run_export(cfg, export_what, std::cout);
    std::ofstream out(export_opts.out_path);
    if (!out)
      throw wops::BadParameter("cannot open output file: " +
                               export_opts.out_path);
    return wops::run_export(cfg, export_what, out);
  } catch (const wops::BadParameter& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const wops::NotQuasiDefinite& e) {
    std::cerr << "not quasi-definite: " << e.what() << "\n";
    return 1;
  } catch (const wops::WopsError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
}
