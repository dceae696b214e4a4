// covem: scenario evaluation and property verification from the command line.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 config or usage error.

#include "covem/commands.hpp"
#include "covem/verify.hpp"

#include "CLI11.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitConfigError = 2;

struct Options {
  std::string config;
  std::string format = "json";
  std::string out;
  std::string tensors = "abraham,minkowski_sym,comoving";
  std::string beta;
  std::string suite = "all";
  std::uint64_t seed = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

bool use_color(const Options& o) {
  return o.out.empty() && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

void emit(const std::string& text, const Options& o) {
  if (o.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  file << text;
}

int report_error(const std::string& command, const std::string& path,
                 const std::string& message, const Options& o) {
  std::cerr << "covem " << command << ": "
            << (path.empty() ? "" : path + ": ") << message << "\n";
  if (o.format == "json") {
    covem::Json err = {{"schema", covem::kReportSchema},
                       {"command", command},
                       {"error", {{"path", path}, {"message", message}}},
                       {"summary", {{"status", "error"}}}};
    try {
      emit(err.dump(2) + "\n", o);
    } catch (const std::exception&) {
    }
  }
  return kExitConfigError;
}

int run(const std::string& command, const Options& o,
        const std::function<covem::Report()>& body) {
  covem::OutputFormat format;
  try {
    format = covem::parse_output_format(o.format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "covem " << command << ": " << e.what() << "\n";
    return kExitConfigError;
  }
  covem::Report report;
  try {
    report = body();
  } catch (const covem::ConfigError& e) {
    return report_error(command, e.path(), e.message(), o);
  } catch (const std::invalid_argument& e) {
    return report_error(command, "", e.what(), o);
  } catch (const std::exception& e) {
    return report_error(command, "", e.what(), o);
  }
  std::string text;
  switch (format) {
    case covem::OutputFormat::json: text = covem::render_json(report); break;
    case covem::OutputFormat::csv: text = covem::render_csv(report); break;
    case covem::OutputFormat::table: text = covem::render_table(report, use_color(o)); break;
  }
  try {
    emit(text, o);
  } catch (const std::exception& e) {
    std::cerr << "covem " << command << ": " << e.what() << "\n";
    return kExitConfigError;
  }
  return report.ok() ? 0 : kExitChecksFailed;
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariant electromagnetic fields in media: scenarios and checks"};
  app.require_subcommand(1);
  Options o;

  auto* decompose = app.add_subcommand("decompose", "e, b, d, h for each observer");
  decompose->add_option("--config", o.config, "scenario file (YAML or .json)")->required();
  add_output_options(decompose, o);

  auto* stress = app.add_subcommand("stress", "stress-energy tensors and the Abraham-Minkowski gap");
  stress->add_option("--config", o.config, "scenario file (YAML or .json)")->required();
  stress->add_option("--tensors", o.tensors,
                     "comma list of abraham, minkowski_sym, comoving, oracle_v_tethered, "
                     "oracle_metric_independent")
      ->capture_default_str();
  add_output_options(stress, o);

  auto* boost = app.add_subcommand("boost-zeta", "effective constitutive blocks of boosted observers");
  boost->add_option("--config", o.config, "scenario file (YAML or .json)")->required();
  boost->add_option("--beta", o.beta, "comma list or start:stop:step")->required();
  add_output_options(boost, o);

  auto* verify = app.add_subcommand("verify", "seeded property suites");
  verify->add_option("suite", o.suite,
                     "hodge, fields, constitutive, stress, oracle, maxwell or all")
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  add_output_options(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  if (decompose->parsed()) {
    return run("decompose", o, [&] { return covem::cmd_decompose(covem::load_config(o.config)); });
  }
  if (stress->parsed()) {
    return run("stress", o, [&] {
      return covem::cmd_stress(covem::load_config(o.config), split_list(o.tensors));
    });
  }
  if (boost->parsed()) {
    return run("boost-zeta", o, [&] {
      const auto betas = covem::parse_beta_list(o.beta);
      return covem::cmd_boost_zeta(covem::load_config(o.config), betas);
    });
  }
  return run("verify", o, [&] { return covem::cmd_verify(o.suite, o.seed); });
}
