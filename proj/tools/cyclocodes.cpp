// Command-line front end: cyclotomic polynomials, code constructions,
// distance enumeration and the verification sweeps.
//
// Exit status: 0 when no record failed, 1 when at least one did,
// 2 for usage, configuration or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <cyclo/cyclo.hpp>

namespace {

constexpr int kOk = 0;
constexpr int kFailures = 1;
constexpr int kBadInput = 2;

struct CodeArgs {
  std::string family;
  std::uint64_t n = 0;
  std::string field = "2";
  std::string generator;
  std::string descriptor;
  bool dual = false;
};

void add_code_options(CLI::App* cmd, CodeArgs& args) {
  cmd->add_option("--family", args.family, "cn, cn1 or rep")->check(CLI::IsMember({"cn", "cn1", "rep"}));
  cmd->add_option("--n", args.n, "code length");
  cmd->add_option("--field", args.field, "field literal, e.g. 5 or 2^3");
  cmd->add_option("--generator", args.generator, "generator as an ascending coefficient list, e.g. [1,1,1]");
  cmd->add_option("--descriptor", args.descriptor, "JSON code descriptor, or @FILE");
  cmd->add_flag("--dual", args.dual, "use the dual of the selected code");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) cyclo::fail(cyclo::ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cyclo::CyclicCode resolve_code(const CodeArgs& args) {
  using namespace cyclo;
  std::optional<CyclicCode> code;
  if (!args.descriptor.empty()) {
    code = parse_code(args.descriptor.front() == '@' ? read_file(args.descriptor.substr(1)) : args.descriptor);
  } else {
    if (args.n == 0) fail(ErrorKind::InvalidArgument, "--n is required unless --descriptor is given");
    const FieldCtx field = parse_field(args.field);
    if (!args.generator.empty()) {
      code = from_generator(parse_poly(field, args.generator), args.n);
    } else if (args.family == "cn1") {
      code = build_cn1(args.n, field);
    } else if (args.family == "rep") {
      code = build_repetition(args.n, field);
    } else if (args.family == "cn") {
      code = build_cn(args.n, field);
    } else {
      fail(ErrorKind::InvalidArgument, "give --family, --generator or --descriptor");
    }
  }
  return args.dual ? dual(*code) : *code;
}

int write_records(const std::vector<cyclo::VerificationRecord>& records, cyclo::ReportFormat format,
                  const std::string& path) {
  if (path.empty()) {
    std::cout << cyclo::render_report(records, format);
  } else {
    cyclo::emit_report(records, format, path);
  }
  return cyclo::has_failures(records) ? kFailures : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic codes generated by cyclotomic polynomials"};
  app.require_subcommand(1);

  std::uint64_t cyclo_n = 0;
  std::string cyclo_field = "2";
  auto* cyclo_cmd = app.add_subcommand("cyclo", "print Q_n over a field and the arithmetic profile of n");
  cyclo_cmd->add_option("--n", cyclo_n, "index n")->required();
  cyclo_cmd->add_option("--field", cyclo_field, "field literal")->required();

  auto* code_cmd = app.add_subcommand("code", "build and inspect cyclic codes");
  code_cmd->require_subcommand(1);
  CodeArgs code_args;
  std::uint64_t budget = cyclo::kDefaultBudget;
  unsigned threads = 0;
  auto* build_cmd = code_cmd->add_subcommand("build", "print the JSON code descriptor");
  auto* dual_cmd = code_cmd->add_subcommand("dual", "print the descriptor of the dual code");
  auto* mindist_cmd = code_cmd->add_subcommand("mindist", "exhaustive minimum distance");
  auto* weights_cmd = code_cmd->add_subcommand("weights", "weight distribution A_0..A_n");
  auto* zeros_cmd = code_cmd->add_subcommand("zeros", "defining set and nonzeros");
  for (auto* cmd : {build_cmd, dual_cmd, mindist_cmd, weights_cmd, zeros_cmd}) add_code_options(cmd, code_args);
  for (auto* cmd : {mindist_cmd, weights_cmd}) {
    cmd->add_option("--budget", budget, "maximum number of codewords to enumerate");
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  }

  auto* verify_cmd = app.add_subcommand("verify", "machine-check the distance and equivalence theorems");
  verify_cmd->require_subcommand(1);
  std::string config_path;
  auto* sweep_cmd = verify_cmd->add_subcommand("sweep", "run the theorem sweep described by a config file");
  sweep_cmd->add_option("--config", config_path, "JSON sweep config")->required();
  std::size_t n1 = 0, n2 = 0;
  std::string tensor_field = "2";
  auto* tensor_cmd = verify_cmd->add_subcommand("tensor", "check dual(C_{n1 n2}) against the CRT image of the tensor product");
  tensor_cmd->add_option("--n1", n1, "first coprime factor of n")->required();
  tensor_cmd->add_option("--n2", n2, "second coprime factor of n")->required();
  tensor_cmd->add_option("--field", tensor_field, "field literal, e.g. 5 or 2^3")->required();
  tensor_cmd->add_option("--budget", budget, "maximum number of codewords to enumerate");

  auto* conj_cmd = app.add_subcommand("conjecture", "empirical checks of the open dual-distance conjecture");
  conj_cmd->require_subcommand(1);
  auto* run_cmd = conj_cmd->add_subcommand("run", "emit conjecture rows for composite lengths");
  std::string conj_config;
  run_cmd->add_option("--config", conj_config, "JSON sweep config (fields, n range, budget, output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*cyclo_cmd) {
      std::cout << cyclo::cyclotomic_json(cyclo_n, cyclo::parse_field(cyclo_field)) << "\n";
      return kOk;
    }
    if (*code_cmd) {
      const cyclo::CyclicCode code = resolve_code(code_args);
      const cyclo::EnumerationOptions opts{budget, threads};
      if (*build_cmd) std::cout << cyclo::code_json(code) << "\n";
      if (*dual_cmd) std::cout << cyclo::code_json(cyclo::dual(code)) << "\n";
      if (*mindist_cmd) std::cout << cyclo::distance_json(cyclo::min_distance(code, opts)) << "\n";
      if (*weights_cmd) std::cout << cyclo::weights_json(cyclo::weight_distribution(code, opts)) << "\n";
      if (*zeros_cmd) std::cout << cyclo::zeros_json(cyclo::zeros_and_nonzeros(code)) << "\n";
      return kOk;
    }
    if (*sweep_cmd) {
      const cyclo::SweepConfig cfg = cyclo::load_sweep_config(config_path);
      return write_records(cyclo::sweep(cfg), cfg.format, cfg.output);
    }
    if (*tensor_cmd) {
      const cyclo::VerificationRecord r =
          cyclo::verify_tensor_dual(n1, n2, cyclo::parse_field(tensor_field), {budget, 0});
      std::cout << cyclo::record_json(r);
      return r.status == cyclo::Status::Fail ? kFailures : kOk;
    }
    if (*run_cmd) {
      const cyclo::SweepConfig cfg =
          conj_config.empty() ? cyclo::SweepConfig{} : cyclo::load_sweep_config(conj_config);
      return write_records(cyclo::conjecture_check(cfg), cfg.format, cfg.output);
    }
  } catch (const cyclo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
