#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "parametra/cli/interpreter.hpp"
#include "parametra/ordering.hpp"

namespace {

namespace fs = std::filesystem;
using parametra::cli::EngineError;
using parametra::cli::ParseError;

constexpr int kUsageError = 1;
constexpr int kEngineError = 2;

constexpr const char* kKeys[] = {"format", "order", "max_ext", "constraints", "seed", "output_dir", "timing"};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::string env_name(const std::string& key) {
  std::string s = "PARAMETRA_";
  for (char c : key) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool truthy(const std::string& s) { return s == "1" || s == "true" || s == "yes" || s == "on"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parametra: parametric Groebner bases, genericity and control analysis"};
  app.set_version_flag("--version", std::string(parametra::cli::engine_version()));

  std::string script_path;
  std::string format, order, output, config;
  std::vector<std::string> constraints;
  std::optional<std::size_t> max_ext;
  std::optional<std::uint64_t> seed;
  bool timing = false;

  app.add_option("script", script_path, "Script file, or - for standard input")->required();
  app.add_option("--format", format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order", order, "Ordering token replacing the ring orderings, e.g. (c,dp)");
  app.add_option("--max-ext", max_ext, "Highest Ext index searched by control and autonom");
  app.add_option("--constraints", constraints, "Sign constraints, e.g. pos=g,m1;nonzero=a")->take_all();
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_option("-o,--output", output, "Write the report to this file");
  app.add_option("--config", config, "key=value configuration file");
  app.add_flag("--timing", timing, "Include per-command timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  parametra::cli::RunOptions opts;
  try {
    std::map<std::string, std::string> settings;
    std::string config_path = !config.empty() ? config : std::getenv("PARAMETRA_CONFIG") ? std::getenv("PARAMETRA_CONFIG") : "";
    if (!config_path.empty()) settings = read_config(config_path);
    for (const char* key : kKeys)
      if (const char* v = std::getenv(env_name(key).c_str())) settings[key] = v;
    if (format.empty()) format = settings.count("format") ? settings["format"] : "text";
    if (format != "text" && format != "json") throw std::runtime_error("format must be text or json");
    if (order.empty() && settings.count("order")) order = settings["order"];
    if (!order.empty()) opts.order = order;
    if (max_ext) opts.max_ext = *max_ext;
    else if (settings.count("max_ext")) opts.max_ext = std::stoul(settings["max_ext"]);
    if (constraints.empty() && settings.count("constraints")) constraints.push_back(settings["constraints"]);
    for (const std::string& c : constraints) {
      auto parsed = parametra::cli::parse_constraints(c);
      opts.constraints.insert(opts.constraints.end(), parsed.begin(), parsed.end());
    }
    if (seed) opts.seed = *seed;
    else if (settings.count("seed")) opts.seed = std::stoull(settings["seed"]);
    opts.timing = timing || (settings.count("timing") && truthy(settings["timing"]));
    if (!output.empty() && fs::path(output).is_relative() && settings.count("output_dir"))
      output = (fs::path(settings["output_dir"]) / output).string();
  } catch (const std::exception& e) {
    std::cerr << "parametra: error: " << e.what() << "\n";
    return kUsageError;
  }

  std::string text;
  if (script_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(script_path, std::ios::binary);
    if (!in) {
      std::cerr << "parametra: error: cannot read " << script_path << "\n";
      return kUsageError;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  parametra::cli::SessionScript script;
  try {
    script = parametra::cli::parse_script(text);
    if (opts.order)
      for (const auto& st : script.statements)
        if (st.kind == parametra::cli::Statement::Kind::Ring) parametra::parse_order(*opts.order, st.vars.size());
  } catch (const ParseError& e) {
    std::cerr << script_path << ":" << e.what() << "\n";
    return kUsageError;
  } catch (const parametra::OrderSyntaxError& e) {
    std::cerr << "parametra: error: malformed --order: " << e.what() << "\n";
    return kUsageError;
  }

  nlohmann::json report;
  try {
    report = parametra::cli::run(script, opts);
  } catch (const EngineError& e) {
    std::cerr << script_path << ": error: " << e.what() << "\n";
    return kEngineError;
  } catch (const std::exception& e) {
    std::cerr << script_path << ": error: " << e.what() << "\n";
    return kEngineError;
  }

  std::string out = format == "json" ? report.dump(2) + "\n" : parametra::cli::render_text(report);
  if (output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f || !(f << out)) {
      std::cerr << "parametra: error: cannot write " << output << "\n";
      return kUsageError;
    }
  }
  return 0;
}
