#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwa/error.hpp"
#include "gwa/job.hpp"

namespace {

void write_diagrams(const gwa::json& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& tasks = report.at("tasks");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    if (t.at("status") != "ok") continue;
    const auto& r = t.at("result");
    const gwa::json* d = r.contains("orbits") ? &r : (r.contains("diagram") ? &r.at("diagram") : nullptr);
    if (!d) continue;
    std::ofstream(dir / ("task" + std::to_string(i) + "_" + t.at("kind").get<std::string>() + ".txt"))
        << d->at("text").get<std::string>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modules over generalized Weyl algebras: batch analysis"};
  std::string job_path;
  std::optional<std::uint64_t> seed;
  std::string diagrams_dir;
  long max_divisor_degree = 16;
  bool ansi = false;
  app.add_option("--job", job_path, "job spec (JSON); - reads standard input")->required();
  app.add_option("--seed", seed, "seed for the randomized oracle checks");
  app.add_option("--diagrams-dir", diagrams_dir, "also write each diagram to a text file here");
  app.add_option("--max-divisor-degree", max_divisor_degree, "bound on deg(a) for classify_all_divisors")
      ->capture_default_str();
  app.add_flag("--ansi", ansi, "color P and Q markers with ANSI escapes");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::stringstream text;
  if (job_path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(job_path);
    if (!in) {
      std::cerr << "ParseError: cannot open " << job_path << "\n";
      return 2;
    }
    text << in.rdbuf();
  }

  gwa::RunResult result;
  try {
    const auto job = gwa::parse_job_text(text.str());
    result = gwa::run(job, {seed, max_divisor_degree, ansi, true});
  } catch (const gwa::MathError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::cout << result.report.dump(2) << "\n";
  if (!diagrams_dir.empty()) write_diagrams(result.report, diagrams_dir);
  return result.exit_code;
}
