// Command-line front end: run the amplitude pipelines over the bundled
// problems (or a user problem file) and emit order-by-order tables, or run
// the built-in verification suite.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ampkit/verify.hpp"

namespace {

using ampkit::Real;
using ampkit::scheme::AmplitudeSequence;

// 10 significant digits: enough to compare against any printed value with
// headroom, short enough to stay stable across precisions
std::string fmt(const Real& x) { return x.str(10); }

void emit_csv(std::ostream& out,
              const std::vector<AmplitudeSequence>& seqs) {
  out << "problem,scheme,n,amplitude,valid,percent_error\n";
  for (const auto& s : seqs)
    for (const auto& e : s.entries) {
      out << s.problem << ',' << s.scheme << ',' << e.n << ',';
      out << (e.valid ? fmt(e.amplitude) : std::string("invalid"));
      out << ',' << (e.valid ? 1 : 0) << ',';
      if (e.percent_error) out << fmt(*e.percent_error);
      out << '\n';
    }
}

void emit_json(std::ostream& out,
               const std::vector<AmplitudeSequence>& seqs) {
  // numeric payloads as the same decimal strings as the CSV, by design
  out << "[\n";
  bool first = true;
  for (const auto& s : seqs)
    for (const auto& e : s.entries) {
      if (!first) out << ",\n";
      first = false;
      out << "  {\"problem\":\"" << s.problem << "\",\"scheme\":\""
          << s.scheme << "\",\"n\":" << e.n << ",\"amplitude\":";
      if (e.valid)
        out << '"' << fmt(e.amplitude) << '"';
      else
        out << "\"invalid\"";
      out << ",\"valid\":" << (e.valid ? "true" : "false")
          << ",\"percent_error\":";
      if (e.percent_error)
        out << '"' << fmt(*e.percent_error) << '"';
      else
        out << "null";
      out << "}";
    }
  out << "\n]\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"large-variable amplitude extrapolation toolkit"};
  app.require_subcommand(1);

  unsigned precision = 0;
  if (const char* env = std::getenv("AMPKIT_DIGITS"))
    precision = static_cast<unsigned>(std::atoi(env));

  auto* list_cmd = app.add_subcommand("list", "list bundled problems");

  auto* run_cmd = app.add_subcommand("run", "run a pipeline over a problem");
  std::string problem, scheme_opt = "both", format = "csv", out_path,
              problem_file;
  long max_order = -1;
  run_cmd->add_option("--problem", problem, "bundled problem id");
  run_cmd->add_option("--problem-file", problem_file,
                      "JSON problem definition");
  run_cmd->add_option("--scheme", scheme_opt, "standard | corrected | both")
      ->check(CLI::IsMember({"standard", "corrected", "both"}));
  run_cmd->add_option("--max-order", max_order,
                      "deepest order (default: problem's recommendation)");
  run_cmd->add_option("--precision", precision, "working decimal digits");
  run_cmd->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the verification suite");
  std::string only;
  verify_cmd->add_option("--only", only, "restrict to criteria whose name "
                                         "contains this token");
  verify_cmd->add_option("--precision", precision, "working decimal digits");

  CLI11_PARSE(app, argc, argv);

  ampkit::set_working_digits(ampkit::kDefaultDigits);
  if (precision) {
    if (precision < 30) {
      std::cerr << "{\"error\":\"precision must be at least 30 digits\"}\n";
      return 2;
    }
    ampkit::set_working_digits(precision);
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& id : ampkit::corpus::list()) {
        auto p = ampkit::corpus::get(id);
        std::cout << id << "  (standard<=" << p.max_standard
                  << ", corrected<=" << p.max_corrected << ")  " << p.notes
                  << "\n";
      }
      return 0;
    }

    if (run_cmd->parsed()) {
      if (problem.empty() == problem_file.empty()) {
        std::cerr << "{\"error\":\"give exactly one of --problem / "
                     "--problem-file\"}\n";
        return 2;
      }
      ampkit::corpus::Problem p = problem_file.empty()
                                      ? ampkit::corpus::get(problem)
                                      : ampkit::corpus::load_json(problem_file);
      std::vector<AmplitudeSequence> seqs;
      if (scheme_opt != "corrected") {
        std::size_t n = max_order >= 0 ? static_cast<std::size_t>(max_order)
                                       : p.max_standard;
        seqs.push_back(ampkit::scheme::standard_amplitudes(p, n));
      }
      if (scheme_opt != "standard") {
        std::size_t n = max_order >= 0 ? static_cast<std::size_t>(max_order)
                                       : p.max_corrected;
        seqs.push_back(ampkit::scheme::corrected_amplitudes(p, n));
      }
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
          std::cerr << "{\"error\":\"cannot write " << out_path << "\"}\n";
          return 2;
        }
        out = &file;
      }
      if (format == "csv")
        emit_csv(*out, seqs);
      else
        emit_json(*out, seqs);
      return 0;
    }

    // verify
    bool all_pass = true;
    for (const auto& r : ampkit::verify::run_all(only)) {
      bool pass = r.pass();
      all_pass = all_pass && pass;
      std::cout << "criterion " << r.id << " (" << r.name << "): "
                << (pass ? "PASS" : "FAIL") << "\n";
      for (const auto& c : r.checks)
        if (!c.pass)
          std::cout << "  FAIL " << c.name << ": " << c.detail << "\n";
    }
    return all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 2;
  }
}
