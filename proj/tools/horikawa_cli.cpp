// Command-line front end: scan a Horikawa line and emit certificates, build
// a single certificate, or run the whole-line verification suite.
//
// Exit codes: 0 success, 1 construction/verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "horikawa/horikawa.hpp"

namespace {

using horikawa::Certificate;
using horikawa::ComponentTag;
using horikawa::Int;
using horikawa::LineTag;

struct LineOption {
  std::string value = "2chi-6";
  LineTag tag() const {
    return value == "2chi-6" ? LineTag::L6 : LineTag::L5;
  }
};

int emit_certificates(const std::vector<Certificate>& certs,
                      const std::string& format) {
  if (format == "json") {
    for (const Certificate& c : certs) std::cout << c.dump() << "\n";
  } else if (format == "csv") {
    std::cout << horikawa::csv_header() << "\n";
    for (const Certificate& c : certs) std::cout << horikawa::csv_row(c) << "\n";
  } else {
    std::cout << horikawa::text_table(certs);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z2xZ2-cover constructions on the Horikawa lines"};
  app.require_subcommand(1);
  // key=value file with one [scan]/[construct]/[verify] section per
  // subcommand; command-line flags take precedence. Give --config before the
  // subcommand name.
  app.set_config("--config", "", "TOML-like key=value configuration file");

  LineOption line;
  Int chi = 0, chi_min = 0, chi_max = 0;
  std::string component = "only";
  std::string format = "json";
  std::string oracle = "on";
  std::string output = "-";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--oracle", oracle,
                    "run the stacked double-cover cross-check")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
  };

  CLI::App* scan = app.add_subcommand(
      "scan", "emit one certificate per (chi, component) over a chi range");
  scan->add_option("--line", line.value, "2chi-6 | 2chi-5")
      ->check(CLI::IsMember({"2chi-6", "2chi-5"}))
      ->required();
  scan->add_option("--chi-min", chi_min, "lower end of the chi range")
      ->required();
  scan->add_option("--chi-max", chi_max, "upper end of the chi range")
      ->required();
  add_common(scan);

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "emit the certificate of one record");
  construct_cmd->add_option("--line", line.value, "2chi-6 | 2chi-5")
      ->check(CLI::IsMember({"2chi-6", "2chi-5"}))
      ->required();
  construct_cmd->add_option("--chi", chi, "holomorphic Euler characteristic")
      ->required();
  construct_cmd->add_option("--component", component, "only | I | II")
      ->check(CLI::IsMember({"only", "I", "II"}))
      ->capture_default_str();
  add_common(construct_cmd);

  CLI::App* verify = app.add_subcommand(
      "verify", "construct and cross-check every pair up to chi-max");
  verify->add_option("--chi-max", chi_max, "scan bound, at least 7")
      ->required();
  verify->add_option("--output", output, "report file, '-' for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (scan->parsed()) {
      if (chi_min < horikawa::line_chi_min(line.tag()) || chi_max < chi_min) {
        std::cerr << "scan: invalid chi range " << chi_min << ".." << chi_max
                  << " (line floor is "
                  << horikawa::line_chi_min(line.tag()) << ")\n";
        return 2;
      }
      horikawa::ScanResult result =
          horikawa::scan_line(line.tag(), chi_min, chi_max, oracle == "on");
      emit_certificates(result.certificates, format);
      for (const std::string& f : result.failures)
        std::cerr << "failure: " << f << "\n";
      return result.failures.empty() ? 0 : 1;
    }

    if (construct_cmd->parsed()) {
      ComponentTag tag = component == "I"
                             ? ComponentTag::I
                             : component == "II" ? ComponentTag::II
                                                 : ComponentTag::Only;
      if (chi < horikawa::line_chi_min(line.tag())) {
        std::cerr << "construct: chi below the line floor\n";
        return 2;
      }
      try {
        Certificate cert = horikawa::make_certificate(
            horikawa::construct(line.tag(), chi, tag), oracle == "on");
        emit_certificates({cert}, format);
        return 0;
      } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
    }

    // verify
    if (chi_max < 7) {
      std::cerr << "verify: chi-max must be at least 7\n";
      return 2;
    }
    horikawa::VerificationReport report = horikawa::verify_theorem(chi_max);
    std::string text = horikawa::report_to_json(report).dump(2);
    if (output == "-") {
      std::cout << text << "\n";
    } else {
      std::ofstream out(output);
      if (!out) {
        std::cerr << "verify: cannot open " << output << "\n";
        return 2;
      }
      out << text << "\n";
    }
    std::cerr << (report.ok ? "verify: all pairs pass"
                            : "verify: failures present")
              << " (" << report.pairs.size() << " pairs)\n";
    return report.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
