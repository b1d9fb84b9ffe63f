// Command line front end: reads a weight tuple or matrix from a JSON file and
// prints validation verdicts, invariant-ring data, chamber decompositions, or
// the full analysis report.
//
// Exit codes: 0 success, 1 inadmissible input or domain failure, 2 unusable
// invocation or unparsable input.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "thq/report.hpp"

namespace {

void emit(const thq::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int fail_validation(const thq::ValidationError& e, const std::string& format) {
  if (format == "json")
    emit(thq::to_json(e.verdict));
  else
    std::cout << thq::to_text(e.verdict);
  return 1;
}

void print_invariants_text(const thq::AnalysisReport& r) {
  std::cout << "generators (" << r.generators.size() << ", maximal weight "
            << r.grading_info.maximal_weight << ")\n";
  for (const thq::InvariantMonomial& g : r.generators)
    std::cout << "  [weight " << g.weight() << "] " << g.to_string() << "\n";
  if (r.grading_info.half_gradable)
    std::cout << "grading: halvable, omega weight 1, half maximal weight "
              << *r.grading_info.half_maximal_weight << "\n";
  else
    std::cout << "grading: not halvable, omega weight 2\n";
}

void print_chambers_text(const thq::AnalysisReport& r) {
  if (r.chamber_decomp.enumerated) {
    std::cout << "chambers: " << r.chamber_decomp.chambers.size() << "\n  samples:";
    for (const thq::Chamber& c : r.chamber_decomp.chambers)
      std::cout << " " << thq::to_string(c.sample);
    std::cout << "\n";
  } else {
    std::cout << "chambers: not enumerated (d >= 3)\n";
  }
  std::cout << "  walls:\n";
  for (const thq::Wall& w : r.chamber_decomp.walls) {
    std::cout << "    normal " << thq::to_string(w.normal) << ", columns {";
    for (std::size_t i = 0; i < w.columns.size(); ++i)
      std::cout << (i ? "," : "") << w.columns[i] + 1;
    std::cout << "}\n";
  }
}

void print_analysis_text(const thq::AnalysisReport& r) {
  const int n = r.wd.n, d = r.wd.d;
  std::cout << "weight data: d = " << d << ", n = " << n << "\n";
  std::cout << "dim Y = " << 2 * (n - d) << ", moment fiber = " << 2 * n - d
            << ", singular locus = " << d - 1 << "\n";
  std::cout << "pi1 certificate: " << (r.certificate.issued() ? "ISSUED" : "NOT ISSUED") << "\n";
  for (const thq::CertificateStep& s : r.certificate.steps) {
    std::cout << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.name << ": " << s.claim;
    if (s.cited) std::cout << " (" << s.citation << ")";
    std::cout << "\n";
  }
  std::cout << "remarks\n";
  for (const std::string& m : r.remarks) std::cout << "  - " << m << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of toric hyperkahler quotient singularities"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "json";
  int cap = 64;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "input JSON file ({\"a\": [...]} or {\"A\": [[...]]})")
        ->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  CLI::App* validate = app.add_subcommand("validate", "check admissibility of the weight data");
  add_common(validate);
  CLI::App* analyze = app.add_subcommand("analyze", "dimensions and the pi1 certificate");
  CLI::App* invariants = app.add_subcommand("invariants", "invariant-ring generators and grading");
  CLI::App* chamb = app.add_subcommand("chambers", "wall and chamber decomposition");
  CLI::App* report = app.add_subcommand("report", "the full analysis report");
  for (CLI::App* sub : {analyze, invariants, chamb, report}) {
    add_common(sub);
    sub->add_option("--cap", cap, "degree cap for the generator completion");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const thq::InputDocument doc = thq::InputDocument::parse_file(file);

    if (app.got_subcommand(validate)) {
      try {
        doc.build();
      } catch (const thq::ValidationError& e) {
        return fail_validation(e, format);
      }
      if (format == "json")
        emit(thq::ordered_json{{"ok", true}, {"failures", thq::ordered_json::array()}});
      else
        std::cout << "validation: ok\n";
      return 0;
    }

    const thq::AnalysisReport rep = thq::analyze(doc, cap);
    const bool json = format == "json";
    if (app.got_subcommand(report)) {
      if (json)
        emit(thq::to_json(rep));
      else
        std::cout << thq::to_text(rep);
    } else if (app.got_subcommand(invariants)) {
      if (json) {
        thq::ordered_json full = thq::to_json(rep);
        emit(thq::ordered_json{{"input", full["input"]},
                               {"generators", full["generators"]},
                               {"grading", full["grading"]}});
      } else {
        print_invariants_text(rep);
      }
    } else if (app.got_subcommand(chamb)) {
      if (json) {
        thq::ordered_json full = thq::to_json(rep);
        emit(thq::ordered_json{{"input", full["input"]}, {"chambers", full["chambers"]}});
      } else {
        print_chambers_text(rep);
      }
    } else {
      if (json) {
        thq::ordered_json full = thq::to_json(rep);
        emit(thq::ordered_json{{"input", full["input"]},
                               {"validation", full["validation"]},
                               {"dimensions", full["dimensions"]},
                               {"pi1_certificate", full["pi1_certificate"]},
                               {"remarks", full["remarks"]}});
      } else {
        print_analysis_text(rep);
      }
    }
    return 0;
  } catch (const thq::ValidationError& e) {
    return fail_validation(e, format);
  } catch (const thq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const thq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
