// k3cliff: Clifford index and gonality of curves on K3 surfaces with
// Picard lattice U(m).
//
// Exit codes: 0 success, 1 verification counterexample, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "k3cliff/sweep.hpp"

namespace {

using namespace k3cliff;

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<DivClass>& classes) {
  std::string s;
  for (const auto& c : classes) s += (s.empty() ? "" : " ") + c.str();
  return s;
}

std::string name_of(DivClass c) {
  if (c == kE) return "E";
  if (c == kF) return "F";
  return c.str();
}

void print_text(std::ostream& os, const CliffordReport& r) {
  os << "m=" << r.m << " class=" << r.cls << " genus=" << r.genus << " d_C=" << r.d_C
     << " mu=" << (r.mu ? std::to_string(*r.mu) : std::string("none")) << '\n';
  os << "clifford=" << r.clifford << " gonality=";
  if (r.gonality_exact())
    os << r.gonality_lo;
  else
    os << '[' << r.gonality_lo << ',' << r.gonality_hi << ']';
  os << ' ' << (r.is_general ? "general" : "special") << '\n';
  os << "witness=" << name_of(r.witness()) << '\n';
  os << "A0=" << join(r.A0_witnesses) << '\n';
  os << "E0=" << join(r.E0_witnesses) << '\n';
}

/// Writes to --out when given, stdout otherwise. Returns false if the file
/// cannot be written.
bool emit(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return true;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out.flush());
}

EmitFormat parse_format(const std::string& s) {
  if (s == "csv") return EmitFormat::csv;
  if (s == "json") return EmitFormat::json;
  throw std::invalid_argument("unknown format '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford index and gonality of curves on K3 surfaces with Picard lattice U(m)"};
  app.require_subcommand(1);

  std::string m_text, class_text, format_text, out_path;
  Int max_genus = 0;
  unsigned threads = 1;

  auto* query = app.add_subcommand("query", "Clifford index and gonality of one curve class");
  query->add_option("--m", m_text, "lattice parameter m >= 1")->required();
  query->add_option("--curve,--class", class_text, "class x,y in the (E, F) basis")->required();
  query->add_option("--format", format_text, "text (default), csv or json");

  auto* h0_cmd = app.add_subcommand("h0", "h0 of a divisor class with its mobile part");
  h0_cmd->add_option("--m", m_text, "lattice parameter m >= 1")->required();
  h0_cmd->add_option("--class,--curve", class_text, "class x,y in the (E, F) basis")->required();

  auto add_range_options = [&](CLI::App* sub) {
    sub->add_option("--m", m_text, "m range a..b or a single n")->required();
    sub->add_option("--max-genus", max_genus, "largest genus included")->required();
    sub->add_option("--threads", threads, "worker threads (output order is unaffected)");
  };
  auto* sweep_cmd = app.add_subcommand("sweep", "table of every curve class with 2 < g <= max genus");
  add_range_options(sweep_cmd);
  sweep_cmd->add_option("--format", format_text, "csv (default) or json");
  sweep_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check the closed form against enumeration");
  add_range_options(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*query) {
      const auto range = parse_range(m_text);
      if (range.hi != range.lo) throw std::invalid_argument("query takes a single m");
      const Lattice lat(range.lo);
      const CurveClass curve(lat, parse_class(class_text));
      const auto report = clifford_index(lat, curve);
      report.validate();
      if (format_text.empty() || format_text == "text")
        print_text(std::cout, report);
      else
        std::cout << render({report}, parse_format(format_text));
      return 0;
    }

    if (*h0_cmd) {
      const auto range = parse_range(m_text);
      if (range.hi != range.lo) throw std::invalid_argument("h0 takes a single m");
      const Lattice lat(range.lo);
      const DivClass d = parse_class(class_text);
      const auto r = h0(lat, d);
      std::cout << "m=" << lat.m() << " class=" << d << " h0=" << r.h0 << " mobile_part=" << r.mobile_part
                << " stripped_gamma=" << r.stripped_gamma_count << '\n';
      return 0;
    }

    SweepConfig config;
    config.m_range = parse_range(m_text);
    config.max_genus = max_genus;
    config.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    if (!format_text.empty()) config.format = parse_format(format_text);
    if (!out_path.empty()) config.output_path = out_path;
    config.validate();

    if (*sweep_cmd) {
      const auto text = render(sweep(config), config.format);
      if (!emit(config.output_path, text)) {
        std::cerr << "error: cannot write " << *config.output_path << '\n';
        return kExitUsage;
      }
      return 0;
    }

    const auto outcome = verify_range(config);
    std::cout << outcome.checked << " classes checked\n";
    if (outcome.counterexample) {
      std::cout << "counterexample:\n";
      print_text(std::cout, *outcome.counterexample);
      return kExitCounterexample;
    }
    std::cout << "closed form agrees on all classes\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
