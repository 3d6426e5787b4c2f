#pragma once

// Range sweeps over (m, curve class) and their CSV / JSON tables.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "clifford.hpp"
#include "json.hpp"

namespace k3cliff {

struct IntRange {
  Int lo = 1;
  Int hi = 1;
};

enum class EmitFormat { csv, json };

struct SweepConfig {
  IntRange m_range;
  Int max_genus = 3;
  EmitFormat format = EmitFormat::csv;
  std::optional<std::string> output_path;
  unsigned threads = 1;

  /// Throws std::invalid_argument on a malformed configuration.
  void validate(Int min_max_genus = 3) const {
    if (m_range.lo < 1) throw std::invalid_argument("m range must start at 1 or above");
    if (m_range.hi < m_range.lo) throw std::invalid_argument("empty m range");
    if (max_genus < min_max_genus)
      throw std::invalid_argument("max genus must be at least " + std::to_string(min_max_genus));
  }
};

namespace detail {
inline std::optional<Int> parse_int(std::string_view s) {
  Int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) return std::nullopt;
  return v;
}
}  // namespace detail

/// Parses "n" or "a..b".
inline IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  const auto lo = detail::parse_int(text.substr(0, dots));
  const auto hi = dots == std::string_view::npos ? lo : detail::parse_int(text.substr(dots + 2));
  if (!lo || !hi) throw std::invalid_argument("bad range '" + std::string(text) + "', expected n or a..b");
  return {*lo, *hi};
}

/// Parses "x,y" in the (E, F) basis.
inline DivClass parse_class(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("bad class '" + std::string(text) + "', expected x,y");
  const auto x = detail::parse_int(text.substr(0, comma));
  const auto y = detail::parse_int(text.substr(comma + 1));
  if (!x || !y) throw std::invalid_argument("bad class '" + std::string(text) + "', expected x,y");
  return {*x, *y};
}

inline constexpr std::string_view kCsvHeader =
    "m,x,y,genus,d_C,mu,clifford,gonality_lo,gonality_hi,is_general,witness_x,witness_y";

/// Reports for every curve class with 2 < g <= max_genus, ordered by m,
/// genus, then class. Work is split across threads but the order is fixed.
inline std::vector<CliffordReport> sweep(const SweepConfig& config) {
  std::vector<std::pair<Lattice, CurveClass>> jobs;
  for (Int m = config.m_range.lo; m <= config.m_range.hi; ++m) {
    const Lattice lat(m);
    for (const auto& c : curve_classes(lat, 3, config.max_genus)) jobs.emplace_back(lat, c);
  }

  std::vector<std::optional<CliffordReport>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      auto report = clifford_index(jobs[i].first, jobs[i].second);
      report.validate();
      slots[i] = std::move(report);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }

  std::vector<CliffordReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline void write_csv_row(std::ostream& os, const CliffordReport& r) {
  r.validate();
  const DivClass w = r.witness();
  os << r.m << ',' << r.cls.x << ',' << r.cls.y << ',' << r.genus << ',' << r.d_C << ',';
  if (r.mu) os << *r.mu;
  os << ',' << r.clifford << ',' << r.gonality_lo << ',' << r.gonality_hi << ',' << (r.is_general ? "true" : "false")
     << ',' << w.x << ',' << w.y << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<CliffordReport>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) write_csv_row(os, r);
}

inline nlohmann::ordered_json to_json(const CliffordReport& r) {
  r.validate();
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["x"] = r.cls.x;
  j["y"] = r.cls.y;
  j["genus"] = r.genus;
  j["d_C"] = r.d_C;
  j["mu"] = r.mu ? nlohmann::ordered_json(*r.mu) : nlohmann::ordered_json(nullptr);
  j["clifford"] = r.clifford;
  j["gonality_lo"] = r.gonality_lo;
  j["gonality_hi"] = r.gonality_hi;
  j["is_general"] = r.is_general;
  j["witness_x"] = r.witness().x;
  j["witness_y"] = r.witness().y;
  return j;
}

inline void write_json(std::ostream& os, const std::vector<CliffordReport>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  os << arr.dump(2) << '\n';
}

inline std::string render(const std::vector<CliffordReport>& rows, EmitFormat format) {
  std::ostringstream os;
  if (format == EmitFormat::csv)
    write_csv(os, rows);
  else
    write_json(os, rows);
  return os.str();
}

struct VerifyOutcome {
  std::size_t checked = 0;
  std::optional<CliffordReport> counterexample;  ///< brute-force report of the first disagreement
};

inline VerifyOutcome verify_range(const SweepConfig& config) {
  VerifyOutcome out;
  for (Int m = config.m_range.lo; m <= config.m_range.hi; ++m) {
    const Lattice lat(m);
    for (const auto& c : curve_classes(lat, 3, config.max_genus)) {
      ++out.checked;
      if (!verify_theorem(lat, c)) {
        out.counterexample = clifford_index(lat, c);
        return out;
      }
    }
  }
  return out;
}

}  // namespace k3cliff
