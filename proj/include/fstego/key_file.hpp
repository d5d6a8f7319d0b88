#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "fstego/image_io.hpp"
#include "fstego/pipeline.hpp"

namespace fstego::io {

// Key file: one "name = value" per line, '#' starts a comment.
//   wavelength_nm, pitch_nm, distance_cm, arnold_iterations, strength
// All five are required; anything else is rejected.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_real(std::string_view text, std::string_view name, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw KeyError("line " + std::to_string(line) + ": " + std::string(name) + " is not a finite number: '" +
                   std::string(text) + "'");
  }
  return value;
}

inline std::uint64_t parse_count(std::string_view text, std::string_view name, int line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw KeyError("line " + std::to_string(line) + ": " + std::string(name) +
                   " is not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

inline StegoKey parse_key(std::string_view text) {
  static constexpr std::string_view kNames[] = {"wavelength_nm", "pitch_nm", "distance_cm", "arnold_iterations",
                                                "strength"};
  std::map<std::string, std::pair<std::string, int>, std::less<>> values;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw KeyError("line " + std::to_string(line_no) + ": expected 'name = value'");
    const std::string name(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (std::find(std::begin(kNames), std::end(kNames), name) == std::end(kNames)) {
      throw KeyError("line " + std::to_string(line_no) + ": unknown key '" + name + "'");
    }
    if (value.empty()) throw KeyError("line " + std::to_string(line_no) + ": empty value for " + name);
    if (!values.emplace(name, std::make_pair(value, line_no)).second) {
      throw KeyError("line " + std::to_string(line_no) + ": duplicate key '" + name + "'");
    }
  }
  for (std::string_view name : kNames) {
    if (!values.contains(name)) throw KeyError("missing key '" + std::string(name) + "'");
  }
  const auto real = [&](std::string_view name) {
    const auto& [v, ln] = values.find(name)->second;
    return detail::parse_real(v, name, ln);
  };

  StegoKey key;
  key.fresnel.wavelength = real("wavelength_nm") / 1e9;
  key.fresnel.pitch = real("pitch_nm") / 1e9;
  key.fresnel.distance = real("distance_cm") / 1e2;
  const auto& [iters, iters_line] = values.find("arnold_iterations")->second;
  key.arnold_iterations = detail::parse_count(iters, "arnold_iterations", iters_line);
  key.strength = real("strength");
  try {
    key.validate();
  } catch (const ParameterError& e) {
    throw KeyError(e.what());
  }
  if (key.strength == 0.0) throw KeyError("strength must be positive");
  return key;
}

/// Shortest decimal that reads back to the same double.
inline std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Key file text for a key; parse_key(format_key(k)) == k up to the unit conversions.
inline std::string format_key(const StegoKey& key) {
  std::ostringstream out;
  out << "wavelength_nm = " << shortest(key.fresnel.wavelength * 1e9) << "\n"
      << "pitch_nm = " << shortest(key.fresnel.pitch * 1e9) << "\n"
      << "distance_cm = " << shortest(key.fresnel.distance * 1e2) << "\n"
      << "arnold_iterations = " << key.arnold_iterations << "\n"
      << "strength = " << shortest(key.strength) << "\n";
  return out.str();
}

inline StegoKey read_key(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KeyError("cannot open key file " + path.string());
  return parse_key(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

}  // namespace fstego::io
