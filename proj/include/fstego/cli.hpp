#pragma once

#include <array>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fstego/image_io.hpp"
#include "fstego/key_file.hpp"
#include "fstego/metrics.hpp"
#include "fstego/pipeline.hpp"

namespace fstego::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFormat = 2,  // unreadable file, bad format, shape or size mismatch
  kKey = 3,     // bad key file or key parameter
};

namespace detail {

inline std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

inline void print_report(std::ostream& out, const metrics::MetricsReport& r, bool json) {
  if (json) {
    nlohmann::json j;
    j["mse"] = r.mse;
    j["psnr_db"] = r.psnr_infinite() ? nlohmann::json(nullptr) : nlohmann::json(r.psnr_db);
    j["psnr_infinite"] = r.psnr_infinite();
    j["cc"] = r.cc;
    j["ssim"] = r.ssim;
    j["luminance"] = r.luminance;
    j["contrast"] = r.contrast;
    j["structure"] = r.structure;
    out << j.dump() << "\n";
    return;
  }
  out << "mse=" << number(r.mse) << "\n"
      << "psnr=" << number(r.psnr_db) << "\n"
      << "cc=" << number(r.cc) << "\n"
      << "ssim=" << number(r.ssim) << "\n"
      << "luminance=" << number(r.luminance) << "\n"
      << "contrast=" << number(r.contrast) << "\n"
      << "structure=" << number(r.structure) << "\n";
}

/// 256 bins over values clamped to [0, 255] and rounded, as an 8-bit write would store them.
inline std::array<std::uint64_t, 256> histogram(const ImageGrid& img) {
  std::array<std::uint64_t, 256> bins{};
  for (double v : img.samples()) ++bins[static_cast<std::size_t>(std::round(std::clamp(v, 0.0, 255.0)))];
  return bins;
}

}  // namespace detail

/// Runs one command line. args excludes the program name. Never throws.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fresnelet steganography: hide a grayscale image inside another"};
  app.require_subcommand(1);

  std::string host_path, secret_path, key_path, out_path, embedded_path, a_path, b_path, in_path;
  std::string mode = "float";
  bool json = false;
  std::uint64_t iterations = 0;
  std::uint64_t size = 0;

  auto* embed_cmd = app.add_subcommand("embed", "Hide --secret inside --host");
  embed_cmd->add_option("--host", host_path, "Cover image (PGM or float file)")->required();
  embed_cmd->add_option("--secret", secret_path, "Secret image, half the host side")->required();
  embed_cmd->add_option("--key", key_path, "Key file")->required();
  embed_cmd->add_option("--out", out_path, "Output image (.pgm writes PGM, anything else a float file)")->required();
  embed_cmd->add_option("--mode", mode, "Delivery: float (lossless) or u8 (clamped and rounded)")
      ->check(CLI::IsMember({"float", "u8"}));

  auto* extract_cmd = app.add_subcommand("extract", "Recover the secret from an embedded image");
  extract_cmd->add_option("--embedded", embedded_path, "Embedded image")->required();
  extract_cmd->add_option("--host", host_path, "Original cover image")->required();
  extract_cmd->add_option("--key", key_path, "Key file")->required();
  extract_cmd->add_option("--out", out_path, "Output image")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "Compare two images");
  metrics_cmd->add_option("--a", a_path, "First image")->required();
  metrics_cmd->add_option("--b", b_path, "Second image")->required();
  metrics_cmd->add_flag("--json", json, "Print one JSON object");

  auto* arnold_cmd = app.add_subcommand("arnold", "Arnold cat-map tools");
  arnold_cmd->require_subcommand(1);
  auto* scramble_cmd = arnold_cmd->add_subcommand("scramble", "Apply the cat map --n times");
  auto* unscramble_cmd = arnold_cmd->add_subcommand("unscramble", "Invert --n applications of the cat map");
  for (auto* cmd : {scramble_cmd, unscramble_cmd}) {
    cmd->add_option("--in", in_path, "Input image")->required();
    cmd->add_option("--n", iterations, "Iterations")->required();
    cmd->add_option("--out", out_path, "Output image")->required();
  }
  auto* period_cmd = arnold_cmd->add_subcommand("period", "Print the cat-map period for an N x N image");
  period_cmd->add_option("--size", size, "Image side N")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));

  auto* histogram_cmd = app.add_subcommand("histogram", "Print 256 bin counts");
  histogram_cmd->add_option("--in", in_path, "Input image")->required();

  std::vector<const char*> argv{"fstego"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*embed_cmd) {
      const StegoKey key = io::read_key(key_path);
      const ImageGrid host = io::read_image(host_path);
      const ImageGrid secret = io::read_image(secret_path);
      EmbedOptions options;
      options.delivery = mode == "u8" ? Delivery::EightBit : Delivery::Float;
      const EmbedResult result = embed(host, secret, key, options);
      io::write_image(result.embedded, out_path);
      detail::print_report(out, result.report, false);
    } else if (*extract_cmd) {
      const StegoKey key = io::read_key(key_path);
      const ImageGrid embedded = io::read_image(embedded_path);
      const ImageGrid host = io::read_image(host_path);
      io::write_image(extract(embedded, host, key), out_path);
    } else if (*metrics_cmd) {
      detail::print_report(out, metrics::report(io::read_image(a_path), io::read_image(b_path)), json);
    } else if (*scramble_cmd) {
      io::write_image(arnold::scramble(io::read_image(in_path), iterations), out_path);
    } else if (*unscramble_cmd) {
      io::write_image(arnold::unscramble(io::read_image(in_path), iterations), out_path);
    } else if (*period_cmd) {
      out << arnold::period(size) << "\n";
    } else if (*histogram_cmd) {
      const auto bins = detail::histogram(io::read_image(in_path));
      for (std::size_t i = 0; i < bins.size(); ++i) out << i << " " << bins[i] << "\n";
    }
  } catch (const KeyError& e) {
    err << "key error: " << e.what() << "\n";
    return kKey;
  } catch (const ParameterError& e) {
    err << "key error: " << e.what() << "\n";
    return kKey;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFormat;
  }
  return kOk;
}

}  // namespace fstego::cli
