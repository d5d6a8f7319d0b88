#pragma once

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>

#include "fstego/grid.hpp"

namespace fstego::io {

/// First line of a FloatImageFile.
inline constexpr std::string_view kFloatMagic = "FSTEGO-F64";

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("short write to " + path.string());
}

namespace detail {

/// Cursor over a netpbm header: whitespace and '#' comments between tokens.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* what) {
    skip_separators();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > (1ull << 32)) throw FormatError(std::string("header: ") + what + " too large at byte " + std::to_string(start));
      ++pos_;
    }
    if (pos_ == start) throw FormatError(std::string("header: expected ") + what + " at byte " + std::to_string(start));
    return value;
  }

  /// Exactly one whitespace byte separates the header from the raster.
  void end_header() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw FormatError("PGM: expected whitespace after maxval at byte " + std::to_string(pos_));
    }
    ++pos_;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Decodes a binary 8-bit PGM (P5, maxval 255).
inline ImageGrid decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw FormatError("PGM: missing P5 magic at byte 0");
  }
  detail::HeaderReader header(bytes.substr(2));
  const std::uint64_t cols = header.read_uint("width");
  const std::uint64_t rows = header.read_uint("height");
  header.skip_separators();
  const std::size_t maxval_at = header.offset() + 2;
  const std::uint64_t maxval = header.read_uint("maxval");
  if (maxval != 255) {
    throw FormatError("PGM: maxval " + std::to_string(maxval) + " at byte " + std::to_string(maxval_at) +
                      " unsupported, only 255");
  }
  if (rows == 0 || cols == 0) throw FormatError("PGM: zero dimension");
  header.end_header();
  const std::size_t data_at = header.offset() + 2;
  const std::size_t available = bytes.size() - data_at;
  if (rows > available / cols) {
    throw FormatError("PGM: truncated raster at byte " + std::to_string(bytes.size()) + ", header declares " +
                      std::to_string(cols) + "x" + std::to_string(rows));
  }
  const std::size_t expected = rows * cols;
  if (available < expected) {
    throw FormatError("PGM: truncated raster at byte " + std::to_string(bytes.size()) + ", expected " +
                      std::to_string(data_at + expected) + " bytes");
  }
  std::vector<double> samples(expected);
  for (std::size_t i = 0; i < expected; ++i) samples[i] = static_cast<unsigned char>(bytes[data_at + i]);
  return ImageGrid(rows, cols, std::move(samples));
}

/// Encodes as P5 with maxval 255; samples are clamped to [0, 255] and rounded half away from zero.
inline std::string encode_pgm(const ImageGrid& img) {
  std::string out = "P5\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
  out.reserve(out.size() + img.size());
  for (double v : img.samples()) out.push_back(static_cast<char>(static_cast<unsigned char>(std::round(std::clamp(v, 0.0, 255.0)))));
  return out;
}

/// Decodes a FloatImageFile: "FSTEGO-F64\n", "<rows> <cols>\n", then rows*cols
/// little-endian IEEE-754 doubles in row-major order. Trailing bytes are an error.
inline ImageGrid decode_float_image(std::string_view bytes) {
  const std::size_t magic_end = bytes.find('\n');
  if (magic_end == std::string_view::npos || bytes.substr(0, magic_end) != kFloatMagic) {
    throw FormatError("float image: missing FSTEGO-F64 magic at byte 0");
  }
  const std::size_t dims_at = magic_end + 1;
  const std::size_t dims_end = bytes.find('\n', dims_at);
  if (dims_end == std::string_view::npos) throw FormatError("float image: missing dimensions line at byte " + std::to_string(dims_at));
  detail::HeaderReader dims(bytes.substr(dims_at, dims_end - dims_at));
  const std::uint64_t rows = dims.read_uint("rows");
  const std::uint64_t cols = dims.read_uint("cols");
  dims.skip_separators();
  if (dims.offset() != dims_end - dims_at) {
    throw FormatError("float image: junk in dimensions line at byte " + std::to_string(dims_at + dims.offset()));
  }
  if (rows == 0 || cols == 0) throw FormatError("float image: zero dimension");
  const std::size_t data_at = dims_end + 1;
  const std::size_t available = bytes.size() - data_at;
  if (rows > available / 8 / cols) {
    throw FormatError("float image: payload at byte " + std::to_string(data_at) + " too short for " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
  const std::size_t expected = rows * cols * 8;
  if (available != expected) {
    throw FormatError("float image: payload at byte " + std::to_string(data_at) + " has " +
                      std::to_string(bytes.size() - data_at) + " bytes, expected " + std::to_string(expected));
  }
  std::vector<double> samples(rows * cols);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::uint64_t word = 0;
    for (int b = 7; b >= 0; --b) {
      word = (word << 8) | static_cast<unsigned char>(bytes[data_at + i * 8 + static_cast<std::size_t>(b)]);
    }
    samples[i] = std::bit_cast<double>(word);
    if (!std::isfinite(samples[i])) {
      throw FormatError("float image: non-finite sample at byte " + std::to_string(data_at + i * 8));
    }
  }
  return ImageGrid(rows, cols, std::move(samples));
}

inline std::string encode_float_image(const ImageGrid& img) {
  std::string out = std::string(kFloatMagic) + "\n" + std::to_string(img.rows()) + " " + std::to_string(img.cols()) + "\n";
  out.reserve(out.size() + img.size() * 8);
  for (double v : img.samples()) {
    const auto word = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((word >> (8 * b)) & 0xffu));
  }
  return out;
}

inline ImageGrid read_pgm(const std::filesystem::path& path) { return decode_pgm(read_file(path)); }
inline void write_pgm(const ImageGrid& img, const std::filesystem::path& path) { write_file(path, encode_pgm(img)); }

inline ImageGrid read_float_image(const std::filesystem::path& path) { return decode_float_image(read_file(path)); }
inline void write_float_image(const ImageGrid& img, const std::filesystem::path& path) {
  write_file(path, encode_float_image(img));
}

/// Reads either format, chosen by the leading magic bytes.
inline ImageGrid read_image(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.rfind("P5", 0) == 0) return decode_pgm(bytes);
  if (bytes.rfind(kFloatMagic, 0) == 0) return decode_float_image(bytes);
  throw FormatError(path.string() + ": neither a P5 PGM nor a FSTEGO-F64 image");
}

/// Writes a PGM when the extension is .pgm, a FloatImageFile otherwise.
inline void write_image(const ImageGrid& img, const std::filesystem::path& path) {
  if (path.extension() == ".pgm") {
    write_pgm(img, path);
  } else {
    write_float_image(img, path);
  }
}

}  // namespace fstego::io
