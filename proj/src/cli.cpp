// Copyright 2026 The dctsteg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dctsteg/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "dctsteg/error.hpp"
#include "dctsteg/image_io.hpp"
#include "dctsteg/metrics.hpp"
#include "dctsteg/payload.hpp"
#include "dctsteg/steg.hpp"

namespace dctsteg {
namespace {

namespace fs = std::filesystem;

struct CliConfig {
  fs::path cover_path;
  fs::path secret_path;
  fs::path input_path;
  fs::path output_path;
  fs::path a_path;
  fs::path b_path;
  EmbedMode mode = EmbedMode::kContainer;
  SecretKind secret_kind = SecretKind::kBytes;
  int verbosity = 0;
};

// Thrown for artifacts that are readable but do not hold a valid frame.
struct CorruptArtifact {
  Error cause;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

Image8 load_pgm8(const fs::path& path) {
  const auto bytes = read_file(path);
  return read_pgm8(bytes);
}

// Frame-level failures on an artifact we could read mean it is not ours.
template <typename Fn>
auto frame_stage(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw CorruptArtifact{e};
  }
}

int cmd_embed(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Image8 cover = load_pgm8(cfg.cover_path);
  const auto secret_bytes = read_file(cfg.secret_path);

  PayloadFrame frame;
  if (cfg.secret_kind == SecretKind::kImage) {
    const Image8 secret = read_pgm8(secret_bytes);
    if (secret.width > 0xFFFF || secret.height > 0xFFFF) {
      throw Error(ErrorCode::kDimensionMismatch, "secret image dimensions exceed 65535");
    }
    frame = build_frame(secret.pixels, SecretKind::kImage,
                        static_cast<std::uint16_t>(secret.width),
                        static_cast<std::uint16_t>(secret.height));
  } else {
    frame = build_frame(secret_bytes, SecretKind::kBytes);
  }

  const EmbedResult result = embed(cover, frame, cfg.mode);
  const EmbedReport& r = result.report;
  if (const auto* c = std::get_if<StegoContainer>(&result.artifact)) {
    write_file(cfg.output_path, write_container(*c));
  } else {
    write_file(cfg.output_path, write_pgm(std::get<Image8>(result.artifact)));
  }

  out << "mode=" << (cfg.mode == EmbedMode::kContainer ? "container" : "spatial8")
      << " payload_bits=" << r.payload_bits << " frame_bits=" << r.frame_bits
      << " blocks_used=" << r.blocks_used << " blocks_total=" << r.blocks_total
      << " psnr_db=" << r.quality.psnr_string() << " mse=" << fmt_double(r.quality.mse)
      << " residual_bit_errors=" << r.spatial_mode_bit_errors
      << " blocks_adjusted=" << r.blocks_adjusted
      << " blocks_unresolved=" << r.blocks_unresolved << "\n";
  if (r.blocks_unresolved > 0) {
    err << "warning: " << r.blocks_unresolved << " of " << r.blocks_used
        << " blocks still carry wrong bits; extraction may fail\n";
  } else if (cfg.verbosity > 0) {
    err << "embedded " << r.frame_bits << " frame bits into " << cfg.output_path.string()
        << "\n";
  }
  return kExitOk;
}

// Neither a container nor a PGM: not a stego artifact at all.
Image8 read_artifact_pgm(const std::vector<std::uint8_t>& bytes) {
  try {
    return read_pgm8(bytes);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBadMagic) throw CorruptArtifact{e};
    throw;
  }
}

Extracted extract_any(const std::vector<std::uint8_t>& bytes, std::string* format) {
  if (looks_like_container(bytes)) {
    *format = "container";
    const StegoContainer c = read_container(bytes);
    return frame_stage([&] { return extract(c); });
  }
  *format = "pgm";
  const Image8 img = read_artifact_pgm(bytes);
  return frame_stage([&] { return extract(img); });
}

int cmd_extract(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto bytes = read_file(cfg.input_path);
  std::string format;
  const Extracted x = extract_any(bytes, &format);
  const bool image = x.header.kind == SecretKind::kImage;
  if (image) {
    Image8 img(x.header.width, x.header.height);
    img.pixels = x.secret;
    write_file(cfg.output_path, write_pgm(img));
  } else {
    write_file(cfg.output_path, x.secret);
  }
  out << "format=" << format << " kind=" << (image ? "image" : "bytes")
      << " width=" << x.header.width << " height=" << x.header.height
      << " symbols=" << x.header.symbol_count
      << " payload_bits=" << x.header.payload_bit_length << "\n";
  if (cfg.verbosity > 0) err << "wrote " << cfg.output_path.string() << "\n";
  return kExitOk;
}

int cmd_capacity(const CliConfig& cfg, std::ostream& out) {
  const Image8 cover = load_pgm8(cfg.cover_path);
  const Capacity c = capacity(cover.width, cover.height);
  out << "raw_slots=" << c.raw_slots << " payload_bits=" << c.payload_bits << "\n";
  return kExitOk;
}

int cmd_psnr(const CliConfig& cfg, std::ostream& out) {
  const QualityScore q = psnr(load_pgm8(cfg.a_path), load_pgm8(cfg.b_path));
  out << "psnr_db=" << q.psnr_string(6) << " mse=" << fmt_double(q.mse) << "\n";
  return kExitOk;
}

int cmd_inspect(const CliConfig& cfg, std::ostream& out) {
  const auto bytes = read_file(cfg.input_path);
  std::string format;
  BlockGrid grid;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  if (looks_like_container(bytes)) {
    format = "container";
    StegoContainer c = read_container(bytes);
    width = c.width;
    height = c.height;
    grid = std::move(c.grid);
  } else {
    format = "pgm";
    const Image8 img = read_artifact_pgm(bytes);
    width = img.width;
    height = img.height;
    grid = analyze(img);
  }
  const ParsedFrame f = frame_stage([&] { return parse_frame(collect_lsbs(grid)); });
  const PayloadHeader& h = f.header;
  out << "format=" << format << " width=" << width << " height=" << height
      << " version=" << int{h.version}
      << " kind=" << (h.kind == SecretKind::kImage ? "image" : "bytes")
      << " secret_width=" << h.width << " secret_height=" << h.height
      << " symbols=" << h.symbol_count << " payload_bits=" << h.payload_bit_length
      << " frame_bits=" << frame_bits_for(h.payload_bit_length)
      << " table_symbols=" << f.table.symbols_present()
      << " max_code_length=" << f.table.max_length() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"DCT-domain LSB steganography with Huffman-compressed payloads",
               "dctsteg"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", cfg.verbosity, "Extra diagnostics on stderr");

  const std::map<std::string, EmbedMode> modes{{"container", EmbedMode::kContainer},
                                               {"spatial8", EmbedMode::kSpatial8}};
  const std::map<std::string, SecretKind> kinds{{"bytes", SecretKind::kBytes},
                                                {"image", SecretKind::kImage}};

  auto* embed_cmd = app.add_subcommand("embed", "Hide a secret in a cover PGM");
  embed_cmd->add_option("--cover", cfg.cover_path, "8-bit cover PGM")->required();
  embed_cmd->add_option("--secret", cfg.secret_path, "Secret file")->required();
  embed_cmd->add_option("--secret-kind", cfg.secret_kind, "bytes or image (PGM)")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  embed_cmd->add_option("--mode", cfg.mode, "container (.dsc) or spatial8 (PGM)")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  embed_cmd->add_option("--out", cfg.output_path, "Output artifact")->required();

  auto* extract_cmd = app.add_subcommand("extract", "Recover a secret");
  extract_cmd->add_option("--in", cfg.input_path, "Container or stego PGM")->required();
  extract_cmd->add_option("--out", cfg.output_path, "Secret output path")->required();

  auto* capacity_cmd = app.add_subcommand("capacity", "Report embedding capacity");
  capacity_cmd->add_option("--cover", cfg.cover_path, "8-bit cover PGM")->required();

  auto* psnr_cmd = app.add_subcommand("psnr", "Compare two 8-bit PGMs");
  psnr_cmd->add_option("--a", cfg.a_path, "First image")->required();
  psnr_cmd->add_option("--b", cfg.b_path, "Second image")->required();

  auto* inspect_cmd = app.add_subcommand("inspect", "Dump the frame header of an artifact");
  inspect_cmd->add_option("--in", cfg.input_path, "Container or stego PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*embed_cmd) return cmd_embed(cfg, out, err);
    if (*extract_cmd) return cmd_extract(cfg, out, err);
    if (*capacity_cmd) return cmd_capacity(cfg, out);
    if (*psnr_cmd) return cmd_psnr(cfg, out);
    if (*inspect_cmd) return cmd_inspect(cfg, out);
  } catch (const CorruptArtifact& c) {
    err << "error: not a valid stego artifact: " << c.cause.what() << "\n";
    return kExitCorrupt;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kPayloadTooLarge ? kExitTooLarge : kExitIo;
  }
  return kExitUsage;
}

}  // namespace dctsteg
