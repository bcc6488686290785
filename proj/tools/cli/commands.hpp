#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "manifest.hpp"

namespace cohesion::cli {

struct OutputFile {
  std::string name;
  std::string content;
};

/// Everything a command produces. Nothing touches the disk until
/// write_outputs, so a failing command leaves no files behind.
struct CommandResult {
  std::vector<OutputFile> files;
  std::string summary;
};

CommandResult cmd_analyze(const std::filesystem::path& doc, const Options& opts);
CommandResult cmd_stats(const std::filesystem::path& doc, const Options& opts);
CommandResult cmd_segment(const std::filesystem::path& doc, const Options& opts);
CommandResult cmd_compare(const RunManifest& manifest, const Options& opts);
CommandResult cmd_correlate(const RunManifest& manifest);
CommandResult cmd_align(const std::filesystem::path& a, const std::filesystem::path& b,
                        const Options& opts);
/// The demo corpus: three parallel 484-segment documents, their lemma
/// tables, a manifest and an alignment fixture.
CommandResult cmd_synth(std::uint64_t seed);

/// Writes every file to a temporary name first and renames only once all
/// writes succeeded.
void write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files);

/// Entry point used by main(); returns the process exit code.
int run(int argc, char** argv);

}  // namespace cohesion::cli
