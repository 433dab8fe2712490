#pragma once

// Output directory of one campaign: manifest.json with the resolved config,
// and cells/r<row>_c<col>.csv checkpoints so an interrupted run resumes where
// it stopped.

#include "wcs/experiments.hpp"

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <string>

namespace wcs::cli {

class CampaignStore {
 public:
  /// Throws ValidationError when the directory holds a different campaign
  /// and `force` is not set; with `force` old checkpoints are removed.
  CampaignStore(std::filesystem::path dir, std::string command, nlohmann::json config,
                std::size_t total_cells, bool force);

  experiments::CampaignHooks hooks(const std::atomic<bool>& stop);

  void write_manifest(const std::string& status);
  std::size_t resumed() const { return resumed_; }
  const std::filesystem::path& dir() const { return dir_; }

  /// Writes `text` to dir/name through a temporary file and rename.
  void write_file(const std::string& name, const std::string& text) const;

 private:
  std::filesystem::path cell_path(std::size_t row, std::size_t col) const;

  std::filesystem::path dir_;
  std::string command_;
  nlohmann::json config_;
  std::size_t total_ = 0;
  std::size_t done_ = 0;
  std::size_t resumed_ = 0;
};

}  // namespace wcs::cli
