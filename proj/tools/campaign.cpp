#include "campaign.hpp"

#include "wcs/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wcs::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw csv::FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace

CampaignStore::CampaignStore(fs::path dir, std::string command, json config,
                             std::size_t total_cells, bool force)
    : dir_(std::move(dir)), command_(std::move(command)), config_(std::move(config)),
      total_(total_cells) {
  const fs::path manifest = dir_ / "manifest.json";
  if (fs::exists(manifest)) {
    const json old = read_manifest(manifest);
    const bool same = old.value("command", "") == command_ && old.contains("config") &&
                      old["config"] == config_;
    if (!same) {
      if (!force) {
        throw ValidationError("output directory " + dir_.string() +
                              " holds a different campaign; pass --force to replace it");
      }
      fs::remove_all(dir_ / "cells");
    }
  }
  fs::create_directories(dir_ / "cells");
}

fs::path CampaignStore::cell_path(std::size_t row, std::size_t col) const {
  return dir_ / "cells" / ("r" + std::to_string(row) + "_c" + std::to_string(col) + ".csv");
}

void CampaignStore::write_file(const std::string& name, const std::string& text) const {
  const fs::path target = dir_ / name;
  const fs::path tmp = dir_ / (name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

void CampaignStore::write_manifest(const std::string& status) {
  const json doc{{"command", command_},
                 {"status", status},
                 {"cells_total", total_},
                 {"cells_done", done_},
                 {"seeding",
                  "trial base seed = derive_seed(master_seed, row, col, trial); stream seed = "
                  "derive_seed(base, tag) with tags weights=1, signal=2, matrix=3, noise=4, "
                  "prior_support=5"},
                 {"config", config_}};
  write_file("manifest.json", doc.dump(2) + "\n");
}

experiments::CampaignHooks CampaignStore::hooks(const std::atomic<bool>& stop) {
  experiments::CampaignHooks h;
  h.should_stop = [&stop]() { return stop.load(); };
  h.load_cell = [this](std::size_t row, std::size_t col)
      -> std::optional<std::vector<experiments::TrialRecord>> {
    const fs::path p = cell_path(row, col);
    if (!fs::exists(p)) return std::nullopt;
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot read checkpoint " + p.string());
    try {
      auto records = csv::read_trials_csv(in);
      ++resumed_;
      ++done_;
      return records;
    } catch (const csv::FormatError& e) {
      throw csv::FormatError("checkpoint " + p.string() + ": " + e.what());
    }
  };
  h.on_cell_done = [this](std::size_t row, std::size_t col,
                          const std::vector<experiments::TrialRecord>& records) {
    std::ostringstream text;
    csv::write_trials_csv(text, records);
    write_file(fs::relative(cell_path(row, col), dir_).string(), text.str());
    ++done_;
  };
  return h;
}

}  // namespace wcs::cli
