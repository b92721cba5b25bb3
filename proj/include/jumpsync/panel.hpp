#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace jumpsync {

/// Aligned multi-asset log-price grid with per-asset index weights and one
/// designated ETF series. All series share the same time grid; stock order
/// is fixed and used as the asset index throughout the library.
struct PricePanel {
  std::vector<std::string> asset_ids;           // stocks only
  std::string etf_id = "ETF";
  std::vector<std::vector<double>> log_prices;  // [asset][time]
  std::vector<double> etf_log_prices;           // [time]
  std::vector<std::vector<double>> weights;     // [asset][time]

  /// Returns per trading day; 0 means the whole panel is a single day.
  int grid_points_per_day = 0;

  int n_assets() const { return static_cast<int>(asset_ids.size()); }
  int n_times() const { return static_cast<int>(etf_log_prices.size()); }
  int n_returns() const { return n_times() > 0 ? n_times() - 1 : 0; }
  int returns_per_day() const {
    return grid_points_per_day > 0 ? grid_points_per_day : n_returns();
  }
  int n_days() const {
    return returns_per_day() > 0 ? n_returns() / returns_per_day() : 0;
  }
  int day_of_return(int i) const { return i / returns_per_day(); }

  /// Consistency checks (sizes, ETF presence, day granularity).
  /// Throws SchemaError on violation.
  void validate() const;
};

/// First differences of a log-price series.
std::vector<double> diff(const std::vector<double>& prices);

/// CSV schema: time_index,asset_id,log_price,is_etf,weight with exactly one
/// asset flagged is_etf=1 and one row per (time_index, asset_id).
PricePanel read_panel_csv(const std::filesystem::path& file);
void write_panel_csv(const PricePanel& panel, const std::filesystem::path& file);

}  // namespace jumpsync
