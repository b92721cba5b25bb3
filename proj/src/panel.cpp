#include "jumpsync/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "jumpsync/errors.hpp"

namespace jumpsync {

void PricePanel::validate() const {
  const std::size_t t = etf_log_prices.size();
  if (t < 2) throw SchemaError("panel needs at least two grid points");
  if (log_prices.size() != asset_ids.size() || weights.size() != asset_ids.size())
    throw SchemaError("per-asset array count does not match asset_ids");
  for (std::size_t k = 0; k < log_prices.size(); ++k) {
    if (log_prices[k].size() != t)
      throw SchemaError("log price series length mismatch for asset " + asset_ids[k]);
    if (weights[k].size() != t)
      throw SchemaError("weight series length mismatch for asset " + asset_ids[k]);
    for (double w : weights[k])
      if (w < 0.0) throw SchemaError("negative index weight for asset " + asset_ids[k]);
  }
  if (grid_points_per_day > 0 && n_returns() % grid_points_per_day != 0)
    throw SchemaError("panel length is not a whole number of trading days");
}

std::vector<double> diff(const std::vector<double>& prices) {
  std::vector<double> r;
  if (prices.size() < 2) return r;
  r.resize(prices.size() - 1);
  for (std::size_t i = 0; i + 1 < prices.size(); ++i) r[i] = prices[i + 1] - prices[i];
  return r;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

double parse_double(const std::string& s, int line_no) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw SchemaError("row " + std::to_string(line_no) + ": bad numeric field '" + s + "'");
  return v;
}

long parse_long(const std::string& s, int line_no) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw SchemaError("row " + std::to_string(line_no) + ": bad integer field '" + s + "'");
  return v;
}

}  // namespace

PricePanel read_panel_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError("cannot open panel file " + file.string());

  struct Series {
    std::vector<double> prices;
    std::vector<double> weights;
    std::vector<char> seen;
    bool is_etf = false;
  };
  std::map<std::string, Series> by_asset;
  long max_time = -1;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("time_index", 0) == 0) continue;  // header
    auto fields = split_csv_line(line);
    if (fields.size() != 5)
      throw SchemaError("row " + std::to_string(line_no) + ": expected 5 fields, got " +
                        std::to_string(fields.size()));
    const long t = parse_long(fields[0], line_no);
    if (t < 0) throw SchemaError("row " + std::to_string(line_no) + ": negative time_index");
    const std::string& id = fields[1];
    const double price = parse_double(fields[2], line_no);
    const long etf_flag = parse_long(fields[3], line_no);
    const double weight = parse_double(fields[4], line_no);

    Series& s = by_asset[id];
    if (etf_flag != 0) s.is_etf = true;
    if (static_cast<std::size_t>(t) >= s.prices.size()) {
      s.prices.resize(t + 1, 0.0);
      s.weights.resize(t + 1, 0.0);
      s.seen.resize(t + 1, 0);
    }
    if (s.seen[t])
      throw SchemaError("row " + std::to_string(line_no) + ": duplicate (time_index, asset_id)");
    s.seen[t] = 1;
    s.prices[t] = price;
    s.weights[t] = weight;
    max_time = std::max(max_time, t);
  }
  if (max_time < 1) throw SchemaError("panel file has no usable rows");

  PricePanel panel;
  int n_etf = 0;
  for (auto& [id, s] : by_asset) {
    if (static_cast<long>(s.prices.size()) != max_time + 1 ||
        std::find(s.seen.begin(), s.seen.end(), 0) != s.seen.end())
      throw SchemaError("asset " + id + " does not cover the full time grid");
    if (s.is_etf) {
      ++n_etf;
      panel.etf_id = id;
      panel.etf_log_prices = std::move(s.prices);
    } else {
      panel.asset_ids.push_back(id);
      panel.log_prices.push_back(std::move(s.prices));
      panel.weights.push_back(std::move(s.weights));
    }
  }
  if (n_etf != 1)
    throw SchemaError("panel must contain exactly one is_etf=1 asset, found " +
                      std::to_string(n_etf));
  panel.validate();
  return panel;
}

void write_panel_csv(const PricePanel& panel, const std::filesystem::path& file) {
  panel.validate();
  std::FILE* out = std::fopen(file.string().c_str(), "w");
  if (!out) throw SchemaError("cannot open output file " + file.string());
  std::fputs("time_index,asset_id,log_price,is_etf,weight\n", out);
  const int t_count = panel.n_times();
  for (int t = 0; t < t_count; ++t) {
    for (int k = 0; k < panel.n_assets(); ++k)
      std::fprintf(out, "%d,%s,%.17g,0,%.17g\n", t, panel.asset_ids[k].c_str(),
                   panel.log_prices[k][t], panel.weights[k][t]);
    std::fprintf(out, "%d,%s,%.17g,1,1\n", t, panel.etf_id.c_str(), panel.etf_log_prices[t]);
  }
  std::fclose(out);
}

}  // namespace jumpsync
