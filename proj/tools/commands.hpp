#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parhiggs/json_codec.hpp"

namespace parhiggs::cli {

inline constexpr const char* kReportSchema = "parhiggs.report/1";

// Bad flag values or unreadable input files; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json verification = Json::object();

  bool verified() const;
  Json to_json(std::optional<long long> wall_ms) const;
};

struct CommonOptions {
  std::string points = "0,1,2,3";
  std::uint64_t seed = 1;
};

struct TablesOptions {
  std::string rule;
  std::string alpha;
  std::string mu;
  std::string lambda = "1";
  std::string hbar = "1";
  std::string radius = "1";
  int samples = 0;
};

struct ChambersOptions {
  int grid = 40;
  std::string slice;
  std::string csv;
  std::string golden_dir;
};

struct FixedPointsOptions {
  std::string alpha;
};

struct HitchinOptions {
  std::string alpha;
  std::string subset;
  std::string mu;
  std::string t;
  int kernel_point = 0;  // one-based, 0 for the default
};

struct StabilityOptions {
  std::string input;
};

struct ClimitOptions {
  std::string input;
  std::string filtration = "trivial";
};

struct ConeOptions {
  std::string alpha;
  std::string subset;
};

struct OperOptions {
  std::string input;
  std::string sub = "first";
  std::string line;
  std::string subset;
};

RunReport run_tables(const CommonOptions& common, const TablesOptions& o);
RunReport run_chambers(const CommonOptions& common, const ChambersOptions& o);
RunReport run_fixed_points(const CommonOptions& common, const FixedPointsOptions& o);
RunReport run_hitchin_section(const CommonOptions& common, const HitchinOptions& o);
RunReport run_stability(const CommonOptions& common, const StabilityOptions& o);
RunReport run_climit(const CommonOptions& common, const ClimitOptions& o);
RunReport run_cone(const CommonOptions& common, const ConeOptions& o);
RunReport run_oper_check(const CommonOptions& common, const OperOptions& o);

}  // namespace parhiggs::cli
