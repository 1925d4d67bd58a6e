#pragma once

#include <cstddef>
#include <span>
#include <optional>
#include <string>
#include <vector>

#include "fif/outer_loop.hpp"

namespace fif {

struct ImfSummary {
  std::size_t index = 0;  // 1-based, matches imf_%03d.csv
  std::size_t mask_length = 0;
  std::size_t iterations_used = 0;
  double final_sd = 0.0;
  double max_abs_norm = 0.0;
  bool significant = false;
  bool averaged_out = false;
  std::string file;
};

struct RunReport {
  std::string input_path;
  std::string input_format;
  std::size_t n = 0;
  std::string checksum;

  std::string filter;
  std::string mask_strategy;
  double nu = 0.0;
  double delta = 0.0;
  std::size_t max_inner_iterations = 0;
  std::size_t max_imfs = 0;
  double eta = 0.0;
  std::string mode;
  std::optional<double> gamma;

  std::vector<ImfSummary> imfs;
  std::string termination;
  double reconstruction_error = 0.0;

  double t_read = 0.0;
  double t_decompose = 0.0;
  double t_write = 0.0;

  int exit_code = 0;
  std::string error;  // empty on success

  void set_result(const Decomposition& d, std::span<const double> input);

  /// JSON text with a fixed key set; absent values are null.
  std::string to_json() const;
};

}  // namespace fif
