#include "fif/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace fif {

void RunReport::set_result(const Decomposition& d, std::span<const double> input) {
  imfs.clear();
  std::vector<double> sum(d.trend.samples().begin(), d.trend.samples().end());
  for (std::size_t k = 0; k < d.imfs.size(); ++k) {
    const auto& rec = d.imfs[k];
    ImfSummary e;
    e.index = k + 1;
    e.mask_length = rec.mask_length;
    e.iterations_used = rec.iterations_used;
    e.final_sd = rec.final_sd;
    e.max_abs_norm = max_abs(rec.imf.samples());
    e.significant = rec.significant;
    e.averaged_out = rec.averaged_out;
    char name[32];
    std::snprintf(name, sizeof name, "imf_%03zu.csv", k + 1);
    e.file = name;
    imfs.push_back(e);
    const auto x = rec.imf.samples();
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += x[i];
  }
  termination = std::string(to_string(d.termination));
  reconstruction_error = 0.0;
  for (std::size_t i = 0; i < sum.size() && i < input.size(); ++i) {
    reconstruction_error = std::max(reconstruction_error, std::abs(sum[i] - input[i]));
  }
}

std::string RunReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["input"] = {{"path", input_path}, {"format", input_format}, {"n", n}, {"checksum", checksum}};
  j["config"] = {{"filter", filter},
                 {"mask_strategy", mask_strategy},
                 {"nu", nu},
                 {"delta", delta},
                 {"max_inner_iterations", max_inner_iterations},
                 {"max_imfs", max_imfs},
                 {"eta", eta},
                 {"mode", mode},
                 {"gamma", gamma ? ordered_json(*gamma) : ordered_json(nullptr)}};
  ordered_json list = ordered_json::array();
  for (const auto& e : imfs) {
    list.push_back({{"index", e.index},
                    {"file", e.file},
                    {"mask_length", e.mask_length},
                    {"iterations_used", e.iterations_used},
                    {"final_sd", e.final_sd},
                    {"max_abs_norm", e.max_abs_norm},
                    {"significant", e.significant},
                    {"averaged_out", e.averaged_out}});
  }
  j["imfs"] = list;
  j["imf_count"] = imfs.size();
  j["termination"] = termination.empty() ? ordered_json(nullptr) : ordered_json(termination);
  j["reconstruction_max_abs_error"] = reconstruction_error;
  j["timings_s"] = {{"read", t_read}, {"decompose", t_decompose}, {"write", t_write}};
  j["exit_code"] = exit_code;
  j["error"] = error.empty() ? ordered_json(nullptr) : ordered_json(error);
  return j.dump(2) + "\n";
}

}  // namespace fif
