#include "fif/filters.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

#include "fif/error.hpp"
#include "parse_util.hpp"

namespace fif {

namespace {

// Cubic B-spline on [-2, 2], the triangle 1 - |x| convolved with itself
// after squeezing each factor onto [-1/2, 1/2] and rescaling to [-1, 1].
double cubic_bspline(double x) {
  x = std::abs(x);
  if (x <= 1.0) return 2.0 / 3.0 - x * x + 0.5 * x * x * x;
  if (x <= 2.0) {
    const double r = 2.0 - x;
    return r * r * r / 6.0;
  }
  return 0.0;
}

void check_normalized(const std::vector<double>& w) {
  double sum = 0.0;
  for (double v : w) sum += v;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(Errc::DegenerateFilter, "filter weights sum to " + std::to_string(sum));
  }
}

}  // namespace

FilterShape FilterShape::triangular() { return FilterShape(FilterKind::Triangular); }

FilterShape FilterShape::triangular_self_convolved() {
  return FilterShape(FilterKind::TriangularSelfConvolved);
}

FilterShape FilterShape::tabulated(std::vector<TablePoint> table) {
  if (table.empty()) throw Error(Errc::InvalidFilterTable, "filter table is empty");
  for (const auto& p : table) {
    if (!std::isfinite(p.t) || p.t < -1.0 || p.t > 1.0) {
      throw Error(Errc::InvalidFilterTable, "filter abscissa outside [-1, 1]: " + std::to_string(p.t));
    }
    if (!std::isfinite(p.weight) || p.weight < 0.0) {
      throw Error(Errc::InvalidFilterTable, "filter weight must be finite and nonnegative");
    }
  }
  std::sort(table.begin(), table.end(), [](const TablePoint& a, const TablePoint& b) { return a.t < b.t; });
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i].t == table[i - 1].t) {
      throw Error(Errc::InvalidFilterTable, "duplicate filter abscissa " + std::to_string(table[i].t));
    }
  }
  FilterShape shape(FilterKind::Tabulated);
  shape.table_ = std::move(table);
  return shape;
}

double FilterShape::interpolate(double t) const {
  if (t < table_.front().t || t > table_.back().t) return 0.0;
  auto hi = std::lower_bound(table_.begin(), table_.end(), t,
                             [](const TablePoint& p, double v) { return p.t < v; });
  if (hi->t == t) return hi->weight;
  auto lo = hi - 1;
  const double u = (t - lo->t) / (hi->t - lo->t);
  return lo->weight + u * (hi->weight - lo->weight);
}

double FilterShape::operator()(double t) const {
  if (!(std::abs(t) <= 1.0)) return 0.0;
  switch (kind_) {
    case FilterKind::Triangular:
      return 1.0 - std::abs(t);
    case FilterKind::TriangularSelfConvolved:
      return cubic_bspline(2.0 * t) / cubic_bspline(0.0);
    case FilterKind::Tabulated:
      return 0.5 * (interpolate(t) + interpolate(-t));
  }
  return 0.0;
}

FilterShape parse_filter_table(std::istream& in) {
  std::vector<TablePoint> table;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_line(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    double t = 0.0;
    double w = 0.0;
    const bool ok = comma != std::string::npos && detail::parse_double(line.substr(0, comma), t) &&
                    detail::parse_double(line.substr(comma + 1), w);
    if (!ok) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw Error(Errc::ParseError, "filter table line " + std::to_string(line_no) + ": expected 't,weight'");
    }
    first = false;
    table.push_back({t, w});
  }
  return FilterShape::tabulated(std::move(table));
}

FilterShape load_filter_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open filter table " + path.string());
  return parse_filter_table(in);
}

DiscreteFilter DiscreteFilter::from_weights(std::vector<double> weights, std::size_t half_support,
                                            bool doubly_convolved) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(Errc::DegenerateFilter, "empty filter row");
  if (half_support > n / 2) {
    throw Error(Errc::SupportTooLarge, "half support exceeds half the period");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(weights[j]) || weights[j] < 0.0) {
      throw Error(Errc::DegenerateFilter, "filter weights must be finite and nonnegative");
    }
    if (j > 0 && weights[j] != weights[n - j]) {
      throw Error(Errc::AsymmetryDetected, "filter row is not symmetric at index " + std::to_string(j));
    }
    if (std::min(j, n - j) > half_support && weights[j] != 0.0) {
      throw Error(Errc::SupportTooLarge, "nonzero weight outside the declared half support");
    }
  }
  check_normalized(weights);
  DiscreteFilter f;
  f.weights_ = std::move(weights);
  f.half_support_ = half_support;
  f.convolution_order_ = doubly_convolved ? 2 : 1;
  return f;
}

DiscreteFilter sample_filter(const FilterShape& shape, std::size_t half_support, std::size_t period) {
  if (half_support < 1) throw Error(Errc::SupportTooLarge, "half support must be at least 1");
  if (2 * half_support + 1 > period) {
    throw Error(Errc::SupportTooLarge, "support 2*" + std::to_string(half_support) +
                                           "+1 does not fit period " + std::to_string(period));
  }
  std::vector<double> w(period, 0.0);
  const double l = static_cast<double>(half_support);
  double sum = 0.0;
  for (std::size_t j = 0; j <= half_support; ++j) {
    const double v = shape(static_cast<double>(j) / l);
    w[j] = v;
    if (j > 0) w[period - j] = v;
    sum += j == 0 ? v : 2.0 * v;
  }
  if (!(sum > 0.0)) throw Error(Errc::DegenerateFilter, "all sampled filter weights are zero");
  for (double& v : w) v /= sum;

  DiscreteFilter f;
  f.weights_ = std::move(w);
  f.half_support_ = half_support;
  f.convolution_order_ = 1;
  f.source_kind_ = shape.kind();
  f.builtin_source_ = shape.kind() != FilterKind::Tabulated;
  return f;
}

DiscreteFilter self_convolve(const DiscreteFilter& filter) {
  const std::size_t n = filter.period();
  const std::size_t l = filter.half_support();
  if (4 * l + 1 > n) {
    throw Error(Errc::SupportTooLarge, "self-convolved support 4*" + std::to_string(l) +
                                           "+1 does not fit period " + std::to_string(n));
  }
  const auto w = filter.weights();
  const auto at = [&](long offset) {
    const long nn = static_cast<long>(n);
    return w[static_cast<std::size_t>(((offset % nn) + nn) % nn)];
  };
  const long L = static_cast<long>(l);
  std::vector<double> c(n, 0.0);
  double sum = 0.0;
  for (long d = 0; d <= 2 * L; ++d) {
    double acc = 0.0;
    for (long a = std::max(-L, d - L); a <= std::min(L, d + L); ++a) acc += at(a) * at(d - a);
    c[static_cast<std::size_t>(d)] = acc;
    if (d > 0) c[n - static_cast<std::size_t>(d)] = acc;
    sum += d == 0 ? acc : 2.0 * acc;
  }
  for (double& v : c) v /= sum;

  DiscreteFilter out;
  out.weights_ = std::move(c);
  out.half_support_ = 2 * l;
  out.convolution_order_ = 2 * filter.convolution_order_;
  out.source_kind_ = filter.source_kind_;
  out.builtin_source_ = filter.builtin_source_;
  return out;
}

}  // namespace fif
