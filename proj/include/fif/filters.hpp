#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace fif {

enum class FilterKind { Triangular, TriangularSelfConvolved, Tabulated };

struct TablePoint {
  double t = 0.0;
  double weight = 0.0;
};

/// Continuous filter shape on [-1, 1]: nonnegative, even, zero outside.
///
/// Triangular is 1 - |t|. TriangularSelfConvolved is the triangle of
/// half-width 1/2 convolved with itself (a cubic B-spline stretched onto
/// [-1, 1]), normalized to 1 at t = 0. Tabulated shapes are linearly
/// interpolated between the given abscissae and symmetrized as
/// (f(t) + f(-t)) / 2.
class FilterShape {
 public:
  static FilterShape triangular();
  static FilterShape triangular_self_convolved();
  /// Throws Errc::InvalidFilterTable on empty tables, abscissae outside
  /// [-1, 1], duplicate abscissae, or negative / non-finite weights.
  static FilterShape tabulated(std::vector<TablePoint> table);

  FilterKind kind() const noexcept { return kind_; }
  std::span<const TablePoint> table() const noexcept { return table_; }

  double operator()(double t) const;

 private:
  explicit FilterShape(FilterKind kind) : kind_(kind) {}
  double interpolate(double t) const;

  FilterKind kind_ = FilterKind::Triangular;
  std::vector<TablePoint> table_;  // sorted by t
};

/// Reads a two-column `t,weight` CSV. A non-numeric first line is treated as
/// a header. Rows may come in any order.
FilterShape parse_filter_table(std::istream& in);
FilterShape load_filter_table(const std::filesystem::path& path);

/// Symmetric, nonnegative, row-stochastic weight vector of length n: the first
/// row of the circulant averaging operator. weights()[0] is the center weight
/// and weights()[n - j] == weights()[j].
class DiscreteFilter {
 public:
  /// Validates an externally supplied row. The row must be nonnegative,
  /// exactly symmetric, sum to 1 within 1e-12 and vanish beyond half_support
  /// (which may be at most n / 2).
  static DiscreteFilter from_weights(std::vector<double> weights, std::size_t half_support,
                                     bool doubly_convolved);

  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t period() const noexcept { return weights_.size(); }
  std::size_t half_support() const noexcept { return half_support_; }
  bool doubly_convolved() const noexcept { return convolution_order_ >= 2; }
  double center_weight() const noexcept { return weights_.front(); }

  /// Shape the row was sampled from. Rows built by from_weights report
  /// Tabulated with builtin_source() == false.
  FilterKind source_kind() const noexcept { return source_kind_; }
  bool builtin_source() const noexcept { return builtin_source_; }
  /// 1 for a sampled shape, doubled by every self_convolve.
  unsigned convolution_order() const noexcept { return convolution_order_; }

 private:
  DiscreteFilter() = default;

  friend DiscreteFilter sample_filter(const FilterShape&, std::size_t, std::size_t);
  friend DiscreteFilter self_convolve(const DiscreteFilter&);

  std::vector<double> weights_;
  std::size_t half_support_ = 0;
  unsigned convolution_order_ = 1;
  FilterKind source_kind_ = FilterKind::Tabulated;
  bool builtin_source_ = false;
};

/// Samples the shape at t_j = j / half_support for |j| <= half_support, lays
/// the samples out circularly and divides by their sum.
/// Errors: SupportTooLarge if 2 l + 1 > n, DegenerateFilter if every sample is 0.
DiscreteFilter sample_filter(const FilterShape& shape, std::size_t half_support, std::size_t period);

/// Circular self-convolution. The result has twice the half support and is
/// flagged doubly convolved. Errors: SupportTooLarge if 4 l + 1 > n.
DiscreteFilter self_convolve(const DiscreteFilter& filter);

}  // namespace fif
