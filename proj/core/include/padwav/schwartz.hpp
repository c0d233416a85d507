#pragma once

#include <complex>
#include <map>
#include <string>

#include "padwav/ball.hpp"

namespace padwav {

using Complex = std::complex<double>;

/// A locally constant, compactly supported function on Q_p, stored as a
/// finite set of disjoint balls of one common scale with a value per ball.
/// The function vanishes off the listed balls. Cells with value exactly 0
/// are never stored.
class SchwartzFunction {
 public:
  using CellMap = std::map<Ball, Complex>;

  /// The zero function with resolution `scale`.
  SchwartzFunction(int p, int scale);

  /// Adds a cell. Throws DomainError on scale/prime mismatch or when the ball
  /// is already listed. A zero value is accepted and dropped.
  void insert(const Ball& ball, Complex value);

  int prime() const noexcept { return p_; }
  int scale() const noexcept { return scale_; }
  const CellMap& cells() const noexcept { return cells_; }
  bool empty() const noexcept { return cells_.empty(); }
  std::size_t size() const noexcept { return cells_.size(); }

  /// Smallest R with the support inside p^{-R} Z_p. Requires a nonempty function.
  int support_exponent() const;
  /// Value on the listed ball containing `ball` (ball at this scale or finer); 0 if none.
  Complex value_on(const Ball& ball) const;

 private:
  int p_;
  int scale_;
  CellMap cells_;
};

SchwartzFunction indicator(const Ball& ball);

/// Splits every cell into its p^{k'-k} descendants at scale k'.
SchwartzFunction refine_to_scale(const SchwartzFunction& f, int scale);

/// Merges complete sibling groups with identical values for as long as every
/// group merges; the result is the coarsest equal-scale representation.
/// The empty function is returned unchanged.
SchwartzFunction coarsen(const SchwartzFunction& f);

/// Value at x; requires the digits of x below f.scale() to be known.
Complex evaluate(const SchwartzFunction& f, const PAdic& x);

/// alpha f + beta g on the common refinement, pruning exact zeros.
SchwartzFunction linear_combine(Complex alpha, const SchwartzFunction& f, Complex beta,
                                const SchwartzFunction& g);
SchwartzFunction scaled(Complex alpha, const SchwartzFunction& f);

/// <f, g> = integral of conj(f) g, accumulated over the finer function's
/// cells in canonical order.
Complex inner_product(const SchwartzFunction& f, const SchwartzFunction& g);
double norm_sq(const SchwartzFunction& f);
Complex integral(const SchwartzFunction& f);

/// G(a, b) f (x) = |a|_p^{-1/2} f((x - b) / a). Every cell B maps to a B + b.
SchwartzFunction affine_act(const PAdic& a, const PAdic& b, const SchwartzFunction& f);

/// Same function, compared exactly after coarsening both sides.
bool same_function(const SchwartzFunction& f, const SchwartzFunction& g);

/// Function file format: {"p":..,"scale":..,"cells":[{"center":"<literal>","value":[re,im]}]}.
/// Throws ParseError on malformed documents or overlapping cells.
SchwartzFunction load_function(const std::string& json_text, int precision = kDefaultDigits);
std::string dump_function(const SchwartzFunction& f);

}  // namespace padwav
