#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace goesv {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Raised when an input sits on the measure-zero set where a map is not a
/// diffeomorphism (ties, zero components, non-strict interlacing).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// n = 2m + mu, mhat = m + mu.
struct ParityFrame {
  int n = 0;
  int m = 0;
  int mhat = 0;
  int mu = 0;

  static ParityFrame of(int order) {
    if (order < 0) throw std::invalid_argument("ParityFrame: negative order");
    ParityFrame f;
    f.n = order;
    f.m = order / 2;
    f.mu = order % 2;
    f.mhat = f.m + f.mu;
    return f;
  }

  friend bool operator==(const ParityFrame&, const ParityFrame&) = default;
};

/// Values sorted in decreasing order, tagged with the order of the ensemble
/// they were drawn from.
template <typename Scalar>
struct Spectrum {
  Vector<Scalar> values;
  int order = 0;
  std::string_view tag;

  Index size() const { return values.size(); }
  Scalar operator[](Index i) const { return values[i]; }

  /// Sorts decreasingly; the input may be in any order.
  static Spectrum from_unsorted(Vector<Scalar> v, int order,
                                std::string_view tag = {}) {
    std::sort(v.data(), v.data() + v.size(), std::greater<Scalar>());
    return Spectrum{std::move(v), order, tag};
  }

  bool is_sorted() const {
    for (Index i = 0; i + 1 < values.size(); ++i)
      if (values[i] < values[i + 1]) return false;
    return true;
  }
};

using SortedSpectrum = Spectrum<double>;

}  // namespace goesv
