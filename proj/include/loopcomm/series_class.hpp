#pragma once

#include <optional>
#include <string>

namespace loopcomm {

// Length of a derived/lower central/upper central series, or INFINITE when
// the series stabilizes before reaching its target. INFINITE is a separate
// state, never an integer sentinel. `capped()` marks an INFINITE verdict that
// came from the iteration cap rather than from observed stabilization.
class SeriesClass {
 public:
  static SeriesClass finite(unsigned steps) { return SeriesClass(steps, false); }
  static SeriesClass infinite(bool capped = false) { return SeriesClass(std::nullopt, capped); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool capped() const noexcept { return capped_; }
  // Precondition: is_finite().
  unsigned value() const { return value_.value(); }

  // "inf" or the decimal value.
  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
  }

  // Order with INFINITE above every finite value; the cap flag is ignored.
  friend bool operator==(const SeriesClass& a, const SeriesClass& b) noexcept {
    return a.value_ == b.value_;
  }
  friend bool operator<=(const SeriesClass& a, const SeriesClass& b) noexcept {
    if (!b.value_) return true;
    return a.value_ && *a.value_ <= *b.value_;
  }

 private:
  SeriesClass(std::optional<unsigned> v, bool capped) : value_(v), capped_(capped) {}

  std::optional<unsigned> value_;
  bool capped_ = false;
};

inline constexpr unsigned kSeriesIterationCap = 60;

}  // namespace loopcomm
