#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace toughspec {

/// Nonnegative rational num/den in lowest terms, or the distinguished
/// infinite value that exceeds every finite ratio.
class ExactRatio {
 public:
  constexpr ExactRatio() = default;
  ExactRatio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("ratio denominator must be positive");
    if (num < 0) throw std::invalid_argument("ratio numerator must be nonnegative");
    const auto g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }
  static constexpr ExactRatio infinite() {
    ExactRatio r;
    r.infinite_ = true;
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinite() const { return infinite_; }
  double to_double() const;
  /// "num/den", "num" when den == 1, or "inf".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

ExactRatio parse_ratio(const std::string& text);

}  // namespace toughspec
