#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "smallcover/errors.hpp"

namespace smallcover {

/// Element of Z_2^3 written multiplicatively; the product is bitwise XOR.
/// Bit i is the coefficient of the basis vector e_{i+1}.
class Z2Vec {
 public:
  constexpr Z2Vec() : bits_(0) {}
  constexpr explicit Z2Vec(unsigned bits) : bits_(static_cast<uint8_t>(bits & 7u)) {}

  constexpr uint8_t bits() const { return bits_; }
  constexpr bool is_identity() const { return bits_ == 0; }

  friend constexpr Z2Vec operator*(Z2Vec a, Z2Vec b) { return Z2Vec(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(Z2Vec a, Z2Vec b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Z2Vec a, Z2Vec b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(Z2Vec a, Z2Vec b) { return a.bits_ < b.bits_; }

  std::string to_string() const;

 private:
  uint8_t bits_;
};

inline constexpr Z2Vec z2_identity{0};
inline constexpr Z2Vec e1{1};
inline constexpr Z2Vec e2{2};
inline constexpr Z2Vec e3{4};

/// All 8 elements in bit order.
constexpr std::array<Z2Vec, 8> z2_all() {
  return {Z2Vec(0), Z2Vec(1), Z2Vec(2), Z2Vec(3), Z2Vec(4), Z2Vec(5), Z2Vec(6), Z2Vec(7)};
}

/// Subgroup of Z_2^3: membership bitset over the 8 elements plus generators.
class SubgroupZ2 {
 public:
  SubgroupZ2();  // trivial subgroup
  explicit SubgroupZ2(const std::vector<Z2Vec>& generators);

  bool contains(Z2Vec g) const { return (members_ >> g.bits()) & 1u; }
  int order() const;
  int index() const { return 8 / order(); }
  const std::vector<Z2Vec>& generators() const { return generators_; }
  std::vector<Z2Vec> elements() const;

 private:
  uint8_t members_;  // bit m set iff mask m belongs to the subgroup
  std::vector<Z2Vec> generators_;
};

/// Invertible linear map Z_2^3 -> Z_2^3, stored as images of e1,e2,e3.
class LinearMapZ2 {
 public:
  LinearMapZ2() : images_{e1, e2, e3} {}
  LinearMapZ2(Z2Vec im1, Z2Vec im2, Z2Vec im3) : images_{im1, im2, im3} {}

  Z2Vec apply(Z2Vec v) const {
    uint8_t out = 0;
    for (int i = 0; i < 3; ++i)
      if ((v.bits() >> i) & 1u) out ^= images_[static_cast<size_t>(i)].bits();
    return Z2Vec(out);
  }
  const std::array<Z2Vec, 3>& images() const { return images_; }

  /// All 168 invertible substitutions, in deterministic order.
  static const std::vector<LinearMapZ2>& all_invertible();

 private:
  std::array<Z2Vec, 3> images_;
};

/// True iff a, b, c span Z_2^3.
bool independent_triple(Z2Vec a, Z2Vec b, Z2Vec c);

}  // namespace smallcover
