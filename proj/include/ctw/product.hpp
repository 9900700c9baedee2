#pragma once

#include "ctw/laurent.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace ctw {

/// sign * q^qshift * x^exps
struct MonomialFactor {
  int sign = 1;
  Exponents exps;
  int qshift = 0;
};

/// (q^qshift * x_i / x_j)_order = prod_{t<order} (1 - q^{qshift+t} x_i/x_j)
struct PochhammerFactor {
  int i = 0;
  int j = 1;
  int qshift = 0;
  int order = 0;
};

using Factor = std::variant<MonomialFactor, PochhammerFactor>;

struct ProductSpec {
  int nvars = 0;
  std::vector<Factor> factors;

  ProductSpec& monomial(Exponents exps, int sign = 1, int qshift = 0);
  ProductSpec& pochhammer(int i, int j, int qshift, int order);

  /// Throws std::invalid_argument naming the first bad factor.
  void validate() const;
};

inline constexpr std::uint64_t kDefaultTermCeiling = 5'000'000;

class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the number of terms of the expanded product and of every
/// partial product along the way: lattice points with zero coordinate sum in
/// the exponent box spanned by the Pochhammer factors. Saturates at UINT64_MAX.
std::uint64_t estimate_terms(const ProductSpec& spec);

/// Expands the product in factor order. Throws CeilingExceeded when the
/// estimate (or, defensively, any intermediate size) passes `ceiling`.
LaurentPoly build_product(const ProductSpec& spec, std::uint64_t ceiling = kDefaultTermCeiling);

using Pair = std::pair<int, int>;

/// prod_{i != j} (1 - x_i/x_j)^{a_i} over 0 <= i, j < a.size().
ProductSpec dyson_classical_spec(std::span<const int> a);
/// prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}.
ProductSpec andrews_spec(std::span<const int> a);
/// D_n: prod_{0<=i<j<=n} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j - 1}; needs a_j >= 1 for j >= 1.
ProductSpec dn_spec(std::span<const int> a);
/// prod_{1<=i<j<=n} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j - 1} over variables x_0..x_n,
/// with x_0 absent. `a` holds a_1..a_n.
ProductSpec bg_spec(std::span<const int> a);

LaurentPoly dyson_product_classical(std::span<const int> a, std::uint64_t ceiling = kDefaultTermCeiling);
LaurentPoly andrews_product(std::span<const int> a, std::uint64_t ceiling = kDefaultTermCeiling);
LaurentPoly dn_product(std::span<const int> a, std::uint64_t ceiling = kDefaultTermCeiling);

/// prod_{(i,j) in pairs} x_j/x_i, times x_num/x_den when `extra` is given.
LaurentPoly monomial_prefactor(int nvars, std::span<const Pair> pairs,
                               std::optional<Pair> extra = std::nullopt);

}  // namespace ctw
