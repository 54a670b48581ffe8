#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace zslab {

using Coords = std::vector<long long>;

// Finite abelian group in invariant-factor form n1 | n2 | ... | nr.
// Construction canonicalizes any direct-sum presentation (via prime-power
// decomposition and regrouping), so equal groups have equal factor lists and
// can be compared or used as cache keys directly.
//
// Elements are coordinate vectors reduced modulo the factors, addressed by
// their mixed-radix index in [0, order): index = c1 + n1*(c2 + n2*(...)).
// Index 0 is the zero element. Dense element operations are only available
// when the order fits kMaxDenseOrder; the scalar invariants work for any
// size.
class Group {
 public:
  static constexpr long long kMaxDenseOrder = 4096;

  Group() = default;  // trivial group
  explicit Group(std::vector<long long> raw_factors);

  // Parses literals like "C2^4xC6" (case-insensitive, '^' repetition,
  // 'x' direct sum). "C1" denotes the trivial group.
  static Group parse(std::string_view literal);
  std::string literal() const;

  const std::vector<long long>& factors() const { return factors_; }
  long long order() const { return order_; }
  long long exponent() const { return exponent_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  // k: multiplicity of the exponent among the invariant factors; the maximal
  // k such that the group has a subgroup isomorphic to C_exponent^k.
  int cn_multiplicity() const { return cn_multiplicity_; }
  long long dstar() const { return dstar_; }

  bool operator==(const Group&) const = default;

  // --- dense element operations -------------------------------------------
  int size() const;  // order as int; throws std::domain_error beyond kMaxDenseOrder
  Coords coords(int index) const;
  int index(const Coords& coords) const;  // reduces coordinates modulo factors
  int add(int a, int b) const;
  int negate(int a) const;
  long long element_order(int a) const;
  // Subgroup generated by the given elements, as a sorted index list
  // (breadth-first closure under addition by generators and their negations).
  std::vector<int> span(const std::vector<int>& generators) const;
  std::vector<int> nonzero_elements() const;

  // Element literals: comma-separated coordinates in canonical factor order,
  // optionally wrapped in brackets: "1,0,3" or "[1,0,3]".
  Coords parse_element(std::string_view text) const;
  static std::string format_element(const Coords& coords);

 private:
  void check_dense() const;

  std::vector<long long> factors_;
  long long order_ = 1;
  long long exponent_ = 1;
  int cn_multiplicity_ = 0;
  long long dstar_ = 1;
};

}  // namespace zslab
