#pragma once

#include <pbundle/chern_segre.hpp>
#include <pbundle/constraints.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pbundle {

/// Formula for a bundle on P^n built from the standard atoms.
class BundleExpr {
 public:
  enum class Kind { trivial, line, tangent_twist, p_of_line, omega_two, wedge2_tangent_twist, direct_sum, quotient_by_trivial };

  static BundleExpr trivial(int k);
  static BundleExpr line(const Integer& degree);
  /// T(-1) = P_{O(1)}.
  static BundleExpr tangent_twist();
  /// Dual of the kernel of H^0(O(b)) (x) O -> O(b).
  static BundleExpr p_of_line(int b);
  /// Omega(2).
  static BundleExpr omega_two();
  static BundleExpr wedge2_tangent_twist();
  static BundleExpr direct_sum(std::vector<BundleExpr> parts);
  static BundleExpr quotient_by_trivial(BundleExpr inner, int k);

  Kind kind() const noexcept { return kind_; }
  /// Throws RankUnderflow on an illegal quotient.
  int rank(int n) const;
  std::string to_string() const;

  friend ChernData chern_of(const BundleExpr& expr, int n);

 private:
  BundleExpr(Kind kind, Integer param) : kind_(kind), param_(std::move(param)) {}
  Kind kind_;
  Integer param_;
  std::vector<BundleExpr> children_;
};

ChernData chern_of(const BundleExpr& expr, int n);

/// Chern classes of the exterior square of a bundle with classes c and the given rank.
ChernData wedge2_chern(const ChernData& c, int rank);

struct ExampleRecord {
  int example_id = 0;
  /// "", "i" or "ii".
  std::string part;
  /// Quotient size k (ids 1-3) or number of trivial summands (id 0).
  std::optional<int> k;
  std::string key;
  std::string y_description;
  std::string w_description;
  BundleExpr bundle = BundleExpr::trivial(1);
  SetupParams params;
  std::vector<std::string> notes;
};

/// Every family with its variants; families indexed by n are instantiated for n <= max_n.
std::vector<ExampleRecord> catalog(int max_n = 6);

/// Records matching id (and k / n when given), each with its run_all report.
/// Throws InvalidInput if nothing matches.
std::vector<std::pair<ExampleRecord, ConstraintReport>> verify_example(int id, std::optional<int> k = std::nullopt,
                                                                       std::optional<int> n = std::nullopt, int max_n = 6);

Integer catalan(long k);

}  // namespace pbundle
