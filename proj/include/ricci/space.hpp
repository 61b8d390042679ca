#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ricci {

/// Fully stored rank-3 array gamma(i, k, l) of structure constants over the
/// isotropy summands. Indices are 0-based. The array is meant to be symmetric
/// under every permutation of (i, k, l); `set` writes a single slot so that
/// asymmetric data can still be represented and reported by validation.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int summands);

  int summands() const noexcept { return s_; }

  double operator()(int i, int k, int l) const { return values_[index(i, k, l)]; }

  /// Writes one slot only.
  void set(int i, int k, int l, double value) { values_[index(i, k, l)] = value; }

  /// Writes the value into all six permutations of (i, k, l).
  void set_symmetric(int i, int k, int l, double value);

  /// Replaces each permutation orbit by its mean. Identity on symmetric data.
  void symmetrize();

  /// Largest |gamma(i,k,l) - gamma(p(i,k,l))| over all slots and permutations.
  double asymmetry() const;

  const std::vector<double>& raw() const noexcept { return values_; }

  bool operator==(const StructureConstants&) const = default;

 private:
  std::size_t index(int i, int k, int l) const {
    return (static_cast<std::size_t>(i) * s_ + k) * s_ + l;
  }

  int s_ = 0;
  std::vector<double> values_;
};

/// Structure data of a compact homogeneous space G/H with s pairwise
/// inequivalent irreducible isotropy summands, relative to a fixed
/// bi-invariant inner product Q.
struct HomogeneousSpace {
  std::string name;
  int s = 0;
  std::vector<int> dims;          // d_i
  std::vector<double> killing;    // b_i, with -B|m_i = b_i Q|m_i
  StructureConstants gamma;       // gamma_ik^l, stored as gamma(i, k, l)
  std::vector<double> casimir;    // zeta_i
  bool is_maximal = false;
  bool has_intermediate = false;  // K with k = h + m_1 exists
  std::string metadata;

  /// n = sum of d_i.
  int dimension() const;

  /// Shorthands for the s = 2 constants, 1-based as usually written.
  double g(int i, int k, int l) const { return gamma(i - 1, k - 1, l - 1); }
  double d(int i) const { return static_cast<double>(dims[i - 1]); }
  double b(int i) const { return killing[i - 1]; }
  double zeta(int i) const { return casimir[i - 1]; }

  bool operator==(const HomogeneousSpace&) const = default;
};

inline constexpr double kCatalogTolerance = 1e-12;

enum class ViolationKind {
  Shape,
  NonPositiveDimension,
  NegativeConstant,
  NonFinite,
  Asymmetry,
  Casimir,
  Maximality,
  Intermediate,
  TrivialAction,
};

struct Violation {
  ViolationKind kind;
  std::vector<int> indices;  // 1-based summand indices involved
  double residual = 0.0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string to_string() const;
};

/// Checks every algebraic invariant of the structure data. Total: malformed
/// input is reported, never thrown.
ValidationReport validate_space(const HomogeneousSpace& space,
                                double tol = kCatalogTolerance);

/// True when the isotropy action on m_1 is trivial: zeta_1 = 0 and d_1 = 1.
bool first_summand_trivial(const HomogeneousSpace& space, double tol = kCatalogTolerance);

/// SO(2m)/SU(m), with K = U(m); the action on m_1 is trivial. m >= 3.
HomogeneousSpace make_collapsing_example(int m);

/// SO(2m-1)/U(m-1), with K = SO(2m-2); the action on m_1 is nontrivial. m >= 3.
HomogeneousSpace make_noncollapsing_example(int m);

/// "SYN-1": a summand-symmetric space with maximal isotropy and three
/// Einstein ratios, used as a fixture for the maximal regime.
HomogeneousSpace make_synthetic_maximal();

/// Catalog lookup: so5-u2, so6-su3, syn-1, so2m-1-um-1:m=<k>, so2m-sum:m=<k>.
/// Throws DomainError for unknown names.
HomogeneousSpace catalog_space(const std::string& name);

/// Names of the fixed catalog entries (without the parametrized families).
std::vector<std::string> catalog_names();

enum class ValidationPolicy { Warn, Reject };

struct LoadOptions {
  ValidationPolicy policy = ValidationPolicy::Reject;
  double tolerance = kCatalogTolerance;
};

/// Parses a space-definition document (JSON). Gamma entries are canonicalized
/// over all index permutations. Throws ParseError, SchemaError or
/// ValidationError (under ValidationPolicy::Reject).
HomogeneousSpace parse_space(const std::string& text, const LoadOptions& options = {},
                             ValidationReport* report = nullptr);
HomogeneousSpace load_space(const std::string& path, const LoadOptions& options = {},
                            ValidationReport* report = nullptr);

std::string serialize_space(const HomogeneousSpace& space);
void save_space(const HomogeneousSpace& space, const std::string& path);

/// Parses a decimal number or a "p/q" rational.
double parse_number(const std::string& text);

}  // namespace ricci
