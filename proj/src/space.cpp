#include "ricci/space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

std::array<std::array<int, 3>, 6> permutations(int i, int k, int l) {
  return {{{i, k, l}, {i, l, k}, {k, i, l}, {k, l, i}, {l, i, k}, {l, k, i}}};
}

const char* kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Shape: return "shape";
    case ViolationKind::NonPositiveDimension: return "dimension";
    case ViolationKind::NegativeConstant: return "negative";
    case ViolationKind::NonFinite: return "non-finite";
    case ViolationKind::Asymmetry: return "symmetry";
    case ViolationKind::Casimir: return "casimir";
    case ViolationKind::Maximality: return "maximality";
    case ViolationKind::Intermediate: return "intermediate";
    case ViolationKind::TrivialAction: return "trivial-action";
  }
  return "unknown";
}

}  // namespace

StructureConstants::StructureConstants(int summands)
    : s_(summands), values_(static_cast<std::size_t>(summands) * summands * summands, 0.0) {}

void StructureConstants::set_symmetric(int i, int k, int l, double value) {
  for (const auto& p : permutations(i, k, l)) set(p[0], p[1], p[2], value);
}

void StructureConstants::symmetrize() {
  std::vector<double> out(values_.size());
  for (int i = 0; i < s_; ++i)
    for (int k = 0; k < s_; ++k)
      for (int l = 0; l < s_; ++l) {
        double sum = 0.0;
        for (const auto& p : permutations(i, k, l)) sum += (*this)(p[0], p[1], p[2]);
        out[index(i, k, l)] = sum / 6.0;
      }
  // Exactly symmetric orbits keep their bits; averaging six equal doubles can
  // otherwise perturb the last place.
  for (std::size_t n = 0; n < out.size(); ++n) {
    int i = static_cast<int>(n / (static_cast<std::size_t>(s_) * s_));
    int k = static_cast<int>((n / s_) % s_);
    int l = static_cast<int>(n % s_);
    bool equal = true;
    for (const auto& p : permutations(i, k, l))
      equal = equal && (*this)(p[0], p[1], p[2]) == values_[n];
    if (equal) out[n] = values_[n];
  }
  values_ = std::move(out);
}

double StructureConstants::asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < s_; ++i)
    for (int k = 0; k < s_; ++k)
      for (int l = 0; l < s_; ++l)
        for (const auto& p : permutations(i, k, l))
          worst = std::max(worst, std::abs((*this)(i, k, l) - (*this)(p[0], p[1], p[2])));
  return worst;
}

int HomogeneousSpace::dimension() const {
  int n = 0;
  for (int d : dims) n += d;
  return n;
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << kind_name(v.kind);
    if (!v.indices.empty()) {
      out << "[";
      for (std::size_t n = 0; n < v.indices.size(); ++n) out << (n ? "," : "") << v.indices[n];
      out << "]";
    }
    out << ": " << v.message;
    if (v.residual != 0.0) out << " (residual " << v.residual << ")";
    out << "\n";
  }
  return out.str();
}

ValidationReport validate_space(const HomogeneousSpace& space, double tol) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::vector<int> idx, double residual, std::string msg) {
    report.violations.push_back({kind, std::move(idx), residual, std::move(msg)});
  };

  const int s = space.s;
  if (s < 1) {
    add(ViolationKind::Shape, {}, 0.0, "s must be at least 1");
    return report;
  }
  const auto su = static_cast<std::size_t>(s);
  if (space.dims.size() != su) add(ViolationKind::Shape, {}, 0.0, "dims must have s entries");
  if (space.killing.size() != su) add(ViolationKind::Shape, {}, 0.0, "killing must have s entries");
  if (space.casimir.size() != su) add(ViolationKind::Shape, {}, 0.0, "casimir must have s entries");
  if (space.gamma.summands() != s) add(ViolationKind::Shape, {}, 0.0, "gamma must be s x s x s");
  if (!report.ok()) return report;

  bool finite = true;
  for (int i = 0; i < s; ++i) {
    if (space.dims[i] <= 0)
      add(ViolationKind::NonPositiveDimension, {i + 1}, space.dims[i], "d_i must be positive");
    for (double v : {space.killing[i], space.casimir[i]}) {
      if (!std::isfinite(v)) {
        finite = false;
        add(ViolationKind::NonFinite, {i + 1}, 0.0, "b_i and zeta_i must be finite");
      } else if (v < 0.0) {
        add(ViolationKind::NegativeConstant, {i + 1}, v, "b_i and zeta_i must be non-negative");
      }
    }
  }
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < s; ++k)
      for (int l = 0; l < s; ++l) {
        double v = space.gamma(i, k, l);
        if (!std::isfinite(v)) {
          finite = false;
          add(ViolationKind::NonFinite, {i + 1, k + 1, l + 1}, 0.0, "gamma entry must be finite");
        } else if (v < 0.0) {
          add(ViolationKind::NegativeConstant, {i + 1, k + 1, l + 1}, v,
              "gamma entries must be non-negative");
        }
      }
  if (!finite) return report;

  std::set<std::pair<std::array<int, 3>, std::array<int, 3>>> seen;
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < s; ++k)
      for (int l = 0; l < s; ++l)
        for (const auto& p : permutations(i, k, l)) {
          std::array<int, 3> a{i, k, l};
          if (!(a < p) || !seen.insert({a, p}).second) continue;
          double diff = space.gamma(i, k, l) - space.gamma(p[0], p[1], p[2]);
          if (std::abs(diff) > tol) {
            std::ostringstream msg;
            msg << "gamma(" << i + 1 << "," << k + 1 << "," << l + 1 << ") != gamma(" << p[0] + 1
                << "," << p[1] + 1 << "," << p[2] + 1 << ")";
            add(ViolationKind::Asymmetry, {i + 1, k + 1, l + 1, p[0] + 1, p[1] + 1, p[2] + 1},
                diff, msg.str());
          }
        }

  for (int i = 0; i < s; ++i) {
    if (space.dims[i] <= 0) continue;
    double sum = 0.0;
    for (int k = 0; k < s; ++k)
      for (int l = 0; l < s; ++l) sum += space.gamma(i, k, l);
    double residual = space.killing[i] - 2.0 * space.casimir[i] - sum / space.dims[i];
    if (std::abs(residual) > tol)
      add(ViolationKind::Casimir, {i + 1}, residual, "b_i != 2 zeta_i + (1/d_i) sum_kl gamma_ik^l");
  }

  if (space.is_maximal) {
    for (int i = 0; i < s; ++i) {
      bool found = false;
      for (int k = 0; k < s; ++k)
        if (k != i && space.gamma(i, i, k) > 0.0) found = true;
      if (!found)
        add(ViolationKind::Maximality, {i + 1}, 0.0,
            "maximal isotropy requires gamma_ii^k > 0 for some k != i");
    }
  }

  if (space.has_intermediate) {
    if (s != 2) {
      add(ViolationKind::Intermediate, {}, 0.0, "intermediate subgroup flag requires s = 2");
    } else {
      if (std::abs(space.gamma(0, 0, 1)) > tol)
        add(ViolationKind::Intermediate, {1, 1, 2}, space.gamma(0, 0, 1),
            "intermediate subgroup requires gamma_11^2 = 0");
      if (space.is_maximal)
        add(ViolationKind::Intermediate, {}, 0.0,
            "is_maximal and has_intermediate are mutually exclusive");
    }
  }

  for (int i = 0; i < s; ++i)
    if (std::abs(space.casimir[i]) <= tol && space.dims[i] != 1)
      add(ViolationKind::TrivialAction, {i + 1}, space.dims[i],
          "zeta_i = 0 forces d_i = 1");

  return report;
}

bool first_summand_trivial(const HomogeneousSpace& space, double tol) {
  return !space.casimir.empty() && std::abs(space.casimir[0]) <= tol && space.dims[0] == 1;
}

HomogeneousSpace make_collapsing_example(int m) {
  if (m < 3) throw DomainError("make_collapsing_example: m must be >= 3");
  const double mm = static_cast<double>(m) * m - m;
  HomogeneousSpace sp;
  sp.name = "SO(" + std::to_string(2 * m) + ")/SU(" + std::to_string(m) + ")";
  sp.s = 2;
  sp.dims = {1, m * m - m};
  sp.killing = {1.0, 1.0};
  sp.gamma = StructureConstants(2);
  sp.gamma.set_symmetric(1, 1, 0, 1.0);
  sp.casimir = {0.0, (mm - 2.0) / (2.0 * mm)};
  sp.is_maximal = false;
  sp.has_intermediate = true;
  sp.metadata = "K = U(" + std::to_string(m) + "); Q = -B; trivial isotropy action on m_1";
  return sp;
}

HomogeneousSpace make_noncollapsing_example(int m) {
  if (m < 3) throw DomainError("make_noncollapsing_example: m must be >= 3");
  const int d1 = (m - 1) * (m - 2);
  const int d2 = 2 * (m - 1);
  const double g221 = static_cast<double>(d1) / (2 * m - 3);
  HomogeneousSpace sp;
  sp.name = "SO(" + std::to_string(2 * m - 1) + ")/U(" + std::to_string(m - 1) + ")";
  sp.s = 2;
  sp.dims = {d1, d2};
  sp.killing = {1.0, 1.0};
  sp.gamma = StructureConstants(2);
  sp.gamma.set_symmetric(1, 1, 0, g221);
  // zeta_2 is fixed by the Casimir identity with b_2 = 1:
  // 1 = 2 zeta_2 + (1/d_2)(gamma_21^2 + gamma_22^1) = 2 zeta_2 + 2 gamma_22^1 / d_2.
  sp.casimir = {static_cast<double>(m - 2) / (2 * m - 3), 0.5 * (1.0 - 2.0 * g221 / d2)};
  sp.is_maximal = false;
  sp.has_intermediate = true;
  sp.metadata = "K = SO(" + std::to_string(2 * m - 2) + "); Q = -B; zeta_2 from Casimir identity";
  return sp;
}

HomogeneousSpace make_synthetic_maximal() {
  HomogeneousSpace sp;
  sp.name = "SYN-1";
  sp.s = 2;
  sp.dims = {3, 3};
  sp.killing = {1.0, 1.0};
  sp.gamma = StructureConstants(2);
  sp.gamma.set_symmetric(0, 0, 1, 0.5);
  sp.gamma.set_symmetric(1, 1, 0, 0.5);
  sp.casimir = {0.25, 0.25};
  sp.is_maximal = true;
  sp.has_intermediate = false;
  sp.metadata = "synthetic maximal-isotropy fixture, symmetric under 1 <-> 2";
  return sp;
}

namespace {

int parse_family_parameter(const std::string& name, const std::string& prefix) {
  const std::string rest = name.substr(prefix.size());
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(rest, &used);
  } catch (const std::exception&) {
    throw DomainError("bad catalog parameter in '" + name + "'");
  }
  if (used != rest.size()) throw DomainError("bad catalog parameter in '" + name + "'");
  return m;
}

}  // namespace

HomogeneousSpace catalog_space(const std::string& name) {
  if (name == "so5-u2") return make_noncollapsing_example(3);
  if (name == "so6-su3") return make_collapsing_example(3);
  if (name == "syn-1") return make_synthetic_maximal();
  const std::string noncollapsing = "so2m-1-um-1:m=";
  const std::string collapsing = "so2m-sum:m=";
  if (name.rfind(noncollapsing, 0) == 0)
    return make_noncollapsing_example(parse_family_parameter(name, noncollapsing));
  if (name.rfind(collapsing, 0) == 0)
    return make_collapsing_example(parse_family_parameter(name, collapsing));
  throw DomainError("unknown catalog space '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"so5-u2", "so6-su3", "syn-1"}; }

}  // namespace ricci
