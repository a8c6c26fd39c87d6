#include "torext/surface_model.hpp"

#include <numeric>
#include <sstream>

#include "torext/errors.hpp"

namespace torext {

int SubsurfaceConfig::boundary_total() const {
  int n = 0;
  for (const auto& c : components) n += c.boundary_count;
  return n;
}

int SubsurfaceConfig::surface_genus() const {
  int g = q_genus + boundary_total() - component_count();
  for (const auto& c : components) g += c.genus;
  return g;
}

void SubsurfaceConfig::validate() const {
  if (q_genus < 0) throw InvalidConfig("q_genus must be nonnegative");
  if (components.empty()) throw InvalidConfig("components: at least one complementary component is required");
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (components[j].genus < 0)
      throw InvalidConfig("components[" + std::to_string(j) + "].genus must be nonnegative");
    if (components[j].boundary_count < 1)
      throw InvalidConfig("components[" + std::to_string(j) + "].boundary_count must be at least 1");
  }
}

std::string BasisLabel::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case BasisKind::QHandleA: os << "QHandle(a" << index << ")"; break;
    case BasisKind::QHandleB: os << "QHandle(b" << index << ")"; break;
    case BasisKind::PHandleA: os << "PHandle(a" << component << "," << index << ")"; break;
    case BasisKind::PHandleB: os << "PHandle(b" << component << "," << index << ")"; break;
    case BasisKind::Circle: os << "Circle(" << component << "," << index << ")"; break;
    case BasisKind::Dual: os << "Dual(" << component << "," << index << ")"; break;
  }
  return os.str();
}

HomologyModel HomologyModel::build(const SubsurfaceConfig& config) {
  config.validate();
  HomologyModel m;
  m.config_ = config;
  m.genus_ = config.surface_genus();
  const int r = config.component_count();

  m.circle_offset_.assign(1, 0);
  m.k0_offset_.assign(1, 0);
  for (const auto& c : config.components) {
    m.circle_offset_.push_back(m.circle_offset_.back() + c.boundary_count);
    m.k0_offset_.push_back(m.k0_offset_.back() + c.boundary_count - 1);
  }

  for (int i = 0; i < config.q_genus; ++i) {
    m.labels_.push_back({BasisKind::QHandleA, -1, i});
    m.labels_.push_back({BasisKind::QHandleB, -1, i});
  }
  for (int j = 0; j < r; ++j) {
    m.phandle_offset_.push_back(m.labels_.size());
    for (int k = 0; k < config.components[j].genus; ++k) {
      m.labels_.push_back({BasisKind::PHandleA, j, k});
      m.labels_.push_back({BasisKind::PHandleB, j, k});
    }
  }
  m.circle_start_ = m.labels_.size();
  for (int j = 0; j < r; ++j)
    for (int i = 1; i < config.components[j].boundary_count; ++i) m.labels_.push_back({BasisKind::Circle, j, i});
  m.dual_start_ = m.labels_.size();
  for (int j = 0; j < r; ++j)
    for (int i = 1; i < config.components[j].boundary_count; ++i) m.labels_.push_back({BasisKind::Dual, j, i});

  const std::size_t dim = m.labels_.size();
  const std::size_t reduced = m.reduced_rank();
  const std::size_t n = m.boundary_total();

  m.form_ = IntMatrix(dim, dim);
  for (std::size_t k = 0; k < m.circle_start_; k += 2) {
    m.form_(k, k + 1) = 1;
    m.form_(k + 1, k) = -1;
  }
  for (std::size_t k = 0; k < reduced; ++k) {
    m.form_(m.dual_start_ + k, m.circle_start_ + k) = 1;
    m.form_(m.circle_start_ + k, m.dual_start_ + k) = -1;
  }

  std::vector<IntVector> q_cols;
  for (std::size_t k = 0; k < 2 * static_cast<std::size_t>(config.q_genus); ++k) q_cols.push_back(IntVector::unit(dim, k));
  std::vector<IntVector> circle_cols;
  for (std::size_t k = 0; k < reduced; ++k) circle_cols.push_back(IntVector::unit(dim, m.circle_start_ + k));
  q_cols.insert(q_cols.end(), circle_cols.begin(), circle_cols.end());
  m.q_image_ = IntMatrix::from_columns(dim, q_cols);
  m.circle_span_ = IntMatrix::from_columns(dim, circle_cols);

  m.k0_basis_ = IntMatrix(n, reduced);
  for (int j = 0; j < r; ++j)
    for (int i = 1; i < config.components[j].boundary_count; ++i) {
      const std::size_t col = m.reduced_index(j, i);
      m.k0_basis_(m.circle_index(j, i), col) = 1;
      m.k0_basis_(m.circle_index(j, 0), col) = -1;
    }

  // Row C of the boundary matrix is a -> <a, [C]> = (J [C])^T a.
  m.boundary_matrix_ = IntMatrix(n, dim);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < config.components[j].boundary_count; ++i) {
      const IntVector row = m.form_ * m.circle_class(j, i).coords();
      for (std::size_t k = 0; k < dim; ++k) m.boundary_matrix_(m.circle_index(j, i), k) = row[k];
    }
  return m;
}

HomologyModel HomologyModel::with_reversed_orientation() const {
  HomologyModel m = *this;
  m.form_ = -m.form_;
  m.boundary_matrix_ = -m.boundary_matrix_;
  return m;
}

Integer HomologyModel::intersect(const H1Class& x, const H1Class& y) const {
  if (x.size() != rank() || y.size() != rank()) throw DimensionError("intersect: class length differs from rank of H_1(S)");
  return dot(x.coords(), form_ * y.coords());
}

std::size_t HomologyModel::circle_index(int j, int i) const {
  if (j < 0 || j >= component_count() || i < 0 || i >= boundary_count(j))
    throw DimensionError("circle (" + std::to_string(j) + "," + std::to_string(i) + ") does not exist");
  return circle_offset_[j] + i;
}

std::size_t HomologyModel::reduced_index(int j, int i) const {
  if (j < 0 || j >= component_count() || i < 1 || i >= boundary_count(j))
    throw DimensionError("reduced index (" + std::to_string(j) + "," + std::to_string(i) + ") does not exist");
  return k0_offset_[j] + i - 1;
}

BlockRange HomologyModel::block(int j) const {
  if (j < 0 || j >= component_count()) throw DimensionError("component " + std::to_string(j) + " does not exist");
  return {k0_offset_[j], k0_offset_[j + 1] - k0_offset_[j]};
}

std::size_t HomologyModel::circle_coordinate(int j, int i) const { return circle_start_ + reduced_index(j, i); }
std::size_t HomologyModel::dual_coordinate(int j, int i) const { return dual_start_ + reduced_index(j, i); }

H1Class HomologyModel::circle_class(int j, int i) const {
  circle_index(j, i);
  H1Class z(rank());
  if (i > 0) {
    z[circle_coordinate(j, i)] = 1;
  } else {
    for (int k = 1; k < boundary_count(j); ++k) z[circle_coordinate(j, k)] = -1;
  }
  return z;
}

H1cClass HomologyModel::boundary_fundamental_class(int j) const {
  H1cClass b(boundary_total());
  for (int i = 0; i < boundary_count(j); ++i) b[circle_index(j, i)] = 1;
  return b;
}

bool HomologyModel::in_q_image(const H1Class& x) const {
  if (x.size() != rank()) throw DimensionError("class length differs from rank of H_1(S)");
  // q_image is spanned by coordinate vectors, so membership is a support test.
  for (std::size_t k = 0; k < rank(); ++k) {
    const auto kind = labels_[k].kind;
    if ((kind == BasisKind::PHandleA || kind == BasisKind::PHandleB || kind == BasisKind::Dual) && x[k] != 0)
      return false;
  }
  return true;
}

bool HomologyModel::in_complement(const H1Class& x, int j) const {
  if (x.size() != rank()) throw DimensionError("class length differs from rank of H_1(S)");
  block(j);
  for (std::size_t k = 0; k < rank(); ++k) {
    const auto& label = labels_[k];
    const bool allowed = (label.kind == BasisKind::PHandleA || label.kind == BasisKind::PHandleB ||
                          label.kind == BasisKind::Circle) &&
                         label.component == j;
    if (!allowed && x[k] != 0) return false;
  }
  return true;
}

H0Class HomologyModel::mv_boundary(const H1Class& a) const {
  if (a.size() != rank()) throw DimensionError("mv_boundary: class length differs from rank of H_1(S)");
  return H0Class(boundary_matrix_ * a.coords());
}

K0Class HomologyModel::mv_boundary_k0(const H1Class& a) const {
  const H0Class theta = mv_boundary(a);
  K0Class out(reduced_rank());
  for (int j = 0; j < component_count(); ++j) {
    Integer sum = 0;
    for (int i = 0; i < boundary_count(j); ++i) sum += theta[circle_index(j, i)];
    if (sum != 0) throw Inconsistent("boundary class does not lie in K_0(c)");
    for (int i = 1; i < boundary_count(j); ++i) out[reduced_index(j, i)] = theta[circle_index(j, i)];
  }
  return out;
}

Integer HomologyModel::pairing_c(const H0Class& theta, const H1cClass& b) const {
  if (theta.size() != boundary_total() || b.size() != boundary_total())
    throw DimensionError("pairing_c: expected vectors of length n");
  return dot(theta.coords(), b.coords());
}

Integer HomologyModel::induced_pairing(const K0Class& theta, const H1barClass& v) const {
  if (theta.size() != reduced_rank() || v.size() != reduced_rank())
    throw DimensionError("induced_pairing: expected vectors of length n - r");
  return pairing_c(lift(theta), lift(v));
}

H1barClass HomologyModel::project_h1bar(const H1cClass& b) const {
  if (b.size() != boundary_total()) throw DimensionError("project_h1bar: expected vector of length n");
  H1barClass v(reduced_rank());
  for (int j = 0; j < component_count(); ++j)
    for (int i = 1; i < boundary_count(j); ++i)
      v[reduced_index(j, i)] = b[circle_index(j, i)] - b[circle_index(j, 0)];
  return v;
}

H0Class HomologyModel::lift(const K0Class& theta) const {
  if (theta.size() != reduced_rank()) throw DimensionError("expected K_0(c) coordinates of length n - r");
  return H0Class(k0_basis_ * theta.coords());
}

H1cClass HomologyModel::lift(const H1barClass& v) const {
  if (v.size() != reduced_rank()) throw DimensionError("expected H_1(c)bar coordinates of length n - r");
  H1cClass b(boundary_total());
  for (int j = 0; j < component_count(); ++j)
    for (int i = 1; i < boundary_count(j); ++i) b[circle_index(j, i)] = v[reduced_index(j, i)];
  return b;
}

H1Class HomologyModel::include(const H1cClass& b) const {
  if (b.size() != boundary_total()) throw DimensionError("expected H_1(c) coordinates of length n");
  H1Class x(rank());
  for (int j = 0; j < component_count(); ++j)
    for (int i = 0; i < boundary_count(j); ++i) x = x + b[circle_index(j, i)] * circle_class(j, i);
  return x;
}

H1Class HomologyModel::include(const H1barClass& v) const {
  if (v.size() != reduced_rank()) throw DimensionError("expected H_1(c)bar coordinates of length n - r");
  H1Class x(rank());
  for (std::size_t k = 0; k < reduced_rank(); ++k) x[circle_start_ + k] = v[k];
  return x;
}

std::optional<H1barClass> HomologyModel::to_h1bar(const H1Class& x) const {
  if (x.size() != rank()) throw DimensionError("class length differs from rank of H_1(S)");
  for (std::size_t k = 0; k < rank(); ++k)
    if (labels_[k].kind != BasisKind::Circle && x[k] != 0) return std::nullopt;
  H1barClass v(reduced_rank());
  for (std::size_t k = 0; k < reduced_rank(); ++k) v[k] = x[circle_start_ + k];
  return v;
}

}  // namespace torext
