#include "torext/mapping_class.hpp"

#include <algorithm>

#include "torext/errors.hpp"

namespace torext {

TwistWord concat(const TwistWord& a, const TwistWord& b) {
  if (!a.empty() && !b.empty() && a.factors.front().clazz.size() != b.factors.front().clazz.size())
    throw DimensionError("concat: words belong to different models");
  TwistWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

TwistWord invert(const TwistWord& word) {
  TwistWord out;
  out.factors.assign(word.factors.rbegin(), word.factors.rend());
  for (auto& f : out.factors) f.exponent = -f.exponent;
  return out;
}

void validate_word(const HomologyModel& model, const TwistWord& word) {
  for (std::size_t k = 0; k < word.factors.size(); ++k) {
    const auto& f = word.factors[k];
    const std::string where = "factors[" + std::to_string(k) + "]";
    if (f.clazz.size() != model.rank())
      throw DimensionError(where + ".class: expected " + std::to_string(model.rank()) + " coordinates, got " +
                           std::to_string(f.clazz.size()));
    switch (f.locus.kind) {
      case Locus::Kind::InQ:
        if (!model.in_q_image(f.clazz)) throw LocusError(where + ".class: not in the image of H_1(Q)");
        break;
      case Locus::Kind::InComplement:
        if (f.locus.component < 0 || f.locus.component >= model.component_count())
          throw LocusError(where + ".locus: component " + std::to_string(f.locus.component) + " does not exist");
        if (!model.in_complement(f.clazz, f.locus.component))
          throw LocusError(where + ".class: not in the image of H_1(P_" + std::to_string(f.locus.component) + ")");
        break;
      case Locus::Kind::Ambient:
        break;
    }
  }
}

void require_q_word(const HomologyModel& model, const TwistWord& word) {
  for (std::size_t k = 0; k < word.factors.size(); ++k)
    if (word.factors[k].locus.kind != Locus::Kind::InQ)
      throw LocusError("factors[" + std::to_string(k) + "].locus: a diffeomorphism of Q needs every factor in Q");
  validate_word(model, word);
}

std::vector<std::size_t> nonprimitive_factors(const TwistWord& word) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < word.factors.size(); ++k)
    if (content(word.factors[k].clazz.coords()) > 1) out.push_back(k);
  return out;
}

IntMatrix transvection(const HomologyModel& model, const H1Class& z, const Integer& m) {
  const IntVector w = model.intersection_form() * z.coords();
  IntMatrix t = IntMatrix::identity(model.rank());
  for (std::size_t r = 0; r < model.rank(); ++r)
    for (std::size_t c = 0; c < model.rank(); ++c) t(r, c) += m * z[r] * w[c];
  return t;
}

IntMatrix transvection_action(const HomologyModel& model, const TwistWord& word) {
  validate_word(model, word);
  const std::size_t dim = model.rank();
  IntMatrix t = IntMatrix::identity(dim);
  // T <- T (I + m z (J z)^T) = T + m (T z) (J z)^T
  for (const auto& f : word.factors) {
    if (f.exponent == 0) continue;
    const IntVector w = model.intersection_form() * f.clazz.coords();
    const IntVector tz = t * f.clazz.coords();
    for (std::size_t r = 0; r < dim; ++r) {
      if (tz[r] == 0) continue;
      const Integer s = f.exponent * tz[r];
      for (std::size_t c = 0; c < dim; ++c) t(r, c) += s * w[c];
    }
  }
  return t;
}

bool is_weakly_torelli(const HomologyModel& model, const TwistWord& word) {
  require_q_word(model, word);
  const IntMatrix t = transvection_action(model, word);
  const IntMatrix& q = model.q_image();
  return t * q == q;
}

DifferenceMap::DifferenceMap(const HomologyModel& model, IntMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t k = model.reduced_rank();
  if (matrix_.rows() != k || matrix_.cols() != k)
    throw DimensionError("difference map must be " + std::to_string(k) + "x" + std::to_string(k));
  for (int j = 0; j < model.component_count(); ++j) blocks_.push_back(model.block(j));
}

DifferenceMap DifferenceMap::zero(const HomologyModel& model) {
  return DifferenceMap(model, IntMatrix(model.reduced_rank(), model.reduced_rank()));
}

H1barClass DifferenceMap::operator()(const K0Class& theta) const {
  if (theta.size() != matrix_.cols()) throw DimensionError("difference map applied to a vector of the wrong length");
  return H1barClass(matrix_ * theta.coords());
}

DifferenceMap operator+(const DifferenceMap& a, const DifferenceMap& b) {
  if (a.blocks_ != b.blocks_) throw DimensionError("difference maps belong to different models");
  DifferenceMap out = a;
  out.matrix_ += b.matrix_;
  return out;
}

DifferenceMap operator-(const DifferenceMap& a) {
  DifferenceMap out = a;
  out.matrix_ = -out.matrix_;
  return out;
}

DifferenceMap delta_difference(const HomologyModel& model, const TwistWord& word) {
  require_q_word(model, word);
  const IntMatrix t = transvection_action(model, word);
  const IntMatrix& q = model.q_image();
  if (!(t * q == q)) throw NotWeaklyTorelli("the word moves a class of H_1(Q)");

  const std::size_t dim = model.rank();
  const std::size_t k = model.reduced_rank();
  // Residual T a - a for every basis vector a, in H_1(c)bar coordinates; the
  // boundary images D(a) in K_0(c) coordinates.
  IntMatrix residual(k, dim);
  IntMatrix boundary(k, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const H1Class basis_vector(IntVector::unit(dim, a));
    H1Class moved(t.column(a));
    moved[a] -= 1;
    const auto bar = model.to_h1bar(moved);
    if (!bar)
      throw NotWeaklyTorelli("residual of basis vector " + model.labels()[a].to_string() +
                             " is not a combination of boundary circle classes");
    const K0Class d = model.mv_boundary_k0(basis_vector);
    for (std::size_t i = 0; i < k; ++i) {
      residual(i, a) = (*bar)[i];
      boundary(i, a) = d[i];
    }
  }

  // delta * boundary = residual  <=>  boundary^T delta^T = residual^T.
  const auto solution = solve_integer(boundary.transpose(), residual.transpose());
  if (!solution) throw Inconsistent("no difference map reproduces the residuals");
  return DifferenceMap(model, solution->transpose());
}

}  // namespace torext
