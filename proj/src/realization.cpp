#include "torext/realization.hpp"

#include <numeric>
#include <set>

#include "torext/errors.hpp"

namespace torext {

Integer SymBasisCoefficients::at(int k, int l) const {
  auto it = lambda.find({k, l});
  return it == lambda.end() ? Integer(0) : it->second;
}

IntMatrix indicator_matrix(std::size_t size, const std::vector<int>& subset) {
  IntMatrix m(size, size);
  for (int i : subset)
    for (int j : subset) {
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > size || static_cast<std::size_t>(j) > size)
        throw DimensionError("indicator_matrix: index out of range");
      m(i - 1, j - 1) = 1;
    }
  return m;
}

IntMatrix indicator_matrix(std::size_t size, int k, int l) {
  std::vector<int> block;
  for (int i = k; i <= l; ++i) block.push_back(i);
  return indicator_matrix(size, block);
}

SymBasisCoefficients sym_basis_change(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("sym_basis_change: matrix is not square");
  if (!(m == m.transpose())) throw NotSymmetric("sym_basis_change: matrix is not symmetric");
  SymBasisCoefficients out;
  out.size = m.rows();
  auto add = [&](int k, int l, const Integer& v) { out.lambda[{k, l}] += v; };
  const int n = static_cast<int>(m.rows());
  // Expand in the e(k, l) basis, then rewrite each e(k, l) through the
  // indicator matrices of contiguous blocks.
  for (int k = 1; k <= n; ++k)
    for (int l = k; l <= n; ++l) {
      const Integer mu = m(k - 1, l - 1);
      if (mu == 0) continue;
      if (l == k) {
        add(k, k, mu);
      } else if (l == k + 1) {
        add(k, k + 1, mu);
        add(k, k, -mu);
        add(k + 1, k + 1, -mu);
      } else {
        add(k, l, mu);
        add(k + 1, l, -mu);
        add(k, l - 1, -mu);
        add(k + 1, l - 1, mu);
      }
    }
  std::erase_if(out.lambda, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntMatrix reconstruct(const SymBasisCoefficients& coefficients) {
  IntMatrix m(coefficients.size, coefficients.size);
  for (const auto& [kl, value] : coefficients.lambda)
    m += value * indicator_matrix(coefficients.size, kl.first, kl.second);
  return m;
}

namespace {

H1cClass union_class(const HomologyModel& model, int j, const std::vector<int>& subset) {
  if (subset.empty()) throw DimensionError("peripheral twist needs a nonempty set of circles");
  const std::set<int> distinct(subset.begin(), subset.end());
  if (distinct.size() != subset.size()) throw DimensionError("peripheral twist: repeated circle index");
  H1cClass u(model.boundary_total());
  for (int i : subset) u[model.circle_index(j, i)] = 1;
  return u;
}

}  // namespace

H1Class peripheral_class(const HomologyModel& model, int j, const std::vector<int>& subset) {
  return model.include(union_class(model, j, subset));
}

DifferenceMap peripheral_twist_delta(const HomologyModel& model, int j, const std::vector<int>& subset,
                                     const Integer& m) {
  const H1cClass u = union_class(model, j, subset);
  const H1barClass u_bar = model.project_h1bar(u);
  const std::size_t k = model.reduced_rank();
  IntMatrix out(k, k);
  for (std::size_t col = 0; col < k; ++col) {
    const Integer coef = m * model.pairing_c(model.lift(K0Class(IntVector::unit(k, col))), u);
    for (std::size_t row = 0; row < k; ++row) out(row, col) = coef * u_bar[row];
  }
  return DifferenceMap(model, std::move(out));
}

Realization realize_delta(const HomologyModel& model, const DifferenceMap& delta) {
  if (!is_symmetric(model, delta)) throw NotSymmetric("difference map is not symmetric");
  if (!is_completely_reducible(model, delta)) throw NotCompletelyReducible("difference map is not completely reducible");
  Realization out;
  for (int j = 0; j < model.component_count(); ++j) {
    const SymBasisCoefficients coefficients = sym_basis_change(matrix_presentation(model, delta, j));
    for (const auto& [kl, lambda] : coefficients.lambda) {
      std::vector<int> block(kl.second - kl.first + 1);
      std::iota(block.begin(), block.end(), kl.first);
      const H1Class z = peripheral_class(model, j, block);
      out.word.factors.push_back({z, lambda, Locus::q()});
      out.bitwist.factors.push_back({z, lambda, Locus::q()});
      out.bitwist.factors.push_back({z, -lambda, Locus::complement(j)});
    }
  }
  return out;
}

TwistWord build_boundary_multitwist(const HomologyModel& model, const DiagonalMap& exponents) {
  if (exponents.exponents.size() != model.boundary_total())
    throw DimensionError("multi-twist needs " + std::to_string(model.boundary_total()) + " exponents");
  TwistWord word;
  for (int j = 0; j < model.component_count(); ++j)
    for (int i = 0; i < model.boundary_count(j); ++i)
      word.factors.push_back({model.circle_class(j, i), exponents.exponents[model.circle_index(j, i)], Locus::q()});
  return word;
}

}  // namespace torext
