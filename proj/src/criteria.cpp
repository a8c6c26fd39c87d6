#include "torext/criteria.hpp"

#include "torext/errors.hpp"

namespace torext {

namespace {

void check_dimensions(const HomologyModel& model, const DifferenceMap& delta) {
  if (delta.size() != model.reduced_rank() || delta.matrix().cols() != model.reduced_rank())
    throw DimensionError("difference map does not match the model (expected " +
                         std::to_string(model.reduced_rank()) + "x" + std::to_string(model.reduced_rank()) + ")");
}

}  // namespace

bool is_symmetric(const HomologyModel& model, const DifferenceMap& delta) {
  check_dimensions(model, delta);
  const std::size_t k = model.reduced_rank();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const K0Class oa(IntVector::unit(k, a));
      const K0Class ob(IntVector::unit(k, b));
      if (model.induced_pairing(oa, delta(ob)) != model.induced_pairing(ob, delta(oa))) return false;
    }
  return true;
}

bool is_completely_reducible(const HomologyModel& model, const DifferenceMap& delta) {
  check_dimensions(model, delta);
  std::vector<int> owner(model.reduced_rank());
  for (int j = 0; j < model.component_count(); ++j) {
    const BlockRange b = model.block(j);
    for (std::size_t i = 0; i < b.size; ++i) owner[b.offset + i] = j;
  }
  for (std::size_t r = 0; r < delta.size(); ++r)
    for (std::size_t c = 0; c < delta.size(); ++c)
      if (owner[r] != owner[c] && delta.matrix()(r, c) != 0) return false;
  return true;
}

IntMatrix matrix_presentation(const HomologyModel& model, const DifferenceMap& delta, int j) {
  if (!is_completely_reducible(model, delta))
    throw NotCompletelyReducible("matrix presentation needs a completely reducible map");
  const BlockRange b = model.block(j);
  // delta(o_i) is column i of the map, so the presentation is the transposed block.
  IntMatrix m(b.size, b.size);
  for (std::size_t i = 0; i < b.size; ++i)
    for (std::size_t k = 0; k < b.size; ++k) m(i, k) = delta.matrix()(b.offset + k, b.offset + i);
  return m;
}

DifferenceMap restrict_diagonal(const HomologyModel& model, const DiagonalMap& diagonal) {
  if (diagonal.exponents.size() != model.boundary_total())
    throw DimensionError("diagonal map needs " + std::to_string(model.boundary_total()) + " exponents");
  const std::size_t k = model.reduced_rank();
  IntMatrix m(k, k);
  for (std::size_t col = 0; col < k; ++col) {
    const H0Class theta = model.lift(K0Class(IntVector::unit(k, col)));
    H1cClass image(model.boundary_total());
    for (std::size_t c = 0; c < model.boundary_total(); ++c) image[c] = diagonal.exponents[c] * theta[c];
    const H1barClass bar = model.project_h1bar(image);
    for (std::size_t row = 0; row < k; ++row) m(row, col) = bar[row];
  }
  return DifferenceMap(model, std::move(m));
}

std::optional<DiagonalMap> diagonal_restriction(const HomologyModel& model, const DifferenceMap& delta) {
  check_dimensions(model, delta);
  if (!is_completely_reducible(model, delta)) return std::nullopt;
  DiagonalMap d{std::vector<Integer>(model.boundary_total(), Integer(0))};
  for (int j = 0; j < model.component_count(); ++j) {
    const IntMatrix m = matrix_presentation(model, delta, j);
    const std::size_t size = m.rows();
    // Row i of the presentation must be n_0 * (1,...,1) + n_i * e_i.
    Integer base = size >= 2 ? Integer(m(0, 1)) : Integer(0);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c)
        if (r != c && m(r, c) != base) return std::nullopt;
    d.exponents[model.circle_index(j, 0)] = base;
    for (std::size_t i = 0; i < size; ++i)
      d.exponents[model.circle_index(j, static_cast<int>(i) + 1)] = m(i, i) - base;
  }
  if (!(restrict_diagonal(model, d) == delta)) return std::nullopt;
  return d;
}

bool extension_by_identity_torelli(const DifferenceMap& delta) { return delta.is_zero(); }

bool extendable_to_torelli(const HomologyModel& model, const DifferenceMap& delta) {
  return is_completely_reducible(model, delta);
}

std::optional<DiagonalMap> correcting_multitwist(const HomologyModel& model, const DifferenceMap& delta) {
  auto d = diagonal_restriction(model, delta);
  if (!d) return std::nullopt;
  for (auto& e : d->exponents) e = -e;
  return d;
}

bool decide_extension_by_identity(const HomologyModel& model, const TwistWord& word) {
  if (!is_weakly_torelli(model, word)) return false;
  return extension_by_identity_torelli(delta_difference(model, word));
}

bool decide_extendable(const HomologyModel& model, const TwistWord& word) {
  if (!is_weakly_torelli(model, word)) return false;
  return extendable_to_torelli(model, delta_difference(model, word));
}

std::optional<DiagonalMap> decide_multitwist_correctable(const HomologyModel& model, const TwistWord& word) {
  return correcting_multitwist(model, delta_difference(model, word));
}

bool guaranteed_correctable(const SubsurfaceConfig& config) {
  for (const auto& c : config.components)
    if (c.boundary_count > 3) return false;
  return true;
}

GroupRanks group_ranks(const SubsurfaceConfig& config) {
  const HomologyModel model = HomologyModel::build(config);
  const std::size_t k = model.reduced_rank();
  GroupRanks out;
  out.rank_K0 = rank(model.k0_basis());
  out.rank_H1bar = rank(model.circle_span());

  // Generators e(k, l) of the symmetric maps of every block, flattened.
  std::vector<IntVector> generators;
  for (int j = 0; j < model.component_count(); ++j) {
    const BlockRange b = model.block(j);
    for (std::size_t p = 0; p < b.size; ++p)
      for (std::size_t q = p; q < b.size; ++q) {
        IntVector flat(k * k);
        flat[(b.offset + p) * k + (b.offset + q)] = 1;
        flat[(b.offset + q) * k + (b.offset + p)] = 1;
        generators.push_back(std::move(flat));
      }
  }
  out.rank_Dc = rank(IntMatrix::from_columns(k * k, generators));
  return out;
}

AnalysisReport analyze(const HomologyModel& model, const TwistWord& word) {
  require_q_word(model, word);
  AnalysisReport report;
  for (std::size_t idx : nonprimitive_factors(word))
    report.warnings.push_back("factors[" + std::to_string(idx) +
                              "].class is not primitive; interpreted as a transvection");
  report.weakly_torelli = is_weakly_torelli(model, word);
  if (!report.weakly_torelli) return report;

  const DifferenceMap delta = delta_difference(model, word);
  report.symmetric = is_symmetric(model, delta);
  report.completely_reducible = is_completely_reducible(model, delta);
  report.extension_by_identity_torelli = extension_by_identity_torelli(delta);
  report.extendable_to_torelli = extendable_to_torelli(model, delta);
  report.multitwist_correctable = correcting_multitwist(model, delta);
  if (report.completely_reducible)
    for (int j = 0; j < model.component_count(); ++j)
      report.component_matrices.push_back(matrix_presentation(model, delta, j));
  report.delta = delta;
  return report;
}

}  // namespace torext
