#include "torext/oracle.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "torext/errors.hpp"
#include "torext/realization.hpp"

namespace torext {

void TrialPlan::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (bounds.max_q_genus < 0) throw std::invalid_argument("max q genus must be nonnegative");
  if (bounds.max_component_genus < 0) throw std::invalid_argument("max component genus must be nonnegative");
  if (bounds.max_boundary < 1) throw std::invalid_argument("max boundary count must be at least 1");
  if (bounds.max_components < 1) throw std::invalid_argument("max component count must be at least 1");
  if (exponent_bound < 0) throw std::invalid_argument("exponent bound must be nonnegative");
}

namespace {

enum Stream : std::uint64_t { kConfig = 1, kWord = 2, kAux = 3 };

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Integer nonzero_exponent(std::mt19937_64& rng, int bound) {
  if (bound == 0) return 0;
  int m = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? Integer(m) : Integer(-m);
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

SubsurfaceConfig random_config(const TrialPlan& plan, std::uint64_t index) {
  plan.validate();
  auto rng = trial_rng(plan.seed, index, kConfig);
  SubsurfaceConfig config;
  config.q_genus = uniform(rng, 0, plan.bounds.max_q_genus);
  const int r = uniform(rng, 1, plan.bounds.max_components);
  for (int j = 0; j < r; ++j)
    config.components.push_back(
        {uniform(rng, 0, plan.bounds.max_component_genus), uniform(rng, 1, plan.bounds.max_boundary)});
  return config;
}

TwistWord random_weakly_torelli_word(const HomologyModel& model, const TrialPlan& plan, std::uint64_t index) {
  auto rng = trial_rng(plan.seed, index, kWord);
  const int length = uniform(rng, 0, 6);
  const int r = model.component_count();
  TwistWord word;
  for (int f = 0; f < length; ++f) {
    H1cClass u(model.boundary_total());
    if (r >= 2 && uniform(rng, 0, 3) == 0) {
      // Union of circles drawn from the whole boundary of Q.
      for (std::size_t c = 0; c < model.boundary_total(); ++c) u[c] = uniform(rng, 0, 1);
    } else {
      const int j = uniform(rng, 0, r - 1);
      const int n = model.boundary_count(j);
      const int mask = uniform(rng, 1, (1 << n) - 1);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) u[model.circle_index(j, i)] = 1;
    }
    word.factors.push_back({model.include(u), nonzero_exponent(rng, plan.exponent_bound), Locus::q()});
  }
  return word;
}

IntMatrix random_symmetric_matrix(std::size_t size, int bound, std::mt19937_64& rng) {
  IntMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = r; c < size; ++c) {
      m(r, c) = uniform(rng, -bound, bound);
      m(c, r) = m(r, c);
    }
  return m;
}

DifferenceMap random_symmetric_reducible_delta(const HomologyModel& model, int bound, std::mt19937_64& rng) {
  const std::size_t k = model.reduced_rank();
  IntMatrix full(k, k);
  for (int j = 0; j < model.component_count(); ++j) {
    const BlockRange b = model.block(j);
    const IntMatrix block = random_symmetric_matrix(b.size, bound, rng);
    for (std::size_t r = 0; r < b.size; ++r)
      for (std::size_t c = 0; c < b.size; ++c) full(b.offset + r, b.offset + c) = block(r, c);
  }
  return DifferenceMap(model, std::move(full));
}

DiagonalMap random_diagonal(const HomologyModel& model, int bound, std::mt19937_64& rng) {
  DiagonalMap d;
  for (std::size_t c = 0; c < model.boundary_total(); ++c) d.exponents.emplace_back(uniform(rng, -bound, bound));
  return d;
}

namespace {

using Witness = std::optional<json>;
using Check = std::function<Witness(const TrialPlan&, std::uint64_t, const FaultInjection&)>;

struct Trial {
  SubsurfaceConfig config;
  HomologyModel model;
};

Trial make_trial(const TrialPlan& plan, std::uint64_t index) {
  SubsurfaceConfig config = random_config(plan, index);
  HomologyModel model = HomologyModel::build(config);
  return {std::move(config), std::move(model)};
}

json base_witness(const Trial& t, std::uint64_t index) {
  return {{"trial", index}, {"config", to_json(t.config)}};
}

IntMatrix random_matrix(std::mt19937_64& rng, int max_rows, int max_cols, int bound) {
  IntMatrix a(uniform(rng, 1, max_rows), uniform(rng, 1, max_cols));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = uniform(rng, -bound, bound);
  return a;
}

// Exhaustive search for x in [-box, box]^cols with A x = b.
bool box_has_solution(const IntMatrix& a, const IntVector& b, int box) {
  IntVector x(a.cols());
  std::vector<int> digits(a.cols(), -box);
  for (;;) {
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = digits[i];
    if (a * x == b) return true;
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == box) digits[pos++] = -box;
    if (pos == digits.size()) return false;
    ++digits[pos];
  }
}

bool symplectic(const HomologyModel& model, const IntMatrix& t) {
  return t.transpose() * model.intersection_form() * t == model.intersection_form();
}

json verdicts(const AnalysisReport& r) {
  return {{"weakly_torelli", r.weakly_torelli},
          {"symmetric", r.symmetric},
          {"completely_reducible", r.completely_reducible},
          {"extension_by_identity_torelli", r.extension_by_identity_torelli},
          {"extendable_to_torelli", r.extendable_to_torelli},
          {"correctable", r.multitwist_correctable.has_value()}};
}

TrialPlan three_bounded(TrialPlan plan) {
  plan.bounds.max_boundary = std::min(plan.bounds.max_boundary, 3);
  return plan;
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> checks = {
      {"exactlin.snf_product",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         auto rng = trial_rng(plan.seed, i, kAux);
         const IntMatrix a = random_matrix(rng, 6, 6, 9);
         const SNFResult s = smith_normal_form(a);
         bool ok = s.U * a * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
         for (std::size_t r = 0; r < s.D.rows() && ok; ++r)
           for (std::size_t c = 0; c < s.D.cols(); ++c)
             if (r != c && s.D(r, c) != 0) ok = false;
         const auto f = s.invariant_factors();
         // d_k >= 0 and d_k | d_{k+1}; zero only in a trailing run.
         for (std::size_t k = 0; k < f.size() && ok; ++k) {
           if (f[k] < 0) ok = false;
           if (k + 1 < f.size() && !mpz_divisible_p(f[k + 1].get_mpz_t(), f[k].get_mpz_t())) ok = false;
         }
         if (ok) return std::nullopt;
         return json{{"trial", i}, {"A", to_json(a)}, {"D", to_json(s.D)}};
       }},
      {"exactlin.solve_soundness",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         auto rng = trial_rng(plan.seed, i, kAux);
         const IntMatrix a = random_matrix(rng, 3, 3, 3);
         IntVector b(a.rows());
         for (std::size_t k = 0; k < b.size(); ++k) b[k] = uniform(rng, -4, 4);
         const auto x = solve_integer(a, b);
         bool ok = x ? a * *x == b : !box_has_solution(a, b, 5);
         if (ok) return std::nullopt;
         return json{{"trial", i}, {"A", to_json(a)}, {"b", to_json(b)}, {"solved", x.has_value()}};
       }},
      {"exactlin.kernel_saturated",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         auto rng = trial_rng(plan.seed, i, kAux);
         const IntMatrix a = random_matrix(rng, 4, 6, 4);
         const IntMatrix k = kernel_basis(a);
         bool ok = (a * k).is_zero() && rank(a) + k.cols() == a.cols();
         if (ok && k.cols() > 0) {
           const SNFResult s = smith_normal_form(k);
           ok = s.rank() == k.cols();
           for (const auto& f : s.invariant_factors()) ok = ok && f == 1;
         }
         if (ok) return std::nullopt;
         return json{{"trial", i}, {"A", to_json(a)}, {"kernel", to_json(k)}};
       }},
      {"surface.unimodular",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const IntMatrix& j = t.model.intersection_form();
         if (j.transpose() == -j && abs(determinant(j)) == 1) return std::nullopt;
         return base_witness(t, i);
       }},
      {"surface.rank_law",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         // Euler characteristic is additive along circles: chi(S) = chi(Q) + sum chi(P_j).
         int chi = 2 - 2 * t.config.q_genus - t.config.boundary_total();
         for (const auto& c : t.config.components) chi += 2 - 2 * c.genus - c.boundary_count;
         const int genus = (2 - chi) / 2;
         if (t.model.rank() == static_cast<std::size_t>(2 * genus) && t.model.genus() == genus) return std::nullopt;
         return base_witness(t, i);
       }},
      {"surface.bf_pairing",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const HomologyModel& m = t.model;
         const std::size_t n = m.boundary_total();
         std::vector<IntVector> fundamentals;
         for (int j = 0; j < m.component_count(); ++j) fundamentals.push_back(m.boundary_fundamental_class(j).coords());
         const IntMatrix f = IntMatrix::from_columns(n, fundamentals);
         bool ok = (f.transpose() * m.k0_basis()).is_zero();
         // Annihilator of the fundamental classes is K_0(c), and conversely.
         const IntMatrix ann_f = kernel_basis(f.transpose());
         const IntMatrix ann_k = kernel_basis(m.k0_basis().transpose());
         ok = ok && ann_f.cols() == m.k0_basis().cols() && ann_k.cols() == f.cols();
         for (std::size_t c = 0; ok && c < ann_f.cols(); ++c) ok = lattice_membership(m.k0_basis(), ann_f.column(c));
         for (std::size_t c = 0; ok && c < m.k0_basis().cols(); ++c) ok = lattice_membership(ann_f, m.k0_basis().column(c));
         for (std::size_t c = 0; ok && c < ann_k.cols(); ++c) ok = lattice_membership(f, ann_k.column(c));
         for (std::size_t c = 0; ok && c < f.cols(); ++c) ok = lattice_membership(ann_k, f.column(c));
         if (ok) return std::nullopt;
         return base_witness(t, i);
       }},
      {"surface.image_law",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const HomologyModel& m = t.model;
         const IntMatrix& d = m.boundary_matrix();
         bool ok = true;
         for (std::size_t c = 0; ok && c < d.cols(); ++c) ok = lattice_membership(m.k0_basis(), d.column(c));
         for (std::size_t c = 0; ok && c < m.k0_basis().cols(); ++c) ok = lattice_membership(d, m.k0_basis().column(c));
         if (ok) return std::nullopt;
         return base_witness(t, i);
       }},
      {"surface.adjunction",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection& faults) -> Witness {
         const Trial t = make_trial(plan, i);
         const HomologyModel& m = t.model;
         const Integer sign = faults.flip_pairing_sign ? -1 : 1;
         for (std::size_t a = 0; a < m.rank(); ++a)
           for (std::size_t b = 0; b < m.boundary_total(); ++b) {
             const H1Class x(IntVector::unit(m.rank(), a));
             const H1cClass y(IntVector::unit(m.boundary_total(), b));
             const Integer lhs = m.intersect(x, m.include(y));
             const Integer rhs = sign * m.pairing_c(m.mv_boundary(x), y);
             if (lhs != rhs) {
               json w = base_witness(t, i);
               w["a"] = m.labels()[a].to_string();
               w["circle"] = b;
               w["intersection"] = to_json(lhs);
               w["pairing_c"] = to_json(rhs);
               return w;
             }
           }
         return std::nullopt;
       }},
      {"surface.circles_isotropic",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const HomologyModel& m = t.model;
         std::vector<H1Class> circles;
         for (int j = 0; j < m.component_count(); ++j) {
           H1Class sum(m.rank());
           for (int k = 0; k < m.boundary_count(j); ++k) {
             circles.push_back(m.circle_class(j, k));
             sum = sum + circles.back();
           }
           if (!sum.is_zero()) return base_witness(t, i);
         }
         for (const auto& x : circles)
           for (const auto& y : circles)
             if (m.intersect(x, y) != 0) return base_witness(t, i);
         // The saturated span of the circle classes has rank n - r.
         if (rank(m.circle_span()) != m.reduced_rank()) return base_witness(t, i);
         return std::nullopt;
       }},
      {"mapping.symplectic",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const TwistWord w = random_weakly_torelli_word(t.model, plan, i);
         auto rng = trial_rng(plan.seed, i, kAux);
         TwistWord ambient;
         for (int f = uniform(rng, 0, 4); f > 0; --f) {
           H1Class z(t.model.rank());
           for (std::size_t k = 0; k < z.size(); ++k) z[k] = uniform(rng, -2, 2);
           ambient.factors.push_back({z, nonzero_exponent(rng, plan.exponent_bound), Locus::ambient()});
         }
         if (symplectic(t.model, transvection_action(t.model, w)) &&
             symplectic(t.model, transvection_action(t.model, ambient)))
           return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w);
         wit["ambient_word"] = to_json(ambient);
         return wit;
       }},
      {"mapping.additivity",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const TwistWord w1 = random_weakly_torelli_word(t.model, plan, i);
         const TwistWord w2 = random_weakly_torelli_word(t.model, plan, i + 0x9e3779b97f4a7c15ULL);
         const DifferenceMap d1 = delta_difference(t.model, w1);
         const DifferenceMap d2 = delta_difference(t.model, w2);
         if (delta_difference(t.model, concat(w1, w2)) == d1 + d2 && delta_difference(t.model, invert(w1)) == -d1)
           return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w1);
         wit["word2"] = to_json(w2);
         return wit;
       }},
      {"mapping.factorization",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const HomologyModel& m = t.model;
         const TwistWord w = random_weakly_torelli_word(m, plan, i);
         const IntMatrix tr = transvection_action(m, w);
         const IntMatrix ker = kernel_basis(m.boundary_matrix());
         auto rng = trial_rng(plan.seed, i, kAux);
         for (int rep = 0; rep < 4; ++rep) {
           IntVector a(m.rank());
           for (std::size_t k = 0; k < a.size(); ++k) a[k] = uniform(rng, -3, 3);
           IntVector shift(m.rank());
           for (std::size_t c = 0; c < ker.cols(); ++c) shift += Integer(uniform(rng, -3, 3)) * ker.column(c);
           const IntVector a2 = a + shift;
           const auto r1 = m.to_h1bar(H1Class(tr * a - a));
           const auto r2 = m.to_h1bar(H1Class(tr * a2 - a2));
           if (!(m.mv_boundary(H1Class(a)) == m.mv_boundary(H1Class(a2))) || !r1 || !r2 || !(*r1 == *r2)) {
             json wit = base_witness(t, i);
             wit["word"] = to_json(w);
             wit["a"] = to_json(a);
             wit["a_prime"] = to_json(a2);
             return wit;
           }
         }
         return std::nullopt;
       }},
      {"mapping.symmetry",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const HomologyModel& m = t.model;
         const TwistWord w = random_weakly_torelli_word(m, plan, i);
         const DifferenceMap d = delta_difference(m, w);
         const std::size_t k = m.reduced_rank();
         for (std::size_t a = 0; a < k; ++a)
           for (std::size_t b = 0; b < k; ++b) {
             const K0Class oa(IntVector::unit(k, a));
             const K0Class ob(IntVector::unit(k, b));
             if (m.induced_pairing(oa, d(ob)) != m.induced_pairing(ob, d(oa))) {
               json wit = base_witness(t, i);
               wit["word"] = to_json(w);
               wit["delta"] = to_json(d);
               return wit;
             }
           }
         return std::nullopt;
       }},
      {"mapping.functional_equation",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const HomologyModel& m = t.model;
         const TwistWord w = random_weakly_torelli_word(m, plan, i);
         const IntMatrix tr = transvection_action(m, w);
         const DifferenceMap d = delta_difference(m, w);
         for (std::size_t a = 0; a < m.rank(); ++a) {
           const H1Class e(IntVector::unit(m.rank(), a));
           const auto moved = m.to_h1bar(H1Class(tr * e.coords() - e.coords()));
           if (!moved || !(*moved == d(m.mv_boundary_k0(e)))) {
             json wit = base_witness(t, i);
             wit["word"] = to_json(w);
             wit["basis_vector"] = m.labels()[a].to_string();
             return wit;
           }
         }
         return std::nullopt;
       }},
      {"criteria.identity_extension",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const TwistWord w = random_weakly_torelli_word(t.model, plan, i);
         const bool by_delta = decide_extension_by_identity(t.model, w);
         const bool by_action = transvection_action(t.model, w) == IntMatrix::identity(t.model.rank());
         if (by_delta == by_action) return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w);
         return wit;
       }},
      {"criteria.correction_roundtrip",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const TwistWord w = random_weakly_torelli_word(t.model, plan, i);
         const auto correction = decide_multitwist_correctable(t.model, w);
         if (!correction) return std::nullopt;
         const TwistWord corrected = concat(build_boundary_multitwist(t.model, *correction), w);
         if (transvection_action(t.model, corrected) == IntMatrix::identity(t.model.rank())) return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w);
         wit["correction"] = to_json(*correction);
         return wit;
       }},
      {"criteria.three_diagonal",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const TrialPlan bounded = three_bounded(plan);
         const Trial t = make_trial(bounded, i);
         const TwistWord w = random_weakly_torelli_word(t.model, bounded, i);
         const bool extendable = decide_extendable(t.model, w);
         const bool correctable = decide_multitwist_correctable(t.model, w).has_value();
         auto rng = trial_rng(plan.seed, i, kAux);
         const DifferenceMap d = random_symmetric_reducible_delta(t.model, 3, rng);
         if (extendable == correctable && guaranteed_correctable(t.config) && diagonal_restriction(t.model, d))
           return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w);
         wit["delta"] = to_json(d);
         return wit;
       }},
      {"criteria.diagonal_reconstruct",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const TwistWord w = random_weakly_torelli_word(t.model, plan, i);
         const DifferenceMap d = delta_difference(t.model, w);
         auto rng = trial_rng(plan.seed, i, kAux);
         const DifferenceMap diag = restrict_diagonal(t.model, random_diagonal(t.model, plan.exponent_bound, rng));
         for (const DifferenceMap& target : {d, diag}) {
           const auto sol = diagonal_restriction(t.model, target);
           const bool must_exist = &target == &diag;
           if ((must_exist && !sol) || (sol && !(restrict_diagonal(t.model, *sol) == target))) {
             json wit = base_witness(t, i);
             wit["word"] = to_json(w);
             wit["delta"] = to_json(target);
             return wit;
           }
         }
         return std::nullopt;
       }},
      {"realization.basis_change",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         auto rng = trial_rng(plan.seed, i, kAux);
         const IntMatrix m = random_symmetric_matrix(uniform(rng, 1, 5), 2, rng);
         const SymBasisCoefficients lambda = sym_basis_change(m);
         IntMatrix sum(m.rows(), m.cols());
         for (const auto& [kl, v] : lambda.lambda) sum += v * indicator_matrix(m.rows(), kl.first, kl.second);
         if (sum == m) return std::nullopt;
         return json{{"trial", i}, {"matrix", to_json(m)}};
       }},
      {"realization.roundtrip",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         auto rng = trial_rng(plan.seed, i, kAux);
         const DifferenceMap d = random_symmetric_reducible_delta(t.model, 3, rng);
         const Realization real = realize_delta(t.model, d);
         if (is_weakly_torelli(t.model, real.word) && delta_difference(t.model, real.word) == d &&
             transvection_action(t.model, real.bitwist) == IntMatrix::identity(t.model.rank()))
           return std::nullopt;
         json wit = base_witness(t, i);
         wit["delta"] = to_json(d);
         wit["word"] = to_json(real.word);
         return wit;
       }},
      {"realization.multitwist_law",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         auto rng = trial_rng(plan.seed, i, kAux);
         const DiagonalMap d = random_diagonal(t.model, plan.exponent_bound, rng);
         const TwistWord w = build_boundary_multitwist(t.model, d);
         if (delta_difference(t.model, w) == restrict_diagonal(t.model, d)) return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w);
         return wit;
       }},
      {"realization.peripheral_formula",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         auto rng = trial_rng(plan.seed, i, kAux);
         const int j = uniform(rng, 0, t.model.component_count() - 1);
         const int n = t.model.boundary_count(j);
         const int mask = uniform(rng, 1, (1 << n) - 1);
         std::vector<int> subset;
         for (int k = 0; k < n; ++k)
           if (mask & (1 << k)) subset.push_back(k);
         const Integer m = nonzero_exponent(rng, plan.exponent_bound);
         const TwistWord w{{{peripheral_class(t.model, j, subset), m, Locus::q()}}};
         if (peripheral_twist_delta(t.model, j, subset, m) == delta_difference(t.model, w)) return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w);
         return wit;
       }},
      {"surface.orientation_reversal",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const Trial t = make_trial(plan, i);
         const TwistWord w = random_weakly_torelli_word(t.model, plan, i);
         const HomologyModel reversed = t.model.with_reversed_orientation();
         const AnalysisReport a = analyze(t.model, w);
         const AnalysisReport b = analyze(reversed, w);
         if (verdicts(a) == verdicts(b) && a.delta == b.delta) return std::nullopt;
         json wit = base_witness(t, i);
         wit["word"] = to_json(w);
         return wit;
       }},
      {"oracle.generator_soundness",
       [](const TrialPlan& plan, std::uint64_t i, const FaultInjection&) -> Witness {
         const SubsurfaceConfig config = random_config(plan, i);
         const auto& b = plan.bounds;
         bool ok = config.q_genus <= b.max_q_genus && config.component_count() <= b.max_components;
         for (const auto& c : config.components)
           ok = ok && c.genus <= b.max_component_genus && c.boundary_count <= b.max_boundary;
         config.validate();
         const HomologyModel model = HomologyModel::build(config);
         const TwistWord w = random_weakly_torelli_word(model, plan, i);
         if (ok && is_weakly_torelli(model, w)) return std::nullopt;
         return json{{"trial", i}, {"config", to_json(config)}, {"word", to_json(w)}};
       }},
  };
  return checks;
}

}  // namespace

std::vector<std::string> invariant_names() {
  std::vector<std::string> names;
  for (const auto& [name, check] : registry()) names.push_back(name);
  return names;
}

InvariantReport verify_invariant(const std::string& name, const TrialPlan& plan, const FaultInjection& faults) {
  plan.validate();
  for (const auto& [registered, check] : registry()) {
    if (registered != name) continue;
    InvariantReport report{name, plan.trials, {}};
    for (int i = 0; i < plan.trials; ++i) {
      Witness w;
      try {
        w = check(plan, static_cast<std::uint64_t>(i), faults);
      } catch (const std::exception& e) {
        w = json{{"trial", i}, {"exception", e.what()}};
      }
      if (w) report.failures.push_back(std::move(*w));
    }
    return report;
  }
  throw std::invalid_argument("unknown invariant: " + name);
}

std::vector<InvariantReport> verify_all(const TrialPlan& plan, const FaultInjection& faults) {
  std::vector<InvariantReport> out;
  for (const auto& name : invariant_names()) out.push_back(verify_invariant(name, plan, faults));
  return out;
}

json to_json(const InvariantReport& report) {
  return {{"invariant", report.invariant}, {"trials", report.trials}, {"failures", report.failures}};
}

json to_json(const std::vector<InvariantReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

SubsurfaceConfig example4_config() { return {1, {{1, 4}}}; }

TwistWord example4_word(const HomologyModel& model, const Integer& m) {
  if (m == 0) throw std::invalid_argument("example4: the exponent must be nonzero");
  return {{{model.circle_class(0, 0) + model.circle_class(0, 1), m, Locus::q()}}};
}

AnalysisReport example4_report(const Integer& m) {
  const HomologyModel model = HomologyModel::build(example4_config());
  return analyze(model, example4_word(model, m));
}

}  // namespace torext
