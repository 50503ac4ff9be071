#include "stanleychar/kerov.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

#include "stanleychar/linear_solve.hpp"
#include "stanleychar/mn_oracle.hpp"
#include "stanleychar/perm.hpp"
#include "stanleychar/polynomial_json.hpp"
#include "stanleychar/stanley.hpp"

namespace stanleychar {
namespace {

constexpr int kMaxExtraRectangles = 2;

Permutation long_cycle(int k) { return permutation_from_partition(Partition(std::vector<int>{k})); }

Integer as_integer(const Rational& value, const char* what) {
  if (!is_integral(value)) throw std::logic_error(std::string("expected an integer ") + what);
  return value.get_num();
}

// For each cycle of sigma2, the number of cycles of sigma1 meeting it.
std::vector<int> cycles_met(const Permutation& s1, const Permutation& s2) {
  const CycleDecomposition c1 = cycle_decomposition(s1);
  const CycleDecomposition c2 = cycle_decomposition(s2);
  std::vector<int> white_of(static_cast<std::size_t>(s1.degree()));
  for (std::size_t c = 0; c < c1.cycles.size(); ++c)
    for (int x : c1.cycles[c]) white_of[static_cast<std::size_t>(x - 1)] = static_cast<int>(c);
  std::vector<int> met;
  for (const auto& d : c2.cycles) {
    std::vector<bool> seen(c1.count(), false);
    int count = 0;
    for (int x : d) {
      const auto w = static_cast<std::size_t>(white_of[static_cast<std::size_t>(x - 1)]);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
      }
    }
    met.push_back(count);
  }
  return met;
}

void check_quadratic_args(int k, int j1, int j2) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (j1 < 2 || j2 < 2) throw std::invalid_argument("quadratic indices start at 2");
  if (j1 == j2) throw std::invalid_argument("equal quadratic indices are not covered by the triple count; use the solver");
}

InclusionExclusion add(InclusionExclusion a, const InclusionExclusion& b) {
  a.unrestricted += b.unrestricted;
  a.first_restricted += b.first_restricted;
  a.second_restricted += b.second_restricted;
  a.both_restricted += b.both_restricted;
  return a;
}

}  // namespace

CumulantExpression free_cumulant_poly(int j, int ell, unsigned threads) {
  if (j < 2) throw std::invalid_argument("free cumulants start at R2");
  const Polynomial ch = stanley_polynomial(Partition(std::vector<int>{j - 1}), ell, threads);
  return {j, ell, homogeneous_component(ch, j)};
}

Integer free_cumulant_value(int j, const Partition& lambda) {
  if (j < 2) throw std::invalid_argument("free cumulants start at R2");
  const MultirectangularShape shape = to_multirect(lambda);
  if (shape.rectangles() == 0) return 0;
  return as_integer(evaluate(free_cumulant_poly(j, shape.rectangles()).poly, stanley_coordinates(shape)),
                    "free cumulant value");
}

std::vector<Monomial> cumulant_monomials(int max_weight) {
  std::vector<Monomial> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    std::vector<Monomial::Factor> factors;
    for (int part : parts) factors.emplace_back(var_R(part), 1);
    out.emplace_back(std::move(factors));
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(max_weight, max_weight);
  return out;
}

KerovPolynomial kerov_polynomial(int k, unsigned threads) {
  if (k < 1) throw std::invalid_argument("Kerov polynomials are defined for k >= 1");
  const std::vector<Monomial> basis = cumulant_monomials(k + 1);

  for (int ell = k; ell <= k + kMaxExtraRectangles; ++ell) {
    const Polynomial target = stanley_polynomial(Partition(std::vector<int>{k}), ell, threads);
    std::map<int, Polynomial> cumulants;
    for (int j = 2; j <= k + 1; ++j) cumulants[j] = free_cumulant_poly(j, ell, threads).poly;

    std::vector<Polynomial> columns;
    columns.reserve(basis.size());
    for (const Monomial& m : basis) {
      Polynomial expanded(1);
      for (const auto& [x, e] : m.factors()) expanded *= pow(cumulants.at(x.index), e);
      columns.push_back(std::move(expanded));
    }

    std::map<Monomial, std::size_t, TermOrder> row_of;
    auto register_rows = [&](const Polynomial& f) {
      for (const auto& [m, c] : f.terms()) row_of.try_emplace(m, row_of.size());
    };
    register_rows(target);
    for (const auto& col : columns) register_rows(col);

    RationalMatrix a(row_of.size(), basis.size());
    std::vector<Rational> b(row_of.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [m, coeff] : columns[c].terms()) a(row_of.at(m), c) = coeff;
    for (const auto& [m, coeff] : target.terms()) b[row_of.at(m)] = coeff;

    const LinearSolution sol = solve_linear_exact(std::move(a), std::move(b));
    if (!sol.consistent)
      throw std::runtime_error("Ch_" + std::to_string(k) + " is not a polynomial in R_2..R_" +
                               std::to_string(k + 1) + " on " + std::to_string(ell) + " rectangles");
    if (!sol.unique) continue;

    KerovPolynomial kk{k, {}, ell};
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!is_integral(sol.solution[i]))
        throw std::runtime_error("non-integer Kerov coefficient " + to_string(sol.solution[i]) + " for " +
                                 basis[i].to_string());
      kk.expression.add_term(basis[i], sol.solution[i]);
    }
    return kk;
  }
  throw std::runtime_error("rank-deficient Kerov matching system for k=" + std::to_string(k) + " up to " +
                           std::to_string(k + kMaxExtraRectangles) + " rectangles");
}

Integer evaluate_kerov(const KerovPolynomial& kk, const Partition& lambda) {
  std::map<Indeterminate, Rational> values;
  for (const Indeterminate& x : indeterminates(kk.expression)) {
    if (x.family != Family::R) throw std::invalid_argument("Kerov polynomial contains " + x.name());
    values[x] = free_cumulant_value(x.index, lambda);
  }
  return as_integer(evaluate(kk.expression, values), "Kerov polynomial value");
}

bool is_well_formed(const KerovPolynomial& kk) {
  if (kk.k < 1 || !kk.expression.is_integral()) return false;
  for (const auto& [m, c] : kk.expression.terms()) {
    for (const auto& [x, e] : m.factors())
      if (x.family != Family::R || x.index < 2 || x.index > kk.k + 1) return false;
    if (m.grade() > kk.k + 1 || (kk.k + 1 - m.grade()) % 2 != 0) return false;
  }
  return true;
}

Integer count_linear_pairs(int k, int i, unsigned threads) {
  if (k < 1 || i < 2 || i > k + 1) throw std::invalid_argument("count_linear_pairs needs 2 <= i <= k+1");
  const long count = reduce_factorizations(
      long_cycle(k), threads, 0L,
      [i](long& acc, const Permutation& s1, const Permutation& s2) {
        if (num_cycles(s2) == 1 && num_cycles(s1) == i - 1) ++acc;
      },
      [](long a, long b) { return a + b; });
  return Integer(count);
}

InclusionExclusion inclusion_exclusion_breakdown(int k, int j1, int j2, unsigned threads) {
  check_quadratic_args(k, j1, j2);
  const int white = j1 + j2 - 2;
  return reduce_factorizations(
      long_cycle(k), threads, InclusionExclusion{},
      [&](InclusionExclusion& acc, const Permutation& s1, const Permutation& s2) {
        if (num_cycles(s2) != 2 || num_cycles(s1) != white) return;
        const std::vector<int> met = cycles_met(s1, s2);
        // Both bijective labelings: f^-1(1) is cycle `one`, f^-1(2) the other.
        for (std::size_t one = 0; one < 2; ++one) {
          const bool first = met[one] <= j1 - 1;
          const bool second = met[1 - one] <= j2 - 1;
          acc.unrestricted += 1;
          if (first) acc.first_restricted += 1;
          if (second) acc.second_restricted += 1;
          if (first && second) acc.both_restricted += 1;
        }
      },
      add);
}

Integer count_quadratic_triples(int k, int j1, int j2, unsigned threads) {
  check_quadratic_args(k, j1, j2);
  const int white = j1 + j2 - 2;
  const long count = reduce_factorizations(
      long_cycle(k), threads, 0L,
      [&](long& acc, const Permutation& s1, const Permutation& s2) {
        if (num_cycles(s2) != 2 || num_cycles(s1) != white) return;
        const std::vector<int> met = cycles_met(s1, s2);
        if (met[0] >= j1 && met[1] >= j2) ++acc;
        if (met[1] >= j1 && met[0] >= j2) ++acc;
      },
      [](long a, long b) { return a + b; });
  return Integer(count);
}

Monomial p1p2_monomial(int a, int b) {
  return Monomial{{var_p(1), 1}, {var_p(2), 1}, {var_q(1), a}, {var_q(2), b}};
}

Rational quadratic_coefficient_by_formula(const Polynomial& f, int j1, int j2) {
  if (j1 == j2) throw std::invalid_argument("the quadratic coefficient formula needs j1 != j2");
  if (j1 < 2 || j2 < 2) throw std::invalid_argument("quadratic indices start at 2");
  return coefficient(f, p1p2_monomial(j1 - 1, j2 - 1)) - coefficient(f, p1p2_monomial(0, j1 + j2 - 2));
}

InclusionExclusion breakdown_from_coefficients(const Polynomial& ch_k, int j1, int j2) {
  if (j1 == j2 || j1 < 2 || j2 < 2) throw std::invalid_argument("breakdown needs distinct indices >= 2");
  const int total = j1 + j2 - 2;
  auto c = [&](int a, int b) { return as_integer(coefficient(ch_k, p1p2_monomial(a, b)), "p1p2 coefficient"); };
  InclusionExclusion out;
  for (int b = 1; b <= total; ++b) out.unrestricted -= c(total - b, b);
  for (int a = 1; a <= j1 - 1; ++a) out.first_restricted -= c(total - a, a);
  for (int b = 1; b <= j2 - 1; ++b) out.second_restricted -= c(total - b, b);
  return out;
}

std::filesystem::path KerovCache::path_for(int k) const { return dir_ / ("K" + std::to_string(k) + ".json"); }

std::optional<KerovPolynomial> KerovCache::load(int k) const {
  std::ifstream in(path_for(k));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema").get<int>() != kSchemaVersion || j.at("k").get<int>() != k) return std::nullopt;
    KerovPolynomial kk{k, polynomial_from_json(j.at("polynomial")), j.at("rectangles").get<int>()};
    if (!is_well_formed(kk)) return std::nullopt;
    for (const Partition& lambda : partitions_up_to(std::min(k + 1, 7)))
      if (evaluate_kerov(kk, lambda) != normalized_character(Partition(std::vector<int>{k}), lambda))
        return std::nullopt;
    return kk;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void KerovCache::store(const KerovPolynomial& kk) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const nlohmann::json j = {{"schema", kSchemaVersion},
                            {"k", kk.k},
                            {"rectangles", kk.rectangles},
                            {"polynomial", to_json(kk.expression)}};
  const std::filesystem::path final_path = path_for(kk.k);
  std::filesystem::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) throw std::runtime_error("cannot move cache entry into place: " + ec.message());
}

}  // namespace stanleychar
