#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jack_fixture.hpp"
#include "stanleychar/exactpoly.hpp"
#include "stanleychar/kerov.hpp"
#include "stanleychar/maps.hpp"
#include "stanleychar/mn_oracle.hpp"
#include "stanleychar/perm.hpp"
#include "stanleychar/shapes.hpp"
#include "stanleychar/stanley.hpp"

namespace stanleychar::cli {
namespace {

std::string show(const Integer& v) { return v.get_str(); }
std::string show(const Rational& v) { return v.get_str(); }
std::string show(const Polynomial& f) { return to_text(f); }
std::string show(const Partition& p) { return p.to_string(); }
std::string show(const Permutation& p) { return p.to_string(); }
std::string show(int v) { return std::to_string(v); }
std::string show(long v) { return std::to_string(v); }
std::string show(std::size_t v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }

// Accumulates cases of one named check and remembers the first mismatch.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <class Expected, class Actual>
  void equal(const std::string& what, const Expected& expected, const Actual& actual) {
    ++result_.cases;
    if (expected == actual || !result_.passed) {
      if (!(expected == actual)) result_.passed = false;
      return;
    }
    result_.passed = false;
    result_.first_mismatch = {
        {"check", result_.name}, {"case", what}, {"expected", show(expected)}, {"actual", show(actual)}};
  }

  void holds(const std::string& what, bool condition) { equal(what, true, condition); }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

Partition cycle(int k) { return Partition(std::vector<int>{k}); }

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  do out.push_back(Permutation::from_one_line(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Shapes with ell <= 2, 0 <= p_i <= 3 and 3 >= q_1 >= q_2 >= 0.
std::vector<MultirectangularShape> small_shapes() {
  std::vector<MultirectangularShape> out;
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) out.push_back({{p}, {q}});
  for (int p1 = 0; p1 <= 3; ++p1)
    for (int p2 = 0; p2 <= 3; ++p2)
      for (int q1 = 0; q1 <= 3; ++q1)
        for (int q2 = 0; q2 <= q1; ++q2) out.push_back({{p1, p2}, {q1, q2}});
  return out;
}

Integer hook_length_dimension(const Partition& lambda) {
  Integer value = 1;
  for (int i = 2; i <= lambda.size(); ++i) value *= i;
  const Partition conj = transpose(lambda);
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) value /= (lambda.row(r) - c) + (conj.row(c) - r) + 1;
  return value;
}

std::vector<CheckResult> perm_suite(int kmax, unsigned) {
  std::vector<CheckResult> out;
  const int exhaustive = std::min(kmax, 5);
  {
    Check check("perm.five_cycle_product");
    const Permutation s1 = Permutation::parse("(1,5,4,2)(3)", 5);
    const Permutation s2 = Permutation::parse("(2,3,5)(1,4)", 5);
    check.equal("sigma1*sigma2", Permutation::parse("(1,2,3,4,5)", 5), compose(s1, s2));
    out.push_back(check.finish());
  }
  {
    Check check("perm.inverse_and_sign");
    for (int k = 0; k <= exhaustive; ++k) {
      const auto perms = all_permutations(k);
      for (const auto& a : perms) {
        check.equal("a*a^-1 for a=" + a.to_string(), Permutation::identity(k), compose(a, inverse(a)));
        for (const auto& b : perms)
          check.equal("sign(a*b) for a=" + a.to_string() + " b=" + b.to_string(), sign(a) * sign(b),
                      sign(compose(a, b)));
      }
    }
    out.push_back(check.finish());
  }
  {
    Check check("perm.factorization_stream");
    for (int k = 0; k <= std::min(kmax, 6); ++k) {
      long factorial = 1;
      for (int i = 2; i <= k; ++i) factorial *= i;
      for (const Partition& mu : partitions_of(k)) {
        const Permutation pi = permutation_from_partition(mu);
        std::set<Permutation> seen;
        long count = 0;
        bool products_ok = true;
        for_each_factorization(pi, [&](const Permutation& s1, const Permutation& s2) {
          ++count;
          seen.insert(s1);
          products_ok = products_ok && compose(s1, s2) == pi;
        });
        check.equal("pairs for pi=" + mu.to_string(), factorial, count);
        check.equal("distinct sigma1 for pi=" + mu.to_string(), static_cast<std::size_t>(factorial), seen.size());
        check.holds("products for pi=" + mu.to_string(), products_ok);
      }
    }
    out.push_back(check.finish());
  }
  return out;
}

std::vector<CheckResult> shapes_suite(int, unsigned) {
  std::vector<CheckResult> out;
  {
    Check check("shapes.three_rectangle_diagram");
    const MultirectangularShape stacked{{2, 3, 2}, {11, 8, 5}};
    check.equal("to_diagram", Partition({11, 11, 8, 8, 8, 5, 5}), to_diagram(stacked));
    check.holds("to_multirect", to_multirect(to_diagram(stacked)) == stacked);
    out.push_back(check.finish());
  }
  {
    Check check("shapes.roundtrip_dilation_transpose");
    for (const Partition& lambda : partitions_up_to(10)) {
      check.equal("to_diagram(to_multirect) " + lambda.to_string(), lambda, to_diagram(to_multirect(lambda)));
      check.equal("transpose involution " + lambda.to_string(), lambda, transpose(transpose(lambda)));
      for (int s = 1; s <= 3; ++s) {
        check.equal("dilation size " + lambda.to_string(), s * s * lambda.size(), dilate(lambda, s).size());
        check.equal("transpose/dilate commute " + lambda.to_string(), dilate(transpose(lambda), s),
                    transpose(dilate(lambda, s)));
      }
    }
    out.push_back(check.finish());
  }
  return out;
}

std::vector<CheckResult> oracle_suite(int kmax, unsigned) {
  std::vector<CheckResult> out;
  {
    Check check("oracle.hook_length_dimension");
    for (const Partition& lambda : partitions_up_to(9))
      check.equal("dim " + lambda.to_string(), hook_length_dimension(lambda), character_degree(lambda));
    out.push_back(check.finish());
  }
  {
    Check check("oracle.column_orthogonality");
    for (int n = 1; n <= 6; ++n)
      for (const Partition& mu : partitions_of(n)) {
        if (mu.length() == n) continue;
        Integer sum = 0;
        for (const Partition& lambda : partitions_of(n))
          sum += irreducible_character(lambda, mu) * character_degree(lambda);
        check.equal("sum over lambda for mu=" + mu.to_string(), Integer(0), sum);
      }
    out.push_back(check.finish());
  }
  {
    Check check("oracle.transpose_covariance");
    for (int k = 0; k <= std::min(kmax, 8); ++k)
      for (const Partition& pi : partitions_of(k))
        for (const Partition& lambda : partitions_up_to(8)) {
          const int s = (k - pi.length()) % 2 == 0 ? 1 : -1;
          check.equal("pi=" + pi.to_string() + " lambda=" + lambda.to_string(),
                      Integer(s * normalized_character(pi, lambda)), normalized_character(pi, transpose(lambda)));
        }
    out.push_back(check.finish());
  }
  return out;
}

std::vector<CheckResult> stanley_suite(int kmax, unsigned threads) {
  std::vector<CheckResult> out;
  if (kmax >= 5) {
    Check check("stanley.ch5_reference_coefficients");
    const Polynomial ch5 = stanley_polynomial(cycle(5), 3, threads);
    const std::vector<std::pair<Monomial, int>> expected = {
        {Monomial{{var_p(1), 5}, {var_q(1), 1}}, 1},   {Monomial{{var_p(1), 4}, {var_q(1), 2}}, -10},
        {Monomial{{var_p(1), 3}, {var_q(1), 3}}, 20},  {Monomial{{var_p(1), 2}, {var_q(1), 4}}, -10},
        {Monomial{{var_p(1), 1}, {var_q(1), 5}}, 1},   {Monomial{{var_p(1), 3}, {var_q(1), 1}}, 15},
        {Monomial{{var_p(1), 2}, {var_q(1), 2}}, -40}, {Monomial{{var_p(1), 1}, {var_q(1), 3}}, 15},
        {Monomial{{var_p(1), 1}, {var_q(1), 1}}, 8},
        {Monomial{{var_p(1), 1}, {var_p(2), 1}, {var_p(3), 1}, {var_q(1), 1}, {var_q(2), 1}, {var_q(3), 1}}, 25},
    };
    for (const auto& [m, c] : expected) check.equal(m.to_string(), Rational(c), coefficient(ch5, m));
    out.push_back(check.finish());
  }
  {
    Check check("stanley.oracle_equivalence");
    const auto shapes = small_shapes();
    for (int k = 0; k <= kmax; ++k)
      for (const Partition& pi : partitions_of(k))
        for (const auto& shape : shapes)
          check.equal("pi=" + pi.to_string() + " " + shape.to_string(), normalized_character(pi, to_diagram(shape)),
                      evaluate_character(pi, shape, threads));
    out.push_back(check.finish());
  }
  {
    Check check("stanley.single_rectangle_reduction");
    for (int k = 0; k <= kmax; ++k)
      for (const Partition& pi : partitions_of(k))
        check.equal("pi=" + pi.to_string(), stanley_rectangular(pi), stanley_polynomial(pi, 1, threads));
    out.push_back(check.finish());
  }
  {
    Check check("stanley.swap_symmetry");
    for (int k = 1; k <= kmax; ++k) {
      const Polynomial ch = stanley_polynomial(cycle(k), 2, threads);
      for (int j1 = 2; j1 <= k + 1; ++j1)
        for (int j2 = 2; j1 + j2 - 2 <= k + 1; ++j2)
          check.equal("k=" + show(k) + " j1=" + show(j1) + " j2=" + show(j2),
                      coefficient(ch, p1p2_monomial(j1 - 1, j2 - 1)), coefficient(ch, p1p2_monomial(j2 - 1, j1 - 1)));
    }
    out.push_back(check.finish());
  }
  {
    Check check("stanley.grading");
    for (int k = 1; k <= kmax; ++k)
      for (const Partition& pi : partitions_of(k)) {
        const Polynomial ch = stanley_polynomial(pi, 2, threads);
        const int bound = k + pi.length();
        for (const auto& [m, c] : ch.terms())
          check.holds("pi=" + pi.to_string() + " monomial " + m.to_string(),
                      m.degree() <= bound && (bound - m.degree()) % 2 == 0);
        if (pi.length() == 1) check.equal("top degree of Ch_" + show(k), k + 1, weighted_degree(ch));
      }
    out.push_back(check.finish());
  }
  {
    Check check("stanley.ell_stability");
    for (int k = 0; k <= std::min(kmax, 5); ++k)
      for (const Partition& pi : partitions_of(k)) {
        const Polynomial reduced =
            substitute(stanley_polynomial(pi, 3, threads), {{var_p(3), Polynomial(0)}, {var_q(3), Polynomial(0)}});
        check.equal("pi=" + pi.to_string(), stanley_polynomial(pi, 2, threads), reduced);
      }
    out.push_back(check.finish());
  }
  {
    Check check("stanley.cycle_type_invariance");
    for (int k = 1; k <= std::min(kmax, 6); ++k)
      for (const Partition& pi : partitions_of(k)) {
        // Conjugate the canonical realization by the reversal x -> k+1-x.
        const Permutation base = permutation_from_partition(pi);
        std::vector<int> rev(static_cast<std::size_t>(k));
        for (int x = 1; x <= k; ++x) rev[static_cast<std::size_t>(x - 1)] = k + 1 - x;
        const Permutation r = Permutation::from_one_line(rev);
        const Permutation other = compose(compose(r, base), inverse(r));
        check.equal("pi=" + pi.to_string(), stanley_polynomial(pi, 2, threads),
                    stanley_polynomial_of(other, 2, threads));
      }
    out.push_back(check.finish());
  }
  return out;
}

std::vector<CheckResult> maps_suite(int kmax, unsigned threads) {
  std::vector<CheckResult> out;
  const Permutation s1 = Permutation::parse("(1,5,4,2)(3)", 5);
  const Permutation s2 = Permutation::parse("(2,3,5)(1,4)", 5);
  {
    Check check("maps.five_cycle_torus");
    const BipartiteMap m = build_map(s1, s2);
    check.equal("white vertices", std::size_t{2}, m.white.count());
    check.equal("black vertices", std::size_t{2}, m.black.count());
    check.equal("faces", std::size_t{1}, m.faces.count());
    check.equal("euler characteristic", 0, euler_characteristic(m));
    check.holds("genus", genus_per_component(m) == std::vector<int>{1});
    out.push_back(check.finish());
  }
  {
    Check check("maps.explicit_embedding");
    const BipartiteMap m = build_map(s1, s2);
    const Partition lambda({3, 1});
    // Black (1,4) -> row 2, (2,3,5) -> row 1; white (1,5,4,2) -> column 1, (3) -> column 3.
    const Embedding explicit_embedding{{1, 3}, {2, 1}, {{2, 1}, {1, 1}, {1, 3}, {2, 1}, {1, 1}}};
    check.holds("explicit assignment is an embedding", is_embedding(m, lambda, explicit_embedding));
    const auto all = enumerate_embeddings(m, lambda);
    check.holds("explicit assignment is enumerated", std::find(all.begin(), all.end(), explicit_embedding) != all.end());
    check.equal("enumeration matches count", count_embeddings(m, lambda), Integer(static_cast<long>(all.size())));
    out.push_back(check.finish());
  }
  {
    Check check("maps.embedding_sum_equals_character");
    for (int k = 0; k <= std::min(kmax, 4); ++k)
      for (const Partition& pi : partitions_of(k))
        for (const Partition& lambda : partitions_up_to(8))
          check.equal("pi=" + pi.to_string() + " lambda=" + lambda.to_string(), normalized_character(pi, lambda),
                      signed_embedding_sum(pi, lambda, threads));
    out.push_back(check.finish());
  }
  {
    Check check("maps.embeddings_match_coloring_sum");
    std::vector<Partition> diagrams = partitions_up_to(8);
    for (int k = 1; k <= std::min(kmax, 4); ++k)
      for (const Partition& pi : partitions_of(k))
        for_each_factorization(permutation_from_partition(pi), [&](const Permutation& a, const Permutation& b) {
          const BipartiteMap m = build_map(a, b);
          for (const Partition& lambda : diagrams)
            check.equal("sigma1=" + a.to_string() + " lambda=" + lambda.to_string(),
                        coloring_weight_sum(a, b, to_multirect(lambda)), count_embeddings(m, lambda));
        });
    out.push_back(check.finish());
  }
  {
    Check check("maps.planar_iff_minimal");
    for (int k = 1; k <= kmax; ++k)
      for_each_factorization(permutation_from_partition(cycle(k)), [&](const Permutation& a, const Permutation& b) {
        const BipartiteMap m = build_map(a, b);
        const auto genera = genus_per_component(m);
        check.equal("components for sigma1=" + a.to_string(), std::size_t{1}, genera.size());
        check.equal("sigma1=" + a.to_string(), num_cycles(a) + num_cycles(b) == k + 1, genera.front() == 0);
      });
    out.push_back(check.finish());
  }
  return out;
}

std::vector<CheckResult> kerov_suite(int kmax, unsigned threads) {
  std::vector<CheckResult> out;
  std::map<int, KerovPolynomial> kerov;
  for (int k = 1; k <= kmax; ++k) kerov.emplace(k, kerov_polynomial(k, threads));

  {
    Check check("kerov.small_k_expansions");
    const std::vector<std::string> expected = {"R2", "R3", "R4 + R2", "R5 + 5*R3", "R6 + 15*R4 + 5*R2^2 + 8*R2"};
    for (int k = 1; k <= std::min(kmax, 5); ++k)
      check.equal("K_" + show(k), parse_polynomial(expected[static_cast<std::size_t>(k - 1)]), kerov.at(k).expression);
    out.push_back(check.finish());
  }
  {
    Check check("kerov.positivity");
    for (const auto& [k, kk] : kerov) {
      check.holds("well-formed K_" + show(k), is_well_formed(kk));
      for (const auto& [m, c] : kk.expression.terms())
        check.holds("K_" + show(k) + " coefficient of " + m.to_string(), c > 0 && is_integral(c));
    }
    out.push_back(check.finish());
  }
  {
    Check check("kerov.evaluation_matches_characters");
    for (const auto& [k, kk] : kerov)
      for (const Partition& lambda : partitions_up_to(9))
        check.equal("K_" + show(k) + " at " + lambda.to_string(), normalized_character(cycle(k), lambda),
                    evaluate_kerov(kk, lambda));
    out.push_back(check.finish());
  }
  {
    Check check("kerov.linear_chain");
    for (const auto& [k, kk] : kerov) {
      const Polynomial rect = stanley_rectangular(cycle(k));
      for (int i = 2; i <= k + 1; ++i) {
        const Rational pairs(count_linear_pairs(k, i, threads));
        const std::string tag = "k=" + show(k) + " i=" + show(i);
        check.equal(tag + " [R_i]K_k", pairs, coefficient(kk.expression, Monomial{{var_R(i), 1}}));
        check.equal(tag + " [p q^(i-1)]", pairs, coefficient(rect, Monomial{{var_p(1), 1}, {var_q(1), i - 1}}));
      }
    }
    out.push_back(check.finish());
  }
  {
    Check check("kerov.quadratic_chain");
    for (const auto& [k, kk] : kerov) {
      const Polynomial ch = stanley_polynomial(cycle(k), 2, threads);
      for (int j1 = 2; j1 <= k; ++j1)
        for (int j2 = 2; j1 + j2 <= k + 1; ++j2) {
          if (j1 == j2) continue;
          const std::string tag = "k=" + show(k) + " j1=" + show(j1) + " j2=" + show(j2);
          const Rational triples(count_quadratic_triples(k, j1, j2, threads));
          const Monomial rr = Monomial{{var_R(j1), 1}, {var_R(j2), 1}};
          check.equal(tag + " formula", triples, quadratic_coefficient_by_formula(ch, j1, j2));
          check.equal(tag + " [R_j1 R_j2]K_k", triples, coefficient(kk.expression, rr));
          const InclusionExclusion direct = inclusion_exclusion_breakdown(k, j1, j2, threads);
          const InclusionExclusion from_coeffs = breakdown_from_coefficients(ch, j1, j2);
          check.equal(tag + " signed total", Integer(triples.get_num()), direct.signed_total());
          check.equal(tag + " unrestricted", from_coeffs.unrestricted, direct.unrestricted);
          check.equal(tag + " first restricted", from_coeffs.first_restricted, direct.first_restricted);
          check.equal(tag + " second restricted", from_coeffs.second_restricted, direct.second_restricted);
          check.equal(tag + " doubly restricted", Integer(0), direct.both_restricted);
        }
    }
    out.push_back(check.finish());
  }
  {
    Check check("kerov.cumulant_structure");
    for (int k = 1; k <= kmax; ++k) {
      const Polynomial two = free_cumulant_poly(k + 1, 2, threads).poly;
      const Polynomial one = substitute(two, {{var_p(2), Polynomial(0)}, {var_q(2), Polynomial(0)}});
      for (const auto& [m, c] : one.terms()) {
        const bool leading = m == Monomial{{var_p(1), 1}, {var_q(1), k}};
        if (leading)
          check.equal("[p q^k]R_" + show(k + 1), Rational(1), c);
        else
          check.holds("p^2 divides " + m.to_string() + " in R_" + show(k + 1), m.exponent(var_p(1)) >= 2);
      }
      check.equal("[p q^k]R_" + show(k + 1) + " present", Rational(1),
                  coefficient(one, Monomial{{var_p(1), 1}, {var_q(1), k}}));
      for (int j1 = 1; j1 <= k - 1; ++j1) {
        const int j2 = k + 1 - j1;
        check.equal("R_" + show(k + 1) + " j1=" + show(j1), Rational(-k),
                    coefficient(two, p1p2_monomial(j1 - 1, j2 - 1)));
      }
    }
    out.push_back(check.finish());
  }
  {
    // Expands every R-monomial of weight <= kmax+1 on two rectangles.
    Check check("kerov.r_monomial_expansions");
    std::map<int, Polynomial> cumulants;
    for (int j = 2; j <= kmax + 1; ++j) cumulants.emplace(j, free_cumulant_poly(j, 2, threads).poly);
    for (const Monomial& m : cumulant_monomials(kmax + 1)) {
      Polynomial expanded(1);
      for (const auto& [x, e] : m.factors()) expanded *= pow(cumulants.at(x.index), e);
      const int weight = m.weighted_degree(Weights{});
      for (int j1 = 2; j1 <= weight; ++j1)
        for (int j2 = 2; j1 + j2 - 2 <= weight; ++j2) {
          const std::string tag = m.to_string() + " j1=" + show(j1) + " j2=" + show(j2);
          check.equal(tag + " swap", coefficient(expanded, p1p2_monomial(j1 - 1, j2 - 1)),
                      coefficient(expanded, p1p2_monomial(j2 - 1, j1 - 1)));
          if (j1 != j2)
            check.equal(tag + " quadratic formula",
                        Rational(m == Monomial{{var_R(j1), 1}, {var_R(j2), 1}} ? 1 : 0),
                        quadratic_coefficient_by_formula(expanded, j1, j2));
        }
    }
    out.push_back(check.finish());
  }
  {
    Check check("kerov.dilation_limit");
    const Polynomial s = Polynomial::variable(var_s());
    for (int k = 1; k <= std::min(kmax, 5); ++k)
      for (const Partition& lambda : partitions_up_to(6)) {
        if (lambda.empty()) continue;
        const MultirectangularShape shape = to_multirect(lambda);
        std::map<Indeterminate, Polynomial> dilated;
        for (int i = 0; i < shape.rectangles(); ++i) {
          dilated[var_p(i + 1)] = s * Rational(shape.p[static_cast<std::size_t>(i)]);
          dilated[var_q(i + 1)] = s * Rational(shape.q[static_cast<std::size_t>(i)]);
        }
        const Polynomial in_s = substitute(stanley_polynomial(cycle(k), shape.rectangles(), threads), dilated);
        const std::string tag = "k=" + show(k) + " lambda=" + lambda.to_string();
        check.holds(tag + " degree", weighted_degree(in_s) <= k + 1);
        check.equal(tag + " top coefficient", Rational(free_cumulant_value(k + 1, lambda)),
                    coefficient(in_s, Monomial{{var_s(), k + 1}}));
        for (int factor = 1; factor <= 2; ++factor)
          check.equal(tag + " at s=" + show(factor), Rational(normalized_character(cycle(k), dilate(lambda, factor))),
                      evaluate(in_s, {{var_s(), Rational(factor)}}));
      }
    out.push_back(check.finish());
  }
  return out;
}

std::vector<CheckResult> jack_suite(int, unsigned threads) {
  std::vector<CheckResult> out;
  const Polynomial jack = jack_fixture();
  {
    Check check("jack.gamma_zero_specialization");
    check.equal("number of terms", std::size_t{19}, jack.size());
    check.equal("gamma=0", stanley_polynomial(cycle(3), 2, threads), substitute(jack, {{var_gamma(), Polynomial(0)}}));
    out.push_back(check.finish());
  }
  {
    Check check("jack.gamma_coefficients");
    const Polynomial gamma2 = homogeneous_component(jack, 2, Weights{0, 0, 0, 0, 1});
    const Polynomial gamma1 = homogeneous_component(jack, 1, Weights{0, 0, 0, 0, 1});
    check.equal("gamma^2 row", parse_polynomial("2*p1*q1*gamma^2 + 2*p2*q2*gamma^2"), gamma2);
    check.equal("gamma row",
                parse_polynomial("-3*p1^2*q1*gamma + 3*p1*q1^2*gamma - 6*p1*p2*q2*gamma - 3*p2^2*q2*gamma"
                                 " + 3*p2*q2^2*gamma"),
                gamma1);
    out.push_back(check.finish());
  }
  return out;
}

using Suite = std::function<std::vector<CheckResult>(int, unsigned)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"perm", perm_suite},       {"shapes", shapes_suite}, {"oracle", oracle_suite},        {"stanley", stanley_suite},
      {"maps", maps_suite},       {"kerov", kerov_suite},   {"jack-fixture", jack_suite},
  };
  return table;
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) out << " first mismatch: " << c.first_mismatch.dump();
    out << '\n';
  }
  out << "summary: " << passed() << " passed, " << failed() << " failed\n";
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"first_mismatch", c.first_mismatch}});
  return {{"checks", checks_json}, {"passed", passed()}, {"failed", failed()}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [name, suite] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

VerifyReport run_verification(const std::string& suite, int kmax, unsigned threads) {
  VerifyReport report;
  bool matched = false;
  for (const auto& [name, run] : suites()) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    auto results = run(kmax, threads);
    report.checks.insert(report.checks.end(), results.begin(), results.end());
  }
  if (!matched) throw std::invalid_argument("unknown verification suite '" + suite + "'");
  return report;
}

}  // namespace stanleychar::cli
