// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "jack_fixture.hpp"
#include "stanleychar/kerov.hpp"
#include "stanleychar/maps.hpp"
#include "stanleychar/mn_oracle.hpp"
#include "stanleychar/stanley.hpp"

using namespace stanleychar;

namespace {

Partition cycle(int k) { return Partition(std::vector<int>{k}); }

Monomial pq(int a, int b) { return Monomial{{var_p(1), a}, {var_q(1), b}}; }

const std::map<int, KerovPolynomial>& kerov_up_to_6() {
  static const std::map<int, KerovPolynomial> table = [] {
    std::map<int, KerovPolynomial> t;
    for (int k = 1; k <= 6; ++k) t.emplace(k, kerov_polynomial(k));
    return t;
  }();
  return table;
}

bool ch5_coefficients() {
  const Polynomial ch5 = stanley_polynomial(cycle(5), 3);
  const std::vector<std::pair<Monomial, int>> expected = {
      {pq(5, 1), 1}, {pq(4, 2), -10}, {pq(3, 3), 20}, {pq(2, 4), -10}, {pq(1, 5), 1},
      {pq(3, 1), 15}, {pq(2, 2), -40}, {pq(1, 3), 15}, {pq(1, 1), 8},
      {Monomial{{var_p(1), 1}, {var_p(2), 1}, {var_p(3), 1}, {var_q(1), 1}, {var_q(2), 1}, {var_q(3), 1}}, 25}};
  for (const auto& [m, c] : expected)
    if (coefficient(ch5, m) != c) return false;
  return true;
}

bool small_kerov() {
  const std::vector<std::string> expected = {"R2", "R3", "R4 + R2", "R5 + 5*R3", "R6 + 15*R4 + 5*R2^2 + 8*R2"};
  for (int k = 1; k <= 5; ++k)
    if (kerov_up_to_6().at(k).expression != parse_polynomial(expected[static_cast<std::size_t>(k - 1)])) return false;
  return true;
}

bool oracle_equivalence() {
  std::vector<MultirectangularShape> shapes;
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) shapes.push_back({{p}, {q}});
  for (int p1 = 0; p1 <= 3; ++p1)
    for (int p2 = 0; p2 <= 3; ++p2)
      for (int q1 = 0; q1 <= 3; ++q1)
        for (int q2 = 0; q2 <= q1; ++q2) shapes.push_back({{p1, p2}, {q1, q2}});
  for (int k = 0; k <= 6; ++k)
    for (const Partition& pi : partitions_of(k))
      for (const auto& shape : shapes)
        if (evaluate_character(pi, shape) != normalized_character(pi, to_diagram(shape))) return false;
  return true;
}

bool linear_chain() {
  if (count_linear_pairs(5, 6) != 1 || count_linear_pairs(5, 4) != 15 || count_linear_pairs(5, 2) != 8) return false;
  for (int k = 1; k <= 6; ++k) {
    const Polynomial rect = stanley_rectangular(cycle(k));
    for (int i = 2; i <= k + 1; ++i) {
      const Rational n(count_linear_pairs(k, i));
      if (n != coefficient(kerov_up_to_6().at(k).expression, Monomial{{var_R(i), 1}})) return false;
      if (n != coefficient(rect, pq(1, i - 1))) return false;
    }
  }
  return true;
}

bool quadratic_chain() {
  for (int k = 1; k <= 6; ++k) {
    const Polynomial ch = stanley_polynomial(cycle(k), 2);
    for (int j1 = 2; j1 <= k; ++j1)
      for (int j2 = 2; j1 + j2 <= k + 1; ++j2) {
        if (j1 == j2) continue;
        const Integer n = count_quadratic_triples(k, j1, j2);
        if (Rational(n) != quadratic_coefficient_by_formula(ch, j1, j2)) return false;
        if (Rational(n) !=
            coefficient(kerov_up_to_6().at(k).expression, Monomial{{var_R(j1), 1}, {var_R(j2), 1}}))
          return false;
        const InclusionExclusion direct = inclusion_exclusion_breakdown(k, j1, j2);
        const InclusionExclusion read = breakdown_from_coefficients(ch, j1, j2);
        if (direct.signed_total() != n || direct.both_restricted != 0) return false;
        if (read.unrestricted != direct.unrestricted || read.first_restricted != direct.first_restricted ||
            read.second_restricted != direct.second_restricted)
          return false;
      }
  }
  return true;
}

bool swap_symmetry() {
  for (int k = 1; k <= 6; ++k) {
    const Polynomial ch = stanley_polynomial(cycle(k), 2);
    for (int j1 = 2; j1 <= k + 2; ++j1)
      for (int j2 = 2; j2 <= k + 2; ++j2)
        if (coefficient(ch, p1p2_monomial(j1 - 1, j2 - 1)) != coefficient(ch, p1p2_monomial(j2 - 1, j1 - 1)))
          return false;
  }
  return true;
}

bool cumulant_structure() {
  for (int k = 1; k <= 6; ++k) {
    const Polynomial two = free_cumulant_poly(k + 1, 2).poly;
    const Polynomial one = substitute(two, {{var_p(2), Polynomial(0)}, {var_q(2), Polynomial(0)}});
    if (coefficient(one, pq(1, k)) != 1) return false;
    for (const auto& [m, c] : one.terms())
      if (!(m == pq(1, k)) && m.exponent(var_p(1)) < 2) return false;
    for (int j1 = 1; j1 <= k - 1; ++j1)
      if (coefficient(two, p1p2_monomial(j1 - 1, k - j1)) != -k) return false;
  }
  return true;
}

bool dilation_limit() {
  const Polynomial s = Polynomial::variable(var_s());
  for (int k = 1; k <= 5; ++k)
    for (const Partition& lambda : partitions_up_to(6)) {
      if (lambda.empty()) continue;
      const MultirectangularShape shape = to_multirect(lambda);
      std::map<Indeterminate, Polynomial> dilated;
      for (int i = 0; i < shape.rectangles(); ++i) {
        dilated[var_p(i + 1)] = s * Rational(shape.p[static_cast<std::size_t>(i)]);
        dilated[var_q(i + 1)] = s * Rational(shape.q[static_cast<std::size_t>(i)]);
      }
      const Polynomial in_s = substitute(stanley_polynomial(cycle(k), shape.rectangles()), dilated);
      if (weighted_degree(in_s) > k + 1) return false;
      if (coefficient(in_s, Monomial{{var_s(), k + 1}}) != Rational(free_cumulant_value(k + 1, lambda))) return false;
      for (int f = 1; f <= 3; ++f)
        if (evaluate(in_s, {{var_s(), f}}) != Rational(normalized_character(cycle(k), dilate(lambda, f)))) return false;
    }
  return true;
}

bool maps_criterion() {
  const BipartiteMap torus = build_map(Permutation::parse("(1,5,4,2)(3)", 5), Permutation::parse("(2,3,5)(1,4)", 5));
  if (euler_characteristic(torus) != 0) return false;
  for (int k = 0; k <= 4; ++k)
    for (const Partition& pi : partitions_of(k))
      for (const Partition& lambda : partitions_up_to(8))
        if (signed_embedding_sum(pi, lambda) != normalized_character(pi, lambda)) return false;
  for (int k = 1; k <= 6; ++k)
    for (const auto& f : enumerate_factorizations(permutation_from_partition(cycle(k)))) {
      const auto genera = genus_per_component(build_map(f.sigma1, f.sigma2));
      const bool minimal = num_cycles(f.sigma1) + num_cycles(f.sigma2) == k + 1;
      if (genera.size() != 1 || (genera[0] == 0) != minimal) return false;
    }
  return true;
}

bool positivity() {
  for (const auto& [k, kk] : kerov_up_to_6())
    for (const auto& [m, c] : kk.expression.terms())
      if (c < 0 || !is_integral(c)) return false;
  return true;
}

bool jack() {
  const Polynomial f = cli::jack_fixture();
  if (substitute(f, {{var_gamma(), Polynomial(0)}}) != stanley_polynomial(cycle(3), 2)) return false;
  const Polynomial g2 = homogeneous_component(f, 2, Weights{0, 0, 0, 0, 1});
  const Polynomial g1 = homogeneous_component(f, 1, Weights{0, 0, 0, 0, 1});
  return g2 == parse_polynomial("2*p1*q1*gamma^2 + 2*p2*q2*gamma^2") &&
         g1 == parse_polynomial("-3*p1^2*q1*gamma + 3*p1*q1^2*gamma - 6*p1*p2*q2*gamma - 3*p2^2*q2*gamma + "
                                "3*p2*q2^2*gamma");
}

bool determinism() {
  const unsigned many = std::max(4u, std::thread::hardware_concurrency());
  auto report = [](unsigned threads, int& code) {
    clear_character_cache();
    clear_stanley_cache();
    cli::JobSpec job;
    job.command = cli::Command::Verify;
    job.suite = "all";
    job.kmax = 6;
    job.threads = threads;
    std::ostringstream out, err;
    code = cli::run(job, out, err);
    return out.str();
  };
  int code1 = -1, code_n = -1;
  const std::string serial = report(1, code1);
  const std::string parallel = report(many, code_n);
  return code1 == cli::kExitOk && code_n == cli::kExitOk && !serial.empty() && serial == parallel;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"Ch_5 on three rectangles reproduces the ten reference coefficients", ch5_coefficients},
      {"K_1..K_5 match the reference Kerov polynomials", small_kerov},
      {"Stanley formula equals Murnaghan-Nakayama for k <= 6, two-rectangle grid", oracle_equivalence},
      {"linear coefficient chain: pairs = [R_i]K_k = [p q^(i-1)]Ch_k", linear_chain},
      {"quadratic coefficient chain with inclusion-exclusion breakdown", quadratic_chain},
      {"swap symmetry of p1 p2 coefficients of Ch_k", swap_symmetry},
      {"free cumulant structure on one and two rectangles", cumulant_structure},
      {"dilation limit: top coefficient of Ch_k(s lambda) is R_(k+1)(lambda)", dilation_limit},
      {"maps: torus example, embedding sums, planar iff minimal", maps_criterion},
      {"Kerov positivity for k <= 6", positivity},
      {"Jack fixture at gamma = 0 and its gamma coefficients", jack},
      {"verify --suite all --kmax 6 identical at 1 and N threads", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string note;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::printf("%s %2zu. %s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
