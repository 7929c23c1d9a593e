#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adespec/algebra/ratfun.hpp"

namespace adespec::recursion {

using algebra::Poly;
using algebra::RationalFunction;

/// (d, multiplicity) pairs standing for (1 - q^d)^multiplicity.
using FactorList = std::vector<std::pair<std::size_t, long>>;

struct GreedyFactors {
  FactorList num;
  FactorList den;
  Poly num_residual;
  Poly den_residual;
};

/// Divides num and den of f by 1 - q^d as long as possible, d descending
/// from the degree to 1. Factors are listed in ascending d.
GreedyFactors cyclotomic_simplify(const RationalFunction& f);

/// Exact product form f = c * prod_d (1 - q^d)^{e_d} when num and den both
/// factor completely into cyclotomic polynomials; exponents may be negative.
/// Obtained by Moebius inversion on the Phi_n multiplicities.
struct ProductForm {
  algebra::Rational constant;
  FactorList exponents;  // ascending d, nonzero exponents only
  RationalFunction value() const;
  std::string str() const;
};

/// Empty when some factor is not cyclotomic.
std::optional<ProductForm> product_form(const RationalFunction& f);

/// Greedy factors rendered as "(1-q^2)(1-q^3)/((1-q^4))" with residuals.
std::string str(const GreedyFactors& g);

}  // namespace adespec::recursion
