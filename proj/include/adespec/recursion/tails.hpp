#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adespec/algebra/matrix.hpp"
#include "adespec/algebra/ratfun.hpp"
#include "adespec/graphs/graph.hpp"

namespace adespec::recursion {

using algebra::IntMatrix;
using algebra::LaurentPoly;
using algebra::RationalFunction;

enum class TailKind { a_tail, fork_tail };

std::string to_string(TailKind kind);

/// The family X_k obtained by growing a tail on the seed graph X_0, described
/// by the even block L0 of X_0's squared adjacency matrix (distinguished
/// vertex first; for fork tails the second row is the other fork leaf).
struct TailFamily {
  TailKind kind = TailKind::a_tail;
  IntMatrix L0;
  LaurentPoly P0;  // det(y - K0) or det(y - J0), y = 2 + q + 1/q
  LaurentPoly P1;
  RationalFunction P;  // (P1 - P0/q) / (P1 - q P0)

  bool p_is_monomial() const;
};

/// Throws Error(shape) for a non-square or non-symmetric L0, and for a
/// fork seed with fewer than two rows.
TailFamily tail_family(const IntMatrix& L0, TailKind kind);

/// Theta of X_k from the closed form.
RationalFunction family_theta(const TailFamily& fam, long k);

struct FamilyCheck {
  bool ok = true;
  std::optional<long> failing_k;
};

/// Compares family_theta with the resolvent pipeline on builder(k), k <= k_max.
FamilyCheck verify_family(const TailFamily& fam,
                          const std::function<graphs::BipartiteGraph(long)>& builder,
                          long k_max);

/// Explicit K_k (a-tail) or J_k (fork) for k >= 0: the matrix whose
/// characteristic polynomial in y is P_k.
IntMatrix p_matrix(const TailFamily& fam, long k);
/// Explicit K_k for a fork family (L_k minus its first row and column); for an
/// a-tail family this is L_k itself.
IntMatrix q_matrix(const TailFamily& fam, long k);
/// Explicit L_k for a fork family.
IntMatrix r_matrix(const TailFamily& fam, long k);

/// Closed-form solutions of the three-term recursion, as rational functions
/// of q: P_k, Q_k and (fork only) R_k.
struct RecursionTriple {
  LaurentPoly p_plus;   // P1 - q P0
  LaurentPoly p_minus;  // P1 - P0/q
  RationalFunction p_k(long k) const;
  RationalFunction q_k(long k) const;
  RationalFunction r_k(long k) const;
};

RecursionTriple recursion_triple(const TailFamily& fam);

/// A seed displayed alongside the graph family it generates.
struct NamedSeed {
  std::string name;
  std::string family;  // e.g. "A(2k+2)"
  TailKind kind;
  IntMatrix L0;
  std::function<graphs::GraphName(long)> member;
};

const std::vector<NamedSeed>& named_seeds();
/// Throws Error(catalog) for an unknown seed name.
const NamedSeed& find_seed(const std::string& name);

}  // namespace adespec::recursion
