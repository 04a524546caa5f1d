#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rue/group.hpp"
#include "rue/subgroup.hpp"

namespace rue {

// The affine group AGL(1,q) acting on the q field elements, generated by the
// translations by the monomial basis and multiplication by a fixed generator
// of the multiplicative group: the unique 2-transitive Frobenius group of
// degree q with cyclic complement of order q-1. Requires a prime power q > 2
// (QTooSmall at q <= 2, NotPrimePower otherwise). The Frobenius property (no
// nonidentity element fixes two points) and the order q(q-1) are asserted.
GroupTable gamma_q(long q, std::size_t bound = kDefaultEnumerationBound);

// One Frobenius-kernel coordinate of a product of affine groups: an
// elementary abelian minimal normal subgroup of order q.
struct GammaFactor {
  Subgroup kernel;
  long q = 0;
};

// Witness that a centerless group H is the direct product of affine groups
// AGL(1, q_i): the kernels V_i (minimal normal, elementary abelian of order
// q_i, pairwise commuting with trivial intersections) with their product
// equal to the fitting subgroup, and an abelian complement quotient of order
// prod(q_i - 1).
struct GammaDecomposition {
  std::vector<GammaFactor> factors;  // sorted by (q, smallest member index)
  long long complement_order = 1;    // prod over factors of (q_i - 1)
  Subgroup kernel_product;           // V_1 ... V_m = fitting subgroup
};

// Recognition outcome; when absent, failed_condition names the first test
// (R1 trivial center, R2 fitting structure, R3 abelian complement of the
// right order, R4 regular conjugation action on each kernel) that failed.
struct GammaRecognition {
  std::optional<GammaDecomposition> decomposition;
  std::string failed_condition;
};

GammaRecognition recognize_gamma_product_report(const GroupTable& h);
std::optional<GammaDecomposition> recognize_gamma_product(const GroupTable& h);

enum class TheoremBVerdict { Abelian, RueByTheoremB, NoRueElement };

const char* verdict_name(TheoremBVerdict v);

// Outcome of the structural test for the existence of unit-modulus elements:
// abelian groups qualify outright; a nonabelian group qualifies exactly when
// its fitting subgroup is the product of its derived subgroup and center,
// those two meet trivially, the fitting subgroup is abelian, and the central
// quotient is recognized as a product of affine groups. For qualifying
// nonabelian groups the central quotient, its decomposition, and the
// projection are retained so the predicted element set can be pulled back.
struct ClassificationResult {
  TheoremBVerdict verdict = TheoremBVerdict::NoRueElement;
  Subgroup center;  // of the classified group (whole group when abelian)
  std::shared_ptr<const GroupTable> central_quotient;  // null when abelian
  std::vector<std::size_t> projection;  // group element -> quotient element
  std::optional<GammaDecomposition> decomposition;  // subgroups of *central_quotient
  std::string failed_condition;  // first failing requirement, NoRueElement only
};

ClassificationResult theorem_b_classify(const GroupTable& g);

// The predicted unit-modulus elements: the whole group when abelian, else the
// preimage under the central projection of the fitting elements of the
// quotient having every kernel coordinate nontrivial. Sorted element indices;
// WrongVerdict unless the verdict admits a prediction.
std::vector<std::size_t> predicted_rue_set(const ClassificationResult& r);

}  // namespace rue
