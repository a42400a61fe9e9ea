#pragma once

#include <vector>

#include "slgap/algebra/finitefield.hpp"
#include "slgap/groups/table.hpp"

namespace slgap::growth {

using algebra::FFElem;
using algebra::FiniteField;

/// w(a) = a + a^{-1}; ZeroElement on 0.
FFElem trace_of_unit(const FiniteField& F, const FFElem& a);

struct TraceAmplifyReport {
  std::vector<FFElem> output;       // sorted, distinct
  std::vector<FFElem> w_of_squares; // w(Lambda^2), Lambda^2 = squares of Lambda
  /// smallest k' < k with w(Lambda^2) inside F_{p^k'}; equals k when the
  /// values generate the field
  unsigned w_subfield_degree = 1;
  bool w_in_proper_subfield = false;
  bool ratio_in_that_subfield = false;  // a1/a2 in the same subfield
  std::size_t prod4_size = 0;
};

/// The amplification set {a1 w(bc) + a2 w(bc^{-1}) : b, c in prod_4 Lambda}
/// computed exactly, with the subfield side condition reported. Lambda
/// must contain 1, be inverse-closed and avoid 0.
TraceAmplifyReport trace_amplify(const FiniteField& F,
                                 const std::vector<FFElem>& Lambda,
                                 const FFElem& a1, const FFElem& a2,
                                 std::size_t cap = 200000);

struct NondegenerateWitness {
  groups::GroupElem x;
  unsigned word_length = 0;  // first product level that contains it
};

/// Breadth-first search over iterated products of S in SL_2(F_{p^k}) for a
/// matrix [[a,b],[c,d]] with abcd != 0 and ad/bc outside the subfield of
/// degree k'. Requires that S generates the full group (NotGenerating) and
/// a proper subfield exists. SearchExhausted after R_max levels.
NondegenerateWitness find_nondegenerate(const std::vector<groups::GroupElem>& S,
                                        unsigned subfield_degree,
                                        unsigned R_max = 12,
                                        std::size_t cap = groups::kDefaultEnumCap);

}  // namespace slgap::growth
