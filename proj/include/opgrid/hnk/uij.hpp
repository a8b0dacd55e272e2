// Copyright 2026 The opgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "opgrid/hnk/combination.hpp"
#include "opgrid/hnk/realization.hpp"
#include "opgrid/hnk/space.hpp"
#include "opgrid/report.hpp"

namespace opgrid {

/// u_{I,c,J} = (uu*)_I u_c (u*u)_J, empty support products read as identity.
ExactMatrix build_one(const RankOneRealization& real, const Combination& I, int c, const Combination& J);

/// (uu*)_{I−J} u_{c1} u_{d1}* u_{c2} ⋯ u_{d_s}* u_{c_{s+1}} (u*u)_{J−I} with
/// C = (I∪J)^c and D = I∩J taken in increasing order. Throws DimensionError
/// unless i_R + i_L = n+1, |I| = i_R−1 and |J| = i_L−1.
ExactMatrix build_uIJ(const RankOneRealization& real, const Combination& I, const Combination& J);

/// Same product with explicit orders; c_order and d_order must be
/// permutations of C and D.
ExactMatrix build_uIJ(const RankOneRealization& real, const Combination& I, const Combination& J,
                      const std::vector<int>& c_order, const std::vector<int>& d_order);

/// One factor (I_t, c_t, J_t) of a decomposition; starred factors enter the
/// product as adjoints.
struct OneFactor {
  Combination I;
  int c = 0;
  Combination J;
  bool starred = false;
  int sign = 1;  // signature_one(I, c, J)
};

/// Decomposition (I_1,c_1,J_1)(K_1,d_1,L_1)*(I_2,c_2,J_2)⋯ with J_1 = J,
/// I_t = K_t = [n]−J_t−{c_t}, J_{t+1} = L_t = (J_t∪{c_t})−{d_t}. Verifies
/// that I_{s+1} = I, that no factor vanishes and that the alternating product
/// equals build_uIJ with the same orders; throws DecompositionError otherwise.
std::vector<OneFactor> decompose_into_ones(const RankOneRealization& real, const Combination& I,
                                           const Combination& J, const std::vector<int>& c_order,
                                           const std::vector<int>& d_order);

/// Alternating product one_1 · one_2* · one_3 ⋯ of the factors.
ExactMatrix product_of_ones(const RankOneRealization& real, const std::vector<OneFactor>& ones);

/// ε(I,J): product of the factor signatures for increasing orders.
int signature_general(const RankOneRealization& real, const Combination& I, const Combination& J);

inline constexpr int kMaxUijN = 5;

/// Grid properties (a)–(e) of {u_IJ}, the signed quadrangle identity,
/// the sum identity and decomposition round-trips. Throws ArgumentError unless
/// i_R + i_L = n+1 and CapacityError for n > 5.
VerificationReport verify_uIJ_grid(const RankOneRealization& real);

/// ε(IJ)·u_IJ = E_{J,I} for every valid (I, J) of build_hnk output.
VerificationReport verify_hnk_signatures(const HnkSpace& space);

/// For every ones-triple (u_{IJ'}, u_{IJ}, u_{I'J}) with I∩J = ∅: the unsigned
/// relation with a minus sign, the signature relation, and the signed equality.
VerificationReport verify_signature_coherence(const RankOneRealization& real);

/// Σ_i u_i u_i* = k·I and Σ_i u_i* u_i = (n−k+1)·I, exact.
VerificationReport verify_support_sums(const HnkSpace& space);

}  // namespace opgrid
