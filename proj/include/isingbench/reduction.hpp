// Copyright 2026 The isingbench Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

// Order reduction of cubic terms with one auxiliary spin per term, gauge
// (spin-reversal) transforms, and coupling compression for asymmetric
// hardware coupling ranges.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isingbench/model.hpp"

namespace isingbench {

/// Roles of a gadget's four spins.
enum GadgetRole : std::size_t { kRoleA = 0, kRoleB = 1, kRoleC = 2, kRoleAux = 3 };

/// Quadratic replacement for target * sA * sB * sC using one auxiliary spin.
///
/// Exactness: for every (sA, sB, sC),
///   min_{aux} Q(sA, sB, sC, aux) == target * sA * sB * sC + offset
/// where Q = sum_r linear[r] s_r + sum_p quadratic[p] s_p.first s_p.second.
struct GadgetSpec {
    double target_coeff = 1.0;
    std::array<double, 4> linear{};
    /// Ordered as kGadgetPairs.
    std::array<double, 6> quadratic{};
    double offset = 0.0;

    /// Q(spins) without the offset.
    double quad_energy(const std::array<int, 4> &spins) const;
    double max_abs_coefficient() const;
    std::size_t nonzero_count() const;
    /// (linear..., quadratic...) in canonical order; used for tie-breaking.
    std::array<double, 10> coefficient_vector() const;
    /// Every coefficient, the target and the offset multiplied by `factor`.
    GadgetSpec scaled(double factor) const;
    /// Spin reversal of one role: negates every coefficient involving it.
    /// Reversing role A, B or C also negates the target.
    GadgetSpec reversed(GadgetRole role) const;

    friend bool operator==(const GadgetSpec &, const GadgetSpec &) = default;
};

inline constexpr std::array<std::array<std::size_t, 2>, 6> kGadgetPairs{{
    {kRoleA, kRoleB},
    {kRoleA, kRoleC},
    {kRoleB, kRoleC},
    {kRoleA, kRoleAux},
    {kRoleB, kRoleAux},
    {kRoleC, kRoleAux},
}};

struct GadgetCheck {
    bool exact = false;
    /// First (sA, sB, sC) that violates exactness, in enumeration order.
    std::optional<std::array<int, 3>> witness;
};

/// Enumerates all 16 assignments of (A, B, C, aux).
GadgetCheck verify_gadget(const GadgetSpec &gadget, double tol = 1e-9);

/// Exhaustive search over coefficient vectors on the half-integer grid inside
/// [-coeff_bound, coeff_bound]. Returns the exact gadget with the smallest
/// max |coefficient|, ties broken by fewest nonzero terms, then by the
/// lexicographically smallest coefficient_vector(). `target` must be -1 or +1.
/// Throws SynthesisError when no exact gadget fits the bound.
GadgetSpec synthesize_gadget(double target, double coeff_bound = 2.0);

/// Unit gadgets keyed by target sign (-1 or +1).
using GadgetSet = std::map<int, GadgetSpec>;

/// Independently synthesized gadgets for both signs.
GadgetSet baseline_gadget_set(double coeff_bound = 2.0);

/// Gadget library file: {format_version, kind: "gadget_set", gadgets: [{target,
/// offset, linear: [[role, h]], quadratic: [[role, role, J]]}]} with roles
/// A, B, C, aux numbered 0-3.
std::string gadget_set_to_text(const GadgetSet &gadgets);
/// Every gadget is verified on load; a target outside {-1, +1}, a repeated
/// target or an inexact gadget is a ParseError naming the gadget.
GadgetSet gadget_set_from_text(std::string_view text);

/// Keeps the +1 gadget and replaces the -1 gadget with the +1 gadget under a
/// spin reversal of role C. Throws std::invalid_argument without a +1 gadget.
GadgetSet better_gadget_set(const GadgetSet &base);

struct AuxAssignment {
    CubicTerm term;
    SpinIndex aux;
    int gadget_sign;
};

/// How a reduced problem relates to its original.
struct ReductionMap {
    std::size_t original_num_spins = 0;
    /// One entry per cubic term, in sorted term order; aux = n + rank.
    std::vector<AuxAssignment> aux;
    /// Sum over terms of |K| * gadget offset, compensated in the reduced offset.
    double offset_shift = 0.0;

    SpinConfig project(const SpinConfig &reduced) const { return reduced.prefix(original_num_spins); }
};

struct Reduction {
    IsingProblem problem;
    ReductionMap map;
};

/// Replaces each cubic term K*si*sj*sk by |K| times the unit gadget for
/// sign(K) on roles (i, j, k) plus a fresh auxiliary spin. The reduced offset
/// absorbs the gadget offsets, so for every original config s
///   min_{aux} E_reduced(s, aux) == E_original(s).
/// Throws MissingGadgetError when a sign has no gadget.
Reduction reduce_cubic(const IsingProblem &problem, const GadgetSet &gadgets);

/// Reduced configuration whose auxiliary spins minimize the reduced energy
/// for the given original configuration.
SpinConfig lift_config(const Reduction &reduction, const SpinConfig &original);

/// Spin-reversal transform with an optional uniform rescaling.
struct GaugeTransform {
    std::set<SpinIndex> flip_set;
    double scale = 1.0;
    friend bool operator==(const GaugeTransform &, const GaugeTransform &) = default;
};

/// Negates h_i for i in flip_set, J_ij when exactly one endpoint is flipped,
/// K_ijk when an odd number of members are flipped, then multiplies every
/// coefficient and the offset by scale. Throws IndexError.
IsingProblem apply_gauge(const IsingProblem &problem, const GaugeTransform &gauge);

/// Maps a configuration of the original problem to the gauged problem.
SpinConfig apply_gauge(const SpinConfig &config, const GaugeTransform &gauge);

struct ChipRange {
    double lo = -2.0;
    double hi = 1.0;
};

struct Compression {
    /// flip_set makes every strong coupling negative; scale maps [-1, threshold]
    /// into the chip range.
    GaugeTransform gauge;
    /// apply_gauge(problem, gauge), i.e. already scaled.
    IsingProblem problem;
};

/// Breadth-first sign assignment over the subgraph of strong couplings
/// (|J| > strong_threshold) so every strong coupling becomes negative.
/// Non-tree strong edges are checked; an inconsistent one throws
/// CompressionError naming the cycle. Linear in the number of couplings.
/// Requires a quadratic-only problem with couplings in [-1, 1].
Compression compress_couplings(const IsingProblem &problem, double strong_threshold = 0.5,
                               ChipRange chip = {});

/// Largest uniform multiplier keeping every coefficient inside `chip`.
/// Requires a quadratic-only problem; throws UndefinedError when it has no terms.
double energy_scale(const IsingProblem &problem, ChipRange chip = {});

}  // namespace isingbench
