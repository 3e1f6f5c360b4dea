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

#include "isingbench/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "isingbench/errors.hpp"
#include "isingbench/instances.hpp"

namespace isingbench {

// --- gadgets ---------------------------------------------------------------

double GadgetSpec::quad_energy(const std::array<int, 4> &s) const {
    double e = 0.0;
    for (std::size_t r = 0; r < 4; ++r) e += linear[r] * s[r];
    for (std::size_t p = 0; p < kGadgetPairs.size(); ++p) {
        e += quadratic[p] * s[kGadgetPairs[p][0]] * s[kGadgetPairs[p][1]];
    }
    return e;
}

std::array<double, 10> GadgetSpec::coefficient_vector() const {
    std::array<double, 10> v{};
    std::copy(linear.begin(), linear.end(), v.begin());
    std::copy(quadratic.begin(), quadratic.end(), v.begin() + 4);
    return v;
}

double GadgetSpec::max_abs_coefficient() const {
    double m = 0.0;
    for (double c : coefficient_vector()) m = std::max(m, std::abs(c));
    return m;
}

std::size_t GadgetSpec::nonzero_count() const {
    const auto v = coefficient_vector();
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](double c) { return c != 0.0; }));
}

GadgetSpec GadgetSpec::scaled(double factor) const {
    GadgetSpec g = *this;
    g.target_coeff *= factor;
    g.offset *= factor;
    for (auto &c : g.linear) c *= factor;
    for (auto &c : g.quadratic) c *= factor;
    return g;
}

GadgetSpec GadgetSpec::reversed(GadgetRole role) const {
    GadgetSpec g = *this;
    g.linear[role] = -g.linear[role];
    for (std::size_t p = 0; p < kGadgetPairs.size(); ++p) {
        if (kGadgetPairs[p][0] == role || kGadgetPairs[p][1] == role) g.quadratic[p] = -g.quadratic[p];
    }
    if (role != kRoleAux) g.target_coeff = -g.target_coeff;
    return g;
}

GadgetCheck verify_gadget(const GadgetSpec &gadget, double tol) {
    GadgetCheck check;
    for (int a : {-1, 1}) {
        for (int b : {-1, 1}) {
            for (int c : {-1, 1}) {
                const double lo = std::min(gadget.quad_energy({a, b, c, -1}), gadget.quad_energy({a, b, c, 1}));
                const double want = gadget.target_coeff * a * b * c + gadget.offset;
                if (std::abs(lo - want) > tol) {
                    check.witness = std::array<int, 3>{a, b, c};
                    return check;
                }
            }
        }
    }
    check.exact = true;
    return check;
}

namespace {

bool on_half_grid(double x) { return std::abs(2.0 * x - std::nearbyint(2.0 * x)) < 1e-9; }

double snap_half(double x) { return std::nearbyint(2.0 * x) / 2.0; }

}  // namespace

// With the auxiliary couplings L(a,b,c) = hX + JAX a + JBX b + JCX c fixed,
//   min_x Q = Q0(a,b,c) - |L(a,b,c)|,
// so exactness pins Q0 = target*abc + |L| + offset. Q0 has no cubic and no
// constant part, hence the Walsh coefficients of f = target*abc + |L| must have
// a zero cubic component, and they then determine Q0 and the offset uniquely.
// Enumerating the four auxiliary coefficients therefore covers the whole
// ten-dimensional grid.
GadgetSpec synthesize_gadget(double target, double coeff_bound) {
    if (target != 1.0 && target != -1.0) {
        throw std::invalid_argument("gadget target must be -1 or +1");
    }
    if (!(coeff_bound >= 1.0)) {
        throw std::invalid_argument("coefficient bound must be at least 1");
    }
    const int steps = static_cast<int>(std::floor(2.0 * coeff_bound + 1e-9));
    std::vector<double> grid;
    for (int k = -steps; k <= steps; ++k) grid.push_back(k / 2.0);

    std::array<std::array<int, 3>, 8> abc{};
    for (int m = 0; m < 8; ++m) abc[m] = {(m & 4) ? 1 : -1, (m & 2) ? 1 : -1, (m & 1) ? 1 : -1};
    auto walsh = [&](const std::array<double, 8> &f, bool ua, bool ub, bool uc) {
        double sum = 0.0;
        for (int m = 0; m < 8; ++m) {
            const int chi = (ua ? abc[m][0] : 1) * (ub ? abc[m][1] : 1) * (uc ? abc[m][2] : 1);
            sum += f[m] * chi;
        }
        return sum / 8.0;
    };

    std::optional<GadgetSpec> best;
    auto better = [](const GadgetSpec &x, const GadgetSpec &y) {
        const double mx = x.max_abs_coefficient(), my = y.max_abs_coefficient();
        if (mx != my) return mx < my;
        const auto nx = x.nonzero_count(), ny = y.nonzero_count();
        if (nx != ny) return nx < ny;
        return x.coefficient_vector() < y.coefficient_vector();
    };

    for (double hx : grid) {
        for (double jax : grid) {
            for (double jbx : grid) {
                for (double jcx : grid) {
                    std::array<double, 8> f{};
                    for (int m = 0; m < 8; ++m) {
                        const auto &[a, b, c] = abc[m];
                        f[m] = target * a * b * c + std::abs(hx + jax * a + jbx * b + jcx * c);
                    }
                    if (std::abs(walsh(f, true, true, true)) > 1e-9) continue;
                    GadgetSpec g;
                    g.target_coeff = target;
                    g.linear = {walsh(f, true, false, false), walsh(f, false, true, false), walsh(f, false, false, true),
                                hx};
                    g.quadratic = {walsh(f, true, true, false), walsh(f, true, false, true), walsh(f, false, true, true),
                                   jax, jbx, jcx};
                    bool fits = true;
                    for (auto &c : g.linear) {
                        fits = fits && on_half_grid(c) && std::abs(c) <= coeff_bound + 1e-9;
                        c = snap_half(c);
                    }
                    for (auto &c : g.quadratic) {
                        fits = fits && on_half_grid(c) && std::abs(c) <= coeff_bound + 1e-9;
                        c = snap_half(c);
                    }
                    if (!fits) continue;
                    g.offset = -walsh(f, false, false, false);
                    if (!verify_gadget(g).exact) continue;
                    if (!best || better(g, *best)) best = g;
                }
            }
        }
    }
    if (!best) {
        std::ostringstream msg;
        msg << "no exact gadget with |coefficient| <= " << coeff_bound << " on the half-integer grid";
        throw SynthesisError(msg.str(), coeff_bound);
    }
    return *best;
}

GadgetSet baseline_gadget_set(double coeff_bound) {
    return {{-1, synthesize_gadget(-1.0, coeff_bound)}, {1, synthesize_gadget(1.0, coeff_bound)}};
}

GadgetSet better_gadget_set(const GadgetSet &base) {
    auto it = base.find(1);
    if (it == base.end()) {
        throw std::invalid_argument("better gadget set needs a gadget for target +1");
    }
    GadgetSet out = base;
    out[-1] = it->second.reversed(kRoleC);
    return out;
}

std::string gadget_set_to_text(const GadgetSet &gadgets) {
    using nlohmann::json;
    json list = json::array();
    for (const auto &[sign, g] : gadgets) {
        json lin = json::array();
        for (std::size_t r = 0; r < 4; ++r) {
            if (g.linear[r] != 0.0) lin.push_back({r, g.linear[r]});
        }
        json quad = json::array();
        for (std::size_t p = 0; p < kGadgetPairs.size(); ++p) {
            if (g.quadratic[p] != 0.0) quad.push_back({kGadgetPairs[p][0], kGadgetPairs[p][1], g.quadratic[p]});
        }
        list.push_back({{"target", sign}, {"offset", g.offset}, {"linear", lin}, {"quadratic", quad}});
    }
    json doc = {{"format_version", kFormatVersion}, {"kind", "gadget_set"}, {"gadgets", list}};
    return doc.dump(2) + "\n";
}

GadgetSet gadget_set_from_text(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!doc.is_object() || doc.value("kind", "") != "gadget_set") throw ParseError("not a gadget set", 0, "kind");
    if (doc.value("format_version", 0) != kFormatVersion) {
        throw ParseError("unsupported gadget set format_version", 0, "format_version");
    }
    GadgetSet out;
    const auto &list = doc.contains("gadgets") ? doc["gadgets"] : json::array();
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string field = "gadgets[" + std::to_string(k) + "]";
        GadgetSpec g;
        int sign = 0;
        try {
            const auto &e = list[k];
            g.target_coeff = e.at("target").get<double>();
            if (g.target_coeff != 1.0 && g.target_coeff != -1.0) throw ParseError(field + ": target must be -1 or +1", 0, field);
            sign = static_cast<int>(g.target_coeff);
            g.offset = e.value("offset", 0.0);
            for (const auto &t : e.value("linear", json::array())) {
                const auto r = t.at(0).get<std::size_t>();
                if (r > 3) throw ParseError(field + ": role index out of range", 0, field);
                g.linear[r] += t.at(1).get<double>();
            }
            for (const auto &t : e.value("quadratic", json::array())) {
                auto a = t.at(0).get<std::size_t>();
                auto b = t.at(1).get<std::size_t>();
                if (a > b) std::swap(a, b);
                auto it = std::find(kGadgetPairs.begin(), kGadgetPairs.end(), std::array<std::size_t, 2>{a, b});
                if (it == kGadgetPairs.end()) throw ParseError(field + ": invalid role pair", 0, field);
                g.quadratic[static_cast<std::size_t>(it - kGadgetPairs.begin())] += t.at(2).get<double>();
            }
        } catch (const json::exception &e) {
            throw ParseError(field + ": " + e.what(), 0, field);
        }
        if (out.count(sign)) throw ParseError(field + ": repeated target", 0, field);
        if (auto check = verify_gadget(g); !check.exact) {
            const auto &w = *check.witness;
            throw ParseError(field + ": not exact at (A,B,C) = (" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                                 "," + std::to_string(w[2]) + ")",
                             0, field);
        }
        out.emplace(sign, g);
    }
    return out;
}

// --- cubic reduction -------------------------------------------------------

Reduction reduce_cubic(const IsingProblem &problem, const GadgetSet &gadgets) {
    const std::size_t n = problem.num_spins();
    const auto cubic = problem.cubic();
    IsingProblem::Builder b(n + cubic.size());
    b.add_offset(problem.offset());
    for (const auto &t : problem.linear()) b.add_linear(t.i, t.coeff);
    for (const auto &t : problem.quadratic()) b.add_quadratic(t.i, t.j, t.coeff);

    Reduction out{IsingProblem{}, ReductionMap{n, {}, 0.0}};
    for (std::size_t r = 0; r < cubic.size(); ++r) {
        const auto &t = cubic[r];
        const int sign = t.coeff > 0 ? 1 : -1;
        auto it = gadgets.find(sign);
        if (it == gadgets.end()) {
            throw MissingGadgetError("no gadget for cubic coefficient sign " + std::to_string(sign));
        }
        const GadgetSpec &unit = it->second;
        if (unit.target_coeff != static_cast<double>(sign)) {
            throw std::invalid_argument("gadget stored under sign " + std::to_string(sign) + " has target " +
                                        std::to_string(unit.target_coeff));
        }
        const double mag = std::abs(t.coeff);
        const auto aux = static_cast<SpinIndex>(n + r);
        const std::array<SpinIndex, 4> role{t.i, t.j, t.k, aux};
        for (std::size_t k = 0; k < 4; ++k) {
            if (unit.linear[k] != 0.0) b.add_linear(role[k], mag * unit.linear[k]);
        }
        for (std::size_t p = 0; p < kGadgetPairs.size(); ++p) {
            if (unit.quadratic[p] != 0.0) {
                b.add_quadratic(role[kGadgetPairs[p][0]], role[kGadgetPairs[p][1]], mag * unit.quadratic[p]);
            }
        }
        b.add_offset(-mag * unit.offset);
        out.map.offset_shift += mag * unit.offset;
        out.map.aux.push_back({t, aux, sign});
    }
    out.problem = b.build();
    return out;
}

SpinConfig lift_config(const Reduction &reduction, const SpinConfig &original) {
    if (original.size() != reduction.map.original_num_spins) {
        throw DimensionError("config length does not match the original problem");
    }
    std::vector<std::int8_t> spins(original.spins().begin(), original.spins().end());
    spins.resize(reduction.problem.num_spins(), 1);
    // Auxiliary spins never share a term, so each can be set independently.
    for (const auto &a : reduction.map.aux) {
        if (reduction.problem.flip_delta(spins, a.aux) < 0.0) spins[a.aux] = -1;
    }
    return SpinConfig(std::move(spins));
}

// --- gauge -----------------------------------------------------------------

IsingProblem apply_gauge(const IsingProblem &problem, const GaugeTransform &gauge) {
    for (auto i : gauge.flip_set) {
        if (i >= problem.num_spins()) {
            throw IndexError("gauge flip index " + std::to_string(i) + " out of range");
        }
    }
    std::vector<int> g(problem.num_spins(), 1);
    for (auto i : gauge.flip_set) g[i] = -1;

    std::vector<LinearTerm> lin(problem.linear().begin(), problem.linear().end());
    std::vector<QuadraticTerm> quad(problem.quadratic().begin(), problem.quadratic().end());
    std::vector<CubicTerm> cub(problem.cubic().begin(), problem.cubic().end());
    for (auto &t : lin) t.coeff *= gauge.scale * g[t.i];
    for (auto &t : quad) t.coeff *= gauge.scale * g[t.i] * g[t.j];
    for (auto &t : cub) t.coeff *= gauge.scale * g[t.i] * g[t.j] * g[t.k];
    return IsingProblem(problem.num_spins(), std::move(lin), std::move(quad), std::move(cub),
                        problem.offset() * gauge.scale);
}

SpinConfig apply_gauge(const SpinConfig &config, const GaugeTransform &gauge) {
    SpinConfig out = config;
    for (auto i : gauge.flip_set) {
        if (i >= out.size()) throw IndexError("gauge flip index " + std::to_string(i) + " out of range");
        out.flip(i);
    }
    return out;
}

// --- compression -----------------------------------------------------------

Compression compress_couplings(const IsingProblem &problem, double strong_threshold, ChipRange chip) {
    if (!problem.linear().empty() || problem.has_cubic()) {
        throw std::invalid_argument("coupling compression needs a quadratic-only problem without linear terms");
    }
    if (!(strong_threshold > 0.0) || !(chip.lo < 0.0) || !(chip.hi > 0.0)) {
        throw std::invalid_argument("bad threshold or chip range");
    }
    const std::size_t n = problem.num_spins();
    struct Arc {
        SpinIndex to;
        double coeff;
    };
    std::vector<std::vector<Arc>> strong(n);
    for (const auto &t : problem.quadratic()) {
        if (std::abs(t.coeff) > 1.0 + 1e-12) {
            throw std::invalid_argument("coupling compression expects couplings in [-1, 1]");
        }
        if (std::abs(t.coeff) > strong_threshold) {
            strong[t.i].push_back({t.j, t.coeff});
            strong[t.j].push_back({t.i, t.coeff});
        }
    }

    constexpr auto kNone = std::numeric_limits<SpinIndex>::max();
    std::vector<int> sign(n, 0);
    std::vector<SpinIndex> parent(n, kNone);
    std::vector<std::size_t> depth(n, 0);
    std::deque<SpinIndex> queue;
    for (SpinIndex root = 0; root < n; ++root) {
        if (sign[root] != 0 || strong[root].empty()) continue;
        sign[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
            const SpinIndex u = queue.front();
            queue.pop_front();
            for (const auto &arc : strong[u]) {
                const SpinIndex v = arc.to;
                const int want = -sign[u] * (arc.coeff > 0 ? 1 : -1);
                if (sign[v] == 0) {
                    sign[v] = want;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (sign[v] != want) {
                    // Tree paths from both endpoints up to their common ancestor.
                    std::vector<SpinIndex> up_u{u}, up_v{v};
                    SpinIndex a = u, b = v;
                    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
                    while (a != b) {
                        up_u.push_back(a = parent[a]);
                        up_v.push_back(b = parent[b]);
                    }
                    up_v.pop_back();
                    std::vector<SpinIndex> cycle(up_u.begin(), up_u.end());
                    cycle.insert(cycle.end(), up_v.rbegin(), up_v.rend());
                    std::ostringstream msg;
                    msg << "compression infeasible: frustrated strong cycle";
                    for (std::size_t k = 0; k < cycle.size(); ++k) msg << (k ? "-" : " ") << cycle[k];
                    throw CompressionError(msg.str(), std::move(cycle));
                }
            }
        }
    }

    GaugeTransform gauge;
    for (SpinIndex i = 0; i < n; ++i) {
        if (sign[i] < 0) gauge.flip_set.insert(i);
    }
    gauge.scale = std::min(-chip.lo, chip.hi / strong_threshold);
    return {gauge, apply_gauge(problem, gauge)};
}

double energy_scale(const IsingProblem &problem, ChipRange chip) {
    if (problem.has_cubic()) {
        throw std::invalid_argument("energy scale is defined for quadratic problems");
    }
    if (!(chip.lo < 0.0) || !(chip.hi > 0.0)) {
        throw std::invalid_argument("chip range must contain zero in its interior");
    }
    double scale = std::numeric_limits<double>::infinity();
    auto visit = [&](double c) { scale = std::min(scale, c > 0 ? chip.hi / c : chip.lo / c); };
    for (const auto &t : problem.linear()) visit(t.coeff);
    for (const auto &t : problem.quadratic()) visit(t.coeff);
    if (std::isinf(scale)) {
        throw UndefinedError("energy scale of a problem without terms");
    }
    return scale;
}

}  // namespace isingbench
