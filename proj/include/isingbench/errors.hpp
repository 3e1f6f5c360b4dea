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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace isingbench {

// Precondition violations (bad parameters) throw std::invalid_argument.
// Everything below is a domain failure the caller may want to catch by kind.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spin configuration length does not match the problem.
struct DimensionError : Error {
    using Error::Error;
};

/// A spin or node index outside [0, num_spins).
struct IndexError : Error {
    using Error::Error;
};

/// Parameters admit no solution, e.g. n*d odd for a d-regular graph.
struct InfeasibleError : Error {
    using Error::Error;
};

/// A randomized generator exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

/// Malformed instance, gadget or report file. `line` is 0 when unknown.
struct ParseError : Error {
    ParseError(const std::string &what, std::size_t line = 0, std::string field = {})
        : Error(what), line(line), field(std::move(field)) {}
    std::size_t line;
    std::string field;
};

/// No exact gadget exists inside the requested coefficient bound.
struct SynthesisError : Error {
    SynthesisError(const std::string &what, double bound) : Error(what), bound(bound) {}
    double bound;
};

/// reduce_cubic met a cubic coefficient sign with no gadget in the set.
struct MissingGadgetError : Error {
    using Error::Error;
};

/// A frustrated cycle of strong couplings blocks coupling compression.
struct CompressionError : Error {
    CompressionError(const std::string &what, std::vector<std::uint32_t> cycle)
        : Error(what), cycle(std::move(cycle)) {}
    std::vector<std::uint32_t> cycle;
};

/// A quantity is undefined for the input, e.g. a statistic of an empty set.
struct UndefinedError : Error {
    using Error::Error;
};

/// exact_ground refuses problems above its enumeration limit.
struct LimitError : Error {
    using Error::Error;
};

}  // namespace isingbench
