// Copyright 2026 The qrobust Authors
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

// Seeded random states and unitaries. Every generator takes its seed
// explicitly; there is no global RNG state.

#include <cstdint>
#include <random>
#include <string_view>

#include "qrobust/coset.hpp"
#include "qrobust/numerics.hpp"
#include "qrobust/states.hpp"

namespace qrobust {

enum class Ensemble { ginibre, bures, bell_diagonal, coset };

// Throws UnknownEnsemble.
Ensemble parse_ensemble(std::string_view name);
std::string_view ensemble_name(Ensemble e);

// Mixes a master seed and an index into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

DensityMatrix sample_state(Ensemble ensemble, std::uint64_t seed);

// Range of the coset angles used by the coset ensemble.
inline constexpr double kCosetEnsembleRange = 1.0;
// Parameters behind sample_state(Ensemble::coset, seed).
coset::CosetParams sample_coset_params(std::uint64_t seed);

// Sorted uniform point of the probability simplex.
BellWeights sample_bell_weights(std::mt19937_64& rng);

ComplexMatrix4 ginibre_matrix(std::mt19937_64& rng);
ComplexMatrix4 haar_unitary(std::mt19937_64& rng);
Matrix2 haar_su2(std::mt19937_64& rng);
LocalUnitary random_local_unitary(std::mt19937_64& rng);
// Hermitian with independent Gaussian entries.
ComplexMatrix4 random_hermitian(std::mt19937_64& rng);
// Complex symmetric with independent Gaussian entries.
ComplexMatrix4 random_symmetric(std::mt19937_64& rng);

}  // namespace qrobust
