/*
   Copyright 2026 The qlin authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLIN_IO_HPP
#define QLIN_IO_HPP

#include <string>

#include <json.hpp>

#include "qlin/code.hpp"
#include "qlin/wenger.hpp"

namespace qlin::io {

using Json = nlohmann::ordered_json;

Json params_json(const FieldParams& p);

/// {"params", "method", "rows":[{"r","weight","count"}...], "total"}
/// plus the separately reported zero-weight row so the grand
/// total reaches p^(mk). Counts are decimal strings.
Json weight_distribution_json(const WeightDistribution& wd);

/// CSV mirror with header r,weight,count.
std::string weight_distribution_csv(const WeightDistribution& wd);

std::string weight_distribution_table(const WeightDistribution& wd);

/// Rows ascending by eigenvalue: {"sign", "lambda_sq_exponent",
/// "multiplicity"}.
Json spectrum_json(const SpectrumMultiset& s);

/// CSV with header sign,lambda_sq_exponent,multiplicity.
std::string spectrum_csv(const SpectrumMultiset& s);

Json reconcile_json(const ReconcileReport& rep);

std::string reconcile_table(const ReconcileReport& rep);

}  // namespace qlin::io

#endif  // QLIN_IO_HPP
