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

#include "qlin/io.hpp"

#include <sstream>

namespace qlin::io {

Json params_json(const FieldParams& p) {
    return Json{{"p", p.p}, {"m", p.m}, {"d", p.d}, {"k", p.k}, {"e", p.e()}};
}

Json weight_distribution_json(const WeightDistribution& wd) {
    Json rows = Json::array();
    for (std::uint32_t r = 0; r < wd.counts.size(); ++r)
        rows.push_back(Json{{"r", r}, {"weight", wd.weight_of(r)}, {"count", wd.counts[r].str()}});
    const BigInt grand = wd.total() + 1;
    return Json{{"params", params_json(wd.params)},
                {"method", wd_method_name(wd.method)},
                {"rows", rows},
                {"total", wd.total().str()},
                {"zero_weight_row", Json{{"weight", 0}, {"count", "1"}}},
                {"grand_total", grand.str()}};
}

std::string weight_distribution_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "r,weight,count\n";
    for (std::uint32_t r = 0; r < wd.counts.size(); ++r)
        os << r << ',' << wd.weight_of(r) << ',' << wd.counts[r].str() << '\n';
    return os.str();
}

std::string weight_distribution_table(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight distribution (" << wd_method_name(wd.method) << "), p=" << wd.params.p
       << " m=" << wd.params.m << " d=" << wd.params.d << " k=" << wd.params.k
       << " e=" << wd.params.e() << "\n";
    os << "  r  weight  count\n";
    for (std::uint32_t r = 0; r < wd.counts.size(); ++r)
        os << "  " << r << "  " << wd.weight_of(r) << "  " << wd.counts[r].str() << "\n";
    os << "  nonzero total " << wd.total().str() << ", plus the zero codeword once\n";
    return os.str();
}

Json spectrum_json(const SpectrumMultiset& s) {
    Json rows = Json::array();
    for (const auto& [k, m] : s.entries)
        rows.push_back(Json{{"sign", k.sign},
                            {"lambda_sq_exponent", k.lambda_sq_exp},
                            {"multiplicity", m.str()}});
    return rows;
}

std::string spectrum_csv(const SpectrumMultiset& s) {
    std::ostringstream os;
    os << "sign,lambda_sq_exponent,multiplicity\n";
    for (const auto& [k, m] : s.entries)
        os << k.sign << ',' << k.lambda_sq_exp << ',' << m.str() << '\n';
    return os.str();
}

Json reconcile_json(const ReconcileReport& rep) {
    Json methods;
    methods["formula"] = spectrum_json(rep.formula);
    methods["counting"] = rep.counting ? spectrum_json(*rep.counting) : Json(nullptr);
    methods["dense_residual"] = rep.dense_residual ? Json(*rep.dense_residual) : Json(nullptr);
    return Json{{"params", params_json(rep.params)},
                {"methods", methods},
                {"mass_checks",
                 Json{{"vertices", rep.mass_vertices_ok}, {"trace_sq", rep.mass_trace_sq_ok}}},
                {"agree", Json{{"formula_counting", rep.formula_counting_agree},
                               {"dense_within_tol", rep.dense_within_tol}}},
                {"paper_zero_expr", rep.paper_zero_expr.str()},
                {"corrected_zero", rep.corrected_zero.str()},
                {"erratum_flagged", rep.erratum_flagged},
                {"verdict", rep.verdict}};
}

std::string reconcile_table(const ReconcileReport& rep) {
    std::ostringstream os;
    os << "Wenger spectrum, p=" << rep.params.p << " m=" << rep.params.m << " d=" << rep.params.d
       << " k=" << rep.params.k << " e=" << rep.params.e() << "\n";
    os << "  sign  lambda^2  multiplicity\n";
    for (const auto& [k, m] : rep.formula.entries) {
        os << "  " << (k.sign > 0 ? "+" : k.sign < 0 ? "-" : "0") << "     ";
        if (k.sign == 0)
            os << "0";
        else
            os << rep.params.p << "^" << k.lambda_sq_exp;
        os << "  " << m.str() << "\n";
    }
    os << "  counting: "
       << (rep.counting ? (rep.formula_counting_agree ? "agrees" : "DISAGREES") : "skipped")
       << "\n";
    if (rep.dense_residual)
        os << "  dense residual: " << *rep.dense_residual
           << (rep.dense_within_tol ? " (within tol)" : " (OVER tol)") << "\n";
    os << "  zero multiplicity: corrected " << rep.corrected_zero.str() << ", literal form "
       << rep.paper_zero_expr.str() << (rep.erratum_flagged ? " [erratum flagged]" : "") << "\n";
    os << "  verdict: " << rep.verdict << "\n";
    return os.str();
}

}  // namespace qlin::io
