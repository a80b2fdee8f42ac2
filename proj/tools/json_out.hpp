#pragma once

#include <json.hpp>

#include "s1calc/dilation.hpp"
#include "s1calc/spectral.hpp"

namespace s1tool {

using Json = nlohmann::ordered_json;

Json vector_json(const s1calc::S1Complex& c, const s1calc::SparseVector& v);
// Components by power; zero components are skipped.
Json chain_json(const s1calc::S1Complex& c, const std::vector<s1calc::SparseVector>& by_power);
Json matrix_json(const s1calc::SparseMatrix& m);
Json columns_json(const s1calc::S1Complex& c, const s1calc::SparseMatrix& m);

Json witness_json(const s1calc::S1Complex& c, const s1calc::WitnessedCycle& w);
Json filtration_json(const s1calc::S1Complex& c, const s1calc::FiltrationSpace& space);
Json dilation_json(const s1calc::SplitS1Complex& s, const s1calc::DilationReport& report, int max_k);
Json delta_json(const s1calc::S1Complex& c, const s1calc::DeltaKMap& map);
Json page_json(const s1calc::LerayPage& page);
Json les_json(const s1calc::LesReport& report);

}  // namespace s1tool
