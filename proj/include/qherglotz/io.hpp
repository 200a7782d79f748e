#pragma once

#include <string>

#include <json.hpp>

#include "qherglotz/errors.hpp"
#include "qherglotz/matrix.hpp"
#include "qherglotz/measures.hpp"
#include "qherglotz/moments.hpp"
#include "qherglotz/realize.hpp"
#include "qherglotz/slicefn.hpp"

namespace qherglotz::io {

using nlohmann::json;

// Malformed or structurally invalid input. The message carries the source
// name and either line:column (syntax errors) or a JSON path.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

json parse_document(const std::string& text, const std::string& source);
json load_document(const std::string& path);

// Quaternion: [w, x, y, z]
Quaternion quaternion_from_json(const json& j, const std::string& where = "$");
json to_json(const Quaternion& q);

// QMatrix: {"rows": r, "cols": c, "data": [[q, ...], ...]}
QMatrix qmatrix_from_json(const json& j, const std::string& where = "$");
json to_json(const QMatrix& m);

// Complex matrix: [[[re, im], ...], ...]
CMatrix cmatrix_from_json(const json& j, std::size_t s, const std::string& where = "$");
json to_json(const CMatrix& m);

// Sequence: {"s": s, "N": N, "values": [QMatrix for n = 0..N]}
HermitianSequence sequence_from_json(const json& j);
json to_json(const HermitianSequence& seq);

// Measure: {"s": s, "atoms": [{"t": t, "nu1": cmatrix, "nu2": cmatrix}]}
DiscreteQPositiveMeasure measure_from_json(const json& j, const std::string& where = "$");
json to_json(const DiscreteQPositiveMeasure& nu);

// Pair: {"plus": measure, "minus": measure}
MixedMeasurePair pair_from_json(const json& j);
json to_json(const MixedMeasurePair& pair);

// Realization: {"J": [+-1, ...], "U": QMatrix, "C": QMatrix}
PontryaginRealization realization_from_json(const json& j);
json to_json(const PontryaginRealization& r);

// Slice measure: {"I": q, "J": q, "imag0F": x, "imag0G": x,
//                 "atoms": [{"t": t, "mu1": x, "mu2": x}]}
SliceMeasure slice_measure_from_json(const json& j);
json to_json(const SliceMeasure& m);

}  // namespace qherglotz::io
