#ifndef CURV22_SERIALIZE_HPP
#define CURV22_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "curv22/curvature.hpp"
#include "curv22/families.hpp"
#include "curv22/jacobi.hpp"
#include "curv22/osserman.hpp"

namespace curv22 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTensorFormat = "curv22-v1";
inline constexpr const char* kReportFormat = "curv22-report-v1";

Json scalar_json(const Scalar& s);
Json vector_json(const Vec4& v);
Json matrix_json(const Mat& m);
Json poly1_json(const Poly1& p);

/// {"format": "curv22-v1", "components": [{"ijkl": "1221", "value": "1"}, ...]}, listing every
/// nonzero component in index order.
Json tensor_to_json(const CurvatureTensor& a);
/// Reads the sparse component list (absent = 0). Malformed input raises
/// ParseError naming the JSON path (e.g. components[3].value); symmetry and
/// Bianchi failures propagate from CurvatureTensor::from_components.
CurvatureTensor tensor_from_json(const Json& j);

/// {"family": "paraquaternionic", "params": {"k1": "1", ...}}
Json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);

Json osserman_json(const OssermanReport& r);
Json jordan_json(const JordanReport& r);
Json survey_json(const SurveyResult& s);
Json verdict_json(const ClassificationVerdict& v);
Json witnesses_json(const ClassificationVerdict& v);

/// Full classification report: Osserman conditions, Jordan data, verdict, witnesses, survey.
Json classification_report(const ClassificationVerdict& v);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace curv22

#endif  // CURV22_SERIALIZE_HPP
