#ifndef TORSIONLAB_SCENE_HPP
#define TORSIONLAB_SCENE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "torsionlab/fields.hpp"

namespace torsionlab {

/// A parsed scene file: one chart plus named objects. The format is
/// line-oriented with `#` comments:
///
///   dim 2
///   vars x1 x2
///   operator A
///   1 1 : x2
///   2 2 : x1
///   end
///
/// Blocks: operator/vector/covector/scalar NAME, entry lines
/// `<i> [<j>] : <poly>` (operator entries are row then column, matching
/// A^i_j; scalar blocks take the single line `1 : <poly>`), closed by
/// `end`. Indices are 1-based; unspecified entries default to zero.
/// Names are unique across all kinds.
struct SceneFile {
    ChartPtr chart;
    std::map<std::string, OperatorField> operators;
    std::map<std::string, VectorField> vectors;
    std::map<std::string, CovectorField> covectors;
    std::map<std::string, MultiPoly> scalars;
};

SceneFile parse_scene(std::string_view src);
SceneFile load_scene(const std::filesystem::path& path);

} // namespace torsionlab

#endif
