#include "torsionlab/chart.hpp"

#include <algorithm>

#include "torsionlab/errors.hpp"

namespace torsionlab {

ChartPtr Chart::make(std::vector<std::string> coordinate_names) {
    if (coordinate_names.empty()) {
        throw UsageError("a chart needs at least one coordinate");
    }
    const int n = static_cast<int>(coordinate_names.size());
    std::vector<VarKind> kinds(coordinate_names.size(), VarKind::coordinate);
    return ChartPtr(new Chart(n, VarTable::make(std::move(coordinate_names), std::move(kinds))));
}

VarId Chart::coordinate_id(int i) const {
    if (i < 0 || i >= dim_) {
        throw UsageError("coordinate index out of range");
    }
    return static_cast<VarId>(i);
}

const std::string& Chart::coordinate_name(int i) const {
    return vars_->name(coordinate_id(i));
}

VarId Chart::parameter_id(int p) const {
    if (p < 0 || p >= parameter_count()) {
        throw UsageError("parameter index out of range");
    }
    return static_cast<VarId>(dim_ + p);
}

ChartPtr Chart::extended_with_parameters(int count, const std::string& prefix) const {
    if (count < 1) {
        throw UsageError("parameter extension needs a positive count");
    }
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    names.reserve(vars_->size() + count);
    for (VarId v = 0; v < vars_->size(); ++v) {
        names.push_back(vars_->name(v));
        kinds.push_back(vars_->kind(v));
    }
    auto taken = [&](const std::string& candidate) {
        return std::find(names.begin(), names.end(), candidate) != names.end();
    };
    for (int p = 0; p < count; ++p) {
        std::string candidate = prefix + std::to_string(p + 1);
        while (taken(candidate)) {
            candidate += "_";
        }
        names.push_back(std::move(candidate));
        kinds.push_back(VarKind::parameter);
    }
    return ChartPtr(new Chart(dim_, VarTable::make(std::move(names), std::move(kinds))));
}

} // namespace torsionlab
