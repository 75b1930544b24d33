#ifndef TORSIONLAB_CHART_HPP
#define TORSIONLAB_CHART_HPP

#include <memory>
#include <string>
#include <vector>

#include "torsionlab/polynomial.hpp"

namespace torsionlab {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// A local coordinate chart: n named coordinates, plus optional formal
/// parameters appended by extended_with_parameters. All fields reference
/// the chart they were built in; operations across structurally different
/// charts are context errors.
class Chart {
public:
    static ChartPtr make(std::vector<std::string> coordinate_names);

    int dim() const { return dim_; }
    const VarTablePtr& vars() const { return vars_; }

    VarId coordinate_id(int i) const;
    const std::string& coordinate_name(int i) const;

    int parameter_count() const { return static_cast<int>(vars_->size()) - dim_; }
    VarId parameter_id(int p) const;

    MultiPoly zero() const { return MultiPoly::zero(vars_); }
    MultiPoly one() const { return MultiPoly::constant(vars_, Rational(1)); }
    MultiPoly constant(Rational c) const { return MultiPoly::constant(vars_, std::move(c)); }
    MultiPoly coordinate(int i) const { return MultiPoly::variable(vars_, coordinate_id(i)); }
    MultiPoly parameter(int p) const { return MultiPoly::variable(vars_, parameter_id(p)); }

    /// Same coordinates plus `count` fresh formal parameters (named from
    /// `prefix`, uniquified against existing names).
    ChartPtr extended_with_parameters(int count, const std::string& prefix = "lam") const;

    bool same_as(const Chart& other) const {
        return this == &other || vars_->same_as(*other.vars_);
    }

private:
    Chart(int dim, VarTablePtr vars) : dim_(dim), vars_(std::move(vars)) {}

    int dim_;
    VarTablePtr vars_;
};

} // namespace torsionlab

#endif
