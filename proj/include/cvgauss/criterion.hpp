// Copyright 2026 The cvgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVGAUSS_CRITERION_HPP
#define CVGAUSS_CRITERION_HPP

#include <string>

#include "cvgauss/core.hpp"

namespace cvgauss {

/// Verdict of an inequality of the form lhs >= bound, which every separable (or local,
/// or classical) state obeys. `violated` means lhs dropped below bound by more than the
/// tolerance, i.e. the nonclassical property is witnessed.
struct CriterionReport {
    std::string name;
    double lhs = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    double tolerance = tol::criterion;
    bool violated = false;
};

inline CriterionReport make_report(std::string name, double lhs, double bound, double tolerance = tol::criterion) {
    CriterionReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.bound = bound;
    r.margin = bound - lhs;
    r.tolerance = tolerance;
    r.violated = r.margin > tolerance;
    return r;
}

}  // namespace cvgauss

#endif
