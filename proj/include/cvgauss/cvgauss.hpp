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

#ifndef CVGAUSS_CVGAUSS_HPP
#define CVGAUSS_CVGAUSS_HPP

#include "cvgauss/core.hpp"
#include "cvgauss/ops.hpp"
#include "cvgauss/criterion.hpp"
#include "cvgauss/measurement.hpp"
#include "cvgauss/entanglement.hpp"
#include "cvgauss/nonlocality.hpp"
#include "cvgauss/protocols.hpp"
#include "cvgauss/stabilizer.hpp"
#include "cvgauss/circuit.hpp"

#endif
