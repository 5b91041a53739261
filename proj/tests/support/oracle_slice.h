// Copyright 2026 The hccov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HCCOV_TESTS_SUPPORT_ORACLE_SLICE_H_
#define HCCOV_TESTS_SUPPORT_ORACLE_SLICE_H_

#include "hccov/slicer.h"
#include "hccov/structures.h"
#include "hccov/trace.h"

namespace hccov::testing {

// Reference backward slice computed straight from the trace, without the
// dependence graph: a worklist over events where each needed use is resolved
// by scanning backwards for the latest definition. Quadratic, simple.
Slice OracleSlice(const Trace& trace, const SlicingCriterion& criterion,
                  const Structures& structures);

}  // namespace hccov::testing

#endif  // HCCOV_TESTS_SUPPORT_ORACLE_SLICE_H_
