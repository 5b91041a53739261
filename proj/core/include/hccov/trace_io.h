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

#ifndef HCCOV_TRACE_IO_H_
#define HCCOV_TRACE_IO_H_

#include <ostream>
#include <string>
#include <vector>

#include "hccov/slicer.h"
#include "hccov/trace.h"

namespace hccov {

// One JSON object per line with exactly the fields idx, stmt, test, defs,
// uses, ctrl_parent, call_parent, outcome (absent values are null).
std::string TraceEventToJson(const TraceEvent& event, const std::string& test);
void WriteTraceJsonl(const Trace& trace, std::ostream& os);

// {"test":..., "event":..., "statements":["s1",...],
//  "arm_outcomes":[["s2",true],...]}
std::string SliceToJson(const Slice& slice);
void WriteSlicesJsonl(const std::vector<Slice>& slices, std::ostream& os);

}  // namespace hccov

#endif  // HCCOV_TRACE_IO_H_
