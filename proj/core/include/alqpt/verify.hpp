// Copyright 2026 The alqpt Authors
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

#pragma once

#include <ostream>

namespace alqpt {

/// Fast invariant suite behind `alqpt verify`: one line per check, returns
/// true when every check passed. Deterministic and self-contained; meant
/// as a field diagnostic, not a replacement for the test suite.
bool run_self_checks(std::ostream& out);

}  // namespace alqpt
