// Copyright 2026 The Authors.
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

namespace matkl {

// Selects between the OpenMP kernels and their serial reference versions.
enum class Execution { serial, parallel };

// Worker count used by parallel kernels (OpenMP's current setting, or 1 when
// built without OpenMP).
int worker_count();
void set_worker_count(int n);

}  // namespace matkl
