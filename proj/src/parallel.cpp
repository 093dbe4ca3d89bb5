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

#include "matkl/parallel.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matkl {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_count(int n) {
  if (n < 1) throw std::invalid_argument("worker count must be positive");
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}

}  // namespace matkl
