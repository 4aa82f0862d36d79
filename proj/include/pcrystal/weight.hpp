// Copyright 2026 The pcrystal Authors. All Rights Reserved.
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
#include <vector>

#include "pcrystal/partition.hpp"

namespace pcrystal {

/// An element sum_i lambda[i] Lambda_i + delta * delta of the weight lattice.
struct Weight {
  std::vector<long> lambda;
  long delta = 0;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Lambda_k for the cyclic index set Z/nZ.
Weight fundamental_weight(int n, int k);

/// alpha_i = 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1} + delta_{i0} delta.
Weight simple_root(int n, int i);

/// Cartan entry a_ij = 2 delta_ij - delta_{i,j+1} - delta_{i,j-1} (mod n).
int cartan(int n, int i, int j);

/// <h_i, w>: the Lambda_i coefficient.
long pairing(int i, const Weight& w);

/// Lambda_0 - sum_i c_i alpha_i, with c_i the number of i-nodes of p.
Weight weight(const Partition& p, int n);

}  // namespace pcrystal
