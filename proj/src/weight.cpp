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

#include "pcrystal/weight.hpp"

#include "pcrystal/errors.hpp"

namespace pcrystal {

Weight& Weight::operator+=(const Weight& o) {
  if (lambda.size() != o.lambda.size()) throw DomainError("weight rank mismatch");
  for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] += o.lambda[k];
  delta += o.delta;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (lambda.size() != o.lambda.size()) throw DomainError("weight rank mismatch");
  for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] -= o.lambda[k];
  delta -= o.delta;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '[';
  for (std::size_t k = 0; k < w.lambda.size(); ++k) os << (k ? "," : "") << w.lambda[k];
  return os << "; " << w.delta << ']';
}

Weight fundamental_weight(int n, int k) {
  Weight w{std::vector<long>(n, 0), 0};
  w.lambda.at(k) = 1;
  return w;
}

int cartan(int n, int i, int j) {
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  int a = 0;
  if (mod(i) == mod(j)) a += 2;
  if (mod(i) == mod(j + 1)) a -= 1;
  if (mod(i) == mod(j - 1)) a -= 1;
  return a;
}

Weight simple_root(int n, int i) {
  Weight w{std::vector<long>(n, 0), i == 0 ? 1 : 0};
  // Column i of the Cartan matrix gives the Lambda-coefficients of alpha_i.
  for (int k = 0; k < n; ++k) w.lambda[k] = cartan(n, k, i);
  return w;
}

long pairing(int i, const Weight& w) { return w.lambda.at(i); }

Weight weight(const Partition& p, int n) {
  Weight w = fundamental_weight(n, 0);
  const std::vector<int> c = residue_counts(p, n);
  for (int i = 0; i < n; ++i) {
    Weight a = simple_root(n, i);
    for (auto& x : a.lambda) x *= c[i];
    a.delta *= c[i];
    w -= a;
  }
  return w;
}

}  // namespace pcrystal
