/*
 * Copyright 2026 The corrnet Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

     http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.

*/

#pragma once

#include <stdexcept>

namespace corrnet {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gauss hypergeometric function 2F1(a, b; c; z) for real arguments and
/// z <= 1.
///
/// |z| <= 1/2 sums the power series directly. z in (1/2, 1) uses the
/// connection formula in 1 - z, z < -1/2 the Pfaff transform, and z = 1
/// the Gauss summation theorem (needs c - a - b > 0).
///
/// Throws DomainError when c is a non-positive integer, z > 1, or z = 1
/// with c - a - b <= 0.
double gauss_2f1(double a, double b, double c, double z);

/// Principal branch W0 of the Lambert W function, z >= -1/e.
/// Throws DomainError below the branch point.
double lambert_w0(double z);

}  // namespace corrnet
