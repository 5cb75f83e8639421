// Copyright 2026 The uiksn Authors
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

#ifndef UIKSN_VALIDATE_HPP
#define UIKSN_VALIDATE_HPP

#include <string>
#include <vector>

#include "uiksn/errors.hpp"
#include "uiksn/super_network.hpp"

namespace uiksn {

/// One broken invariant: which rule, and the offending node or edge.
struct Violation {
  std::string invariant;
  std::string detail;

  std::string to_string() const { return invariant + ": " + detail; }

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every structural invariant of the super-network and returns the
/// full list of violations (empty means valid). Violations are data, not
/// failures: an empty network is vacuously valid.
///
/// Checked rules, in order:
///   - edge endpoints and weight-map sizes in range ("structure.*")
///   - relation vectors sorted and duplicate-free ("relation.sorted")
///   - authorship total and functional on posts
///   - membership total and functional on knowledge
///   - field hierarchy a forest with at most one parent per field
///   - cooccurrence canonical (a < b), no self-loops, weight >= 1,
///     w(a, b) <= min(q(a), q(b))
///   - q(k) equals containment degree and is >= 1
///   - q(u) equals the user's (post, knowledge) incidence count
///   - q(f) equals the sum of q(k) over knowledge whose membership chain
///     reaches f; childless fields must have at least one direct member
std::vector<Violation> validate(const SuperNetwork& net);

/// Thrown by operations whose precondition is a valid network.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace uiksn

#endif  // UIKSN_VALIDATE_HPP
