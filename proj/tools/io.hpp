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

// JSON readers for the input files and writers for the reports.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "extalg/arrangements.hpp"
#include "extalg/clifford.hpp"
#include "extalg/emodule.hpp"
#include "extalg/lie.hpp"
#include "extalg/multivector.hpp"
#include "extalg/scalar.hpp"
#include "extalg/simplicial.hpp"

namespace extalg::cli {

using Json = nlohmann::ordered_json;

// Malformed or inconsistent input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

Scalar read_scalar(const Json& j, Field field);
SimplicialComplex read_complex(const Json& j);
VectorConfiguration read_arrangement(const Json& j, Field field);
// Either an arrangement or { "n", "independent_sets" }.
Matroid read_matroid(const Json& j, Field field);
Bracket read_bracket(const Json& j, Field field);
SymmetricForm read_form(const Json& j, Field field);
GradedEModule read_module(const Json& j, Field field);

// Integers bare, other rationals as "a/b" strings.
Json scalar_json(const Scalar& s);
Json monomial_json(Monomial m);
// [{ "coeff": ..., "indices": [...] }, ...] in graded-lex order.
Json multivector_json(const MultiVector& v);

}  // namespace extalg::cli
