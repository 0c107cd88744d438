// Copyright 2026 The beattyqe Authors
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

#ifndef BQE_JSON_HPP
#define BQE_JSON_HPP

#include <json.hpp>

#include "bqe/logic.hpp"
#include "bqe/pattern.hpp"

namespace bqe::json {

using ordered_json = nlohmann::ordered_json;

/// AST serialization. Integers render as decimal strings so arbitrary
/// precision survives the wire format.
ordered_json term_to_json(const logic::Term& t);
ordered_json formula_to_json(const logic::FormulaPtr& f);
ordered_json decision_to_json(const pattern::Decision& d);
ordered_json interval_to_json(const circle::OrientedInterval& I);
ordered_json family_to_json(const pattern::UVFamily& fam);

}  // namespace bqe::json

#endif  // BQE_JSON_HPP
