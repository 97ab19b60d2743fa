/*
 * Copyright 2026 The qtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qtop {

/// One verified clause of an axiom check. `witness` is empty on PASS and
/// carries a concrete counterexample otherwise.
struct clause {
    std::string name;
    bool pass = true;
    std::string witness;
};

/// Verdict of a multi-clause check (value-semigroup axioms, continuity
/// axioms, filterbase axioms, topology closure).
struct report {
    std::vector<clause> clauses;

    bool pass() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }

    const clause* find(std::string_view name) const {
        for (const auto& c : clauses)
            if (c.name == name) return &c;
        return nullptr;
    }

    void add_pass(std::string name) { clauses.push_back({std::move(name), true, {}}); }

    void add_fail(std::string name, std::string witness) {
        clauses.push_back({std::move(name), false, std::move(witness)});
    }
};

} // namespace qtop
