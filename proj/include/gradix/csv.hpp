/*
 *   Copyright 2026 The Gradix Authors
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

/**
 * @file
 *
 * CSV form of ranked data tables.
 *
 * The header names the attributes; an optional last column `rank` holds the
 * score (default 1). Fields may be double-quoted with `""` escapes. Output
 * lists attributes in scheme order, always writes the rank column and sorts
 * rows by descending rank, then ascending tuple.
 */
#pragma once

#include <string>
#include <string_view>

#include "gradix/table.hpp"

namespace gradix {

/// Attributes without a declared type are declared as text. Rows with rank 0
/// are dropped; a repeated tuple is an error (PreconditionError).
RankedDataTable read_csv(std::string_view text, AttributeRegistry& registry, const ResiduatedLatticePtr& lattice);

std::string write_csv(const RankedDataTable& d);

/// File variants; throw IoError when the file cannot be opened.
RankedDataTable load_csv(const std::string& path, AttributeRegistry& registry, const ResiduatedLatticePtr& lattice);
void save_csv(const std::string& path, const RankedDataTable& d);

}  // namespace gradix
