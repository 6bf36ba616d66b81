// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 triage-reduce contributors

#pragma once

#include <string>

namespace triage {

std::string read_file(const std::string& path);

// Writes to a sibling temp file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace triage
