// Copyright 2026 The faddeeva-trap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>

#include "faddeeva/reference.hpp"
#include "faddeeva/sweep.hpp"
#include "faddeeva/timing.hpp"

namespace faddeeva::bench {

enum class Format { kCsv, kJson };

/// kJson for a ".json" extension, kCsv otherwise.
Format format_for_path(const std::string& path);

// CSV: header row, reals with 17 significant digits, "nan" for missing
// values. JSON: an array with one object per record, same field names.
std::string to_csv(std::span<const SweepRecord> records);
std::string to_csv(std::span<const AccuracyRow> rows);
std::string to_csv(std::span<const TimingRecord> records);
std::string to_csv(const reference::WeidemanModel& model);

std::string to_json(std::span<const SweepRecord> records);
std::string to_json(std::span<const AccuracyRow> rows);
std::string to_json(std::span<const TimingRecord> records);
std::string to_json(const reference::WeidemanModel& model);

/// Writes \p content to \p path byte for byte. IoError names the path.
void write_file(const std::string& path, const std::string& content);

template <class Records>
void emit(const Records& records, Format format, const std::string& path) {
  write_file(path, format == Format::kJson ? to_json(records) : to_csv(records));
}

}  // namespace faddeeva::bench
