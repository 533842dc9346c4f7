// Copyright 2026 The erravg Authors
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

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace erravg {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "%.12g", with "nan" / "inf" / "-inf" spelled out.
std::string format_double(double x);

/// Headered CSV held in memory. Cells are stored pre-formatted.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  class RowBuilder {
   public:
    explicit RowBuilder(CsvTable& t) : table_(t) {}
    ~RowBuilder() noexcept(false);
    RowBuilder(const RowBuilder&) = delete;
    RowBuilder& operator=(const RowBuilder&) = delete;

    RowBuilder& operator<<(double x);
    RowBuilder& operator<<(std::uint64_t x);
    RowBuilder& operator<<(const std::string& s);
    RowBuilder& operator<<(const char* s) { return *this << std::string(s); }
    RowBuilder& operator<<(int x) { return *this << static_cast<std::uint64_t>(x); }
    RowBuilder& operator<<(unsigned x) { return *this << static_cast<std::uint64_t>(x); }

   private:
    CsvTable& table_;
    std::vector<std::string> cells_;
  };

  /// Appends a row, committed when the builder is destroyed. A row whose
  /// width differs from the header throws std::logic_error.
  RowBuilder row() { return RowBuilder(*this); }

  const std::vector<std::string>& header() const { return header_; }
  std::size_t size() const { return rows_.size(); }
  std::string to_string() const;
  void write(const std::filesystem::path& path) const;

 private:
  void commit(std::vector<std::string> cells);

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void write_text(const std::filesystem::path& path, const std::string& text);

/// Pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace erravg
