// Copyright 2026 The smallcodes Authors
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

#ifndef SMALLCODES_CATALOG_H
#define SMALLCODES_CATALOG_H

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smallcodes/code.h"

namespace smallcodes {

class CodeNotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class CatalogFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text catalog of codes. Format (one directive per line, '#' comments):
///
///   qecc-catalog v1
///   code <name> <n_qubits>
///   S <xmask-hex> <zmask-hex>      stabilizer generator, in order
///   LX <xmask-hex> <zmask-hex>
///   LZ <xmask-hex> <zmask-hex>
///   G <xmask-hex> <zmask-hex>      gauge generator, in order (optional)
///   PAIR <stab-index> <g_i> <g_j>  (optional)
///
/// Bit i of a mask is qubit i.
class Catalog {
 public:
  Catalog() = default;

  static Catalog parse(std::string_view text);
  static Catalog load(const std::string& path);

  /// Adds or replaces a code by name.
  void add(StabilizerCode code);
  void merge(const Catalog& other);

  const StabilizerCode& get(const std::string& name) const;
  bool contains(const std::string& name) const { return codes_.count(name) != 0; }
  std::vector<std::string> names() const;

  std::string format() const;

 private:
  std::map<std::string, StabilizerCode> codes_;
  std::vector<std::string> order_;
};

/// Catalog compiled into the library from data/catalog.qcat.
const Catalog& builtin_catalog();

/// Looks up a code in the built-in catalog; throws CodeNotFoundError.
const StabilizerCode& get_code(const std::string& name);

/// Catalog text for a single code (no header line).
std::string format_code(const StabilizerCode& code);

}  // namespace smallcodes

#endif  // SMALLCODES_CATALOG_H
