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

#ifndef SMALLCODES_TABLE_IO_H
#define SMALLCODES_TABLE_IO_H

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "smallcodes/decoder.h"

namespace smallcodes {

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TableVersionError : public TableFormatError {
 public:
  using TableFormatError::TableFormatError;
};

class TableHashMismatchError : public TableFormatError {
 public:
  using TableFormatError::TableFormatError;
};

class CorruptTableError : public TableFormatError {
 public:
  using TableFormatError::TableFormatError;
};

/// Text format:
///
///   qecc-table v1
///   code <name> <content-hash-hex>
///   n_max <n>
///   cstar s=<hex> x=<hex> z=<hex>                  one per syndrome
///   s=<hex> l=<I|X|Z|Y> nx=<> ny=<> nz=<> count=<>  nonzero counts only
///   end
void write_table(const DecoderTable& table, std::ostream& out);
void save_table(const DecoderTable& table, const std::string& path);

/// Reads a table for `code`; refuses tables written for different code content.
DecoderTable read_table(std::istream& in, const StabilizerCode& code);
DecoderTable load_table(const std::string& path, const StabilizerCode& code);

}  // namespace smallcodes

#endif  // SMALLCODES_TABLE_IO_H
