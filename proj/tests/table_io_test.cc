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

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "smallcodes/catalog.h"
#include "smallcodes/decoder.h"
#include "smallcodes/table_io.h"

namespace smallcodes {
namespace {

std::string serialize(const DecoderTable& table) {
  std::ostringstream out;
  write_table(table, out);
  return out.str();
}

DecoderTable deserialize(const std::string& text, const StabilizerCode& code) {
  std::istringstream in(text);
  return read_table(in, code);
}

TEST(TableIo, RoundTrip) {
  for (auto [name, n_max] : {std::pair{"REP3", 3}, {"S9", 9}, {"S9", 4}, {"GCC15", 3}}) {
    const StabilizerCode& code = get_code(name);
    DecoderTable table = build_decoder_table(code, {.n_max = n_max});
    DecoderTable back = deserialize(serialize(table), code);
    EXPECT_TRUE(back == table) << name;
    EXPECT_EQ(back.n_max(), n_max);
  }
}

TEST(TableIo, FileRoundTrip) {
  const StabilizerCode& code = get_code("C7");
  DecoderTable table = build_decoder_table(code);
  std::string path = ::testing::TempDir() + "c7.table";
  save_table(table, path);
  EXPECT_TRUE(load_table(path, code) == table);
}

TEST(TableIo, WrongCodeIsRejected) {
  std::string text = serialize(build_decoder_table(get_code("S9")));
  EXPECT_THROW(deserialize(text, get_code("S9b")), TableHashMismatchError);
}

TEST(TableIo, TruncatedFileIsRejected) {
  std::string text = serialize(build_decoder_table(get_code("S9")));
  EXPECT_THROW(deserialize(text.substr(0, text.size() / 2), get_code("S9")), CorruptTableError);
  EXPECT_THROW(deserialize("", get_code("S9")), TableFormatError);
}

TEST(TableIo, VersionMismatchIsRejected) {
  std::string text = serialize(build_decoder_table(get_code("REP3")));
  text.replace(text.find("v1"), 2, "v9");
  EXPECT_THROW(deserialize(text, get_code("REP3")), TableVersionError);
}

TEST(TableIo, TamperedCountIsRejected) {
  std::string text = serialize(build_decoder_table(get_code("REP3")));
  auto pos = text.find("count=");
  ASSERT_NE(pos, std::string::npos);
  text.insert(pos + 6, "9");
  EXPECT_THROW(deserialize(text, get_code("REP3")), CorruptTableError);
}

}  // namespace
}  // namespace smallcodes
