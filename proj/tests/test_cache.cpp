#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "akzeta/cache.hpp"

using namespace akzeta;

namespace {

std::string temp_cache_path(const char* name) {
  std::string p = std::string("cache_test_") + name + ".txt";
  std::remove(p.c_str());
  return p;
}

std::string read_file(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("crc32 known vectors") {
  CHECK(crc32("") == 0x00000000u);
  CHECK(crc32("123456789") == 0xcbf43926u);
  CHECK(crc32("The quick brown fox jumps over the lazy dog") == 0x414fa339u);
}

TEST_CASE("const key validity") {
  CHECK(const_key_valid({ConstTag::MZV, {1, 2}, 0}));
  CHECK_FALSE(const_key_valid({ConstTag::MZV, {2, 1}, 0}));
  CHECK_FALSE(const_key_valid({ConstTag::MZV, {1, 2}, 3}));
  CHECK(const_key_valid({ConstTag::XI, {1}, 1}));
  CHECK_FALSE(const_key_valid({ConstTag::XI, {}, 1}));
  CHECK_FALSE(const_key_valid({ConstTag::XI, {2}, 0}));
  CHECK(const_key_valid({ConstTag::EZ_INT, {2, 1}, 2}));
  CHECK_FALSE(const_key_valid({ConstTag::T_INT, {2}, 1}));
}

TEST_CASE("tag names round-trip") {
  for (ConstTag t : {ConstTag::MZV, ConstTag::MTV, ConstTag::XI, ConstTag::PSI,
                     ConstTag::EZ_INT, ConstTag::T_INT})
    CHECK(const_tag_parse(const_tag_name(t)) == t);
  CHECK_FALSE(const_tag_parse("ZETA").has_value());
}

TEST_CASE("put then get, precision rules, persistence") {
  ConstCache& c = ConstCache::instance();
  std::string path = temp_cache_path("roundtrip");
  c.set_path(path);
  c.clear();

  ConstKey key{ConstTag::MZV, {2}, 0};
  CHECK_FALSE(c.get(key, 64).has_value());

  RealBall v = RealBall::riemann_zeta(2, 128);
  c.put(key, v);
  auto got = c.get(key, 128);
  REQUIRE(got.has_value());
  CHECK((*got - v).mid_double() == 0.0);
  CHECK(got->precision() == 128);

  // Higher precision than stored: miss.
  CHECK_FALSE(c.get(key, 256).has_value());
  // Lower precision than stored: hit, returning the 128-bit entry.
  CHECK(c.get(key, 64).has_value());

  // The smallest adequate precision is preferred.
  c.put(key, RealBall::riemann_zeta(2, 256));
  CHECK(c.get(key, 64)->precision() == 128);
  CHECK(c.get(key, 200)->precision() == 256);

  // A fresh instance state (forced reload via set_path) sees the same data
  // and the file is byte-identical after a put of identical content.
  std::string before = read_file(path);
  c.set_path(path);
  auto reloaded = c.get(key, 128);
  REQUIRE(reloaded.has_value());
  CHECK(reloaded->mid_decimal(40) == v.mid_decimal(40));
  c.put(key, *reloaded);
  CHECK(read_file(path) == before);

  c.set_path("");
  std::remove(path.c_str());
}

TEST_CASE("corrupt records are skipped, bad header voids the file") {
  ConstCache& c = ConstCache::instance();
  std::string path = temp_cache_path("corrupt");
  c.set_path(path);
  c.clear();
  c.put({ConstTag::MZV, {2}, 0}, RealBall::riemann_zeta(2, 64));
  c.put({ConstTag::MZV, {3}, 0}, RealBall::riemann_zeta(3, 64));

  // Flip a digit inside the first record's midpoint: checksum now fails.
  std::string text = read_file(path);
  size_t pos = text.find("|1.6");
  REQUIRE(pos != std::string::npos);
  text[pos + 3] = '5';
  {
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  c.set_path(path);  // force reload
  CHECK_FALSE(c.get({ConstTag::MZV, {2}, 0}, 64).has_value());
  CHECK(c.get({ConstTag::MZV, {3}, 0}, 64).has_value());

  {
    std::ofstream out(path, std::ios::trunc);
    out << "MZVCACHE v9\njunk\n";
  }
  c.set_path(path);
  CHECK_FALSE(c.get({ConstTag::MZV, {3}, 0}, 64).has_value());
  CHECK(c.stats().entries == 0);

  c.set_path("");
  std::remove(path.c_str());
}

TEST_CASE("stats counters") {
  ConstCache& c = ConstCache::instance();
  std::string path = temp_cache_path("stats");
  c.set_path(path);
  c.clear();
  ConstKey key{ConstTag::XI, {2}, 2};
  c.get(key, 64);
  c.put(key, RealBall::exact(1, 64));
  c.get(key, 64);
  auto s = c.stats();
  CHECK(s.entries == 1);
  CHECK(s.hits == 1);
  CHECK(s.misses >= 1);
  CHECK(s.path == path);
  c.set_path("");
  std::remove(path.c_str());
}
