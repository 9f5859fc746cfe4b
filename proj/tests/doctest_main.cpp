#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "akzeta/cache.hpp"

// Unit tests run with the constant cache disabled so results never depend
// on prior session state; cache behavior itself is covered by test_cache.
int main(int argc, char** argv) {
  akzeta::ConstCache::instance().set_path("");
  return doctest::Context(argc, argv).run();
}
