#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "akzeta/ball.hpp"
#include "akzeta/index.hpp"

namespace akzeta {

enum class ConstTag { MZV, MTV, XI, PSI, EZ_INT, T_INT };

const char* const_tag_name(ConstTag t);
std::optional<ConstTag> const_tag_parse(const std::string& s);

// arg is the integer m of xi/psi/zeta(k;m)/T(k;m); 0 for MZV/MTV.
struct ConstKey {
  ConstTag tag = ConstTag::MZV;
  Index index;
  int arg = 0;
  friend auto operator<=>(const ConstKey&, const ConstKey&) = default;
};

// Domain constraints per tag: MZV/MTV admissible index, XI/PSI positive
// non-empty index with m >= 1, EZ_INT/T_INT any positive index with m >= 2.
bool const_key_valid(const ConstKey& k);

uint32_t crc32(const std::string& bytes);

// Persistent store of computed constants, one process-wide instance.
// File format, line oriented:
//   MZVCACHE v1
//   kind|index|arg|prec_bits|midpoint_decimal|radius_decimal|crc32
// where arg is "-" when absent and crc32 covers the line up to its last '|'.
// Records with bad checksums (or a bad header, which voids the whole file)
// are treated as misses with a warning on stderr. Writes replace the file
// atomically via a temporary, so concurrent readers never see torn data.
class ConstCache {
 public:
  static ConstCache& instance();

  // Resolution order: explicit set_path (CLI), AKZETA_CACHE, then
  // $HOME/.cache/akzeta_constants.txt. set_path("") disables persistence.
  void set_path(const std::string& path);
  std::string path() const;

  // Returns a stored ball for the key whose precision is >= min_prec,
  // preferring the smallest adequate precision so reruns are bit-stable.
  std::optional<RealBall> get(const ConstKey& k, mpfr_prec_t min_prec);
  void put(const ConstKey& k, const RealBall& v);

  void clear();  // drop memory and truncate the file to a bare header

  struct Stats {
    size_t entries = 0;
    size_t hits = 0;
    size_t misses = 0;
    std::string path;
  };
  Stats stats();

 private:
  ConstCache() = default;
  void ensure_loaded_locked();
  void flush_locked();

  mutable std::mutex mu_;
  bool loaded_ = false;
  bool path_set_ = false;
  std::string path_;
  std::map<ConstKey, std::map<mpfr_prec_t, RealBall>> entries_;
  size_t hits_ = 0;
  size_t misses_ = 0;
};

}  // namespace akzeta
