#include "akzeta/cache.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace akzeta {

const char* const_tag_name(ConstTag t) {
  switch (t) {
    case ConstTag::MZV: return "MZV";
    case ConstTag::MTV: return "MTV";
    case ConstTag::XI: return "XI";
    case ConstTag::PSI: return "PSI";
    case ConstTag::EZ_INT: return "EZ_INT";
    case ConstTag::T_INT: return "T_INT";
  }
  return "?";
}

std::optional<ConstTag> const_tag_parse(const std::string& s) {
  for (ConstTag t : {ConstTag::MZV, ConstTag::MTV, ConstTag::XI, ConstTag::PSI,
                     ConstTag::EZ_INT, ConstTag::T_INT})
    if (s == const_tag_name(t)) return t;
  return std::nullopt;
}

bool const_key_valid(const ConstKey& k) {
  switch (k.tag) {
    case ConstTag::MZV:
    case ConstTag::MTV:
      return is_positive_index(k.index) && is_admissible(k.index) && k.arg == 0;
    case ConstTag::XI:
    case ConstTag::PSI:
      return !k.index.empty() && is_positive_index(k.index) && k.arg >= 1;
    case ConstTag::EZ_INT:
    case ConstTag::T_INT:
      return is_positive_index(k.index) && k.arg >= 2;
  }
  return false;
}

uint32_t crc32(const std::string& bytes) {
  static const std::array<uint32_t, 256> table = [] {
    std::array<uint32_t, 256> t{};
    for (uint32_t i = 0; i < 256; ++i) {
      uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  uint32_t c = 0xffffffffu;
  for (unsigned char ch : bytes) c = table[(c ^ ch) & 0xffu] ^ (c >> 8);
  return c ^ 0xffffffffu;
}

ConstCache& ConstCache::instance() {
  static ConstCache cache;
  return cache;
}

void ConstCache::set_path(const std::string& path) {
  std::lock_guard<std::mutex> lock(mu_);
  path_ = path;
  path_set_ = true;
  loaded_ = false;
  entries_.clear();
}

namespace {

std::string default_path() {
  if (const char* env = std::getenv("AKZETA_CACHE")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/akzeta_constants.txt";
  return "akzeta_constants.txt";
}

constexpr char kHeader[] = "MZVCACHE v1";

std::string record_body(const ConstKey& k, mpfr_prec_t prec,
                        const RealBall& v) {
  std::ostringstream os;
  os << const_tag_name(k.tag) << '|' << index_to_string(k.index) << '|';
  if (k.arg == 0)
    os << '-';
  else
    os << k.arg;
  os << '|' << prec << '|'
     << v.mid_decimal(RealBall::decimal_digits_for(prec)) << '|'
     << v.rad_decimal();
  return os.str();
}

}  // namespace

std::string ConstCache::path() const {
  std::lock_guard<std::mutex> lock(mu_);
  return path_set_ ? path_ : default_path();
}

void ConstCache::ensure_loaded_locked() {
  if (loaded_) return;
  loaded_ = true;
  if (!path_set_) path_ = default_path();
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // absent file: empty cache
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    std::cerr << "akzeta: cache file " << path_
              << " has an unknown header, ignoring it\n";
    return;
  }
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    size_t cut = line.rfind('|');
    bool ok = cut != std::string::npos;
    ConstKey key;
    mpfr_prec_t prec = 0;
    if (ok) {
      std::string body = line.substr(0, cut);
      uint32_t stored = 0;
      try {
        stored = static_cast<uint32_t>(std::stoul(line.substr(cut + 1), nullptr, 16));
      } catch (const std::exception&) {
        ok = false;
      }
      ok = ok && stored == crc32(body);
      if (ok) {
        std::istringstream is(body);
        std::string tag, index, arg, precs, mid, rad;
        ok = static_cast<bool>(std::getline(is, tag, '|')) &&
             std::getline(is, index, '|') && std::getline(is, arg, '|') &&
             std::getline(is, precs, '|') && std::getline(is, mid, '|') &&
             std::getline(is, rad);
        if (ok) {
          auto t = const_tag_parse(tag);
          ok = t.has_value();
          if (ok) {
            try {
              key.tag = *t;
              key.index = index_from_string(index);
              key.arg = (arg == "-") ? 0 : std::stoi(arg);
              prec = static_cast<mpfr_prec_t>(std::stol(precs));
              ok = prec >= 16 && prec <= 100000 && const_key_valid(key);
              if (ok)
                entries_[key].insert_or_assign(
                    prec, RealBall::from_decimal(mid, rad, prec));
            } catch (const std::exception&) {
              ok = false;
            }
          }
        }
      }
    }
    if (!ok)
      std::cerr << "akzeta: cache record at " << path_ << ":" << lineno
                << " is corrupt, skipping it\n";
  }
}

void ConstCache::flush_locked() {
  if (path_.empty()) return;
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      std::cerr << "akzeta: cannot write cache file " << tmp << "\n";
      return;
    }
    out << kHeader << '\n';
    for (const auto& [key, byprec] : entries_)
      for (const auto& [prec, ball] : byprec) {
        std::string body = record_body(key, prec, ball);
        char crc[16];
        std::snprintf(crc, sizeof crc, "%08x", crc32(body));
        out << body << '|' << crc << '\n';
      }
  }
  if (std::rename(tmp.c_str(), path_.c_str()) != 0)
    std::cerr << "akzeta: cannot replace cache file " << path_ << "\n";
}

std::optional<RealBall> ConstCache::get(const ConstKey& k,
                                        mpfr_prec_t min_prec) {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_loaded_locked();
  auto it = entries_.find(k);
  if (it != entries_.end()) {
    auto pit = it->second.lower_bound(min_prec);
    if (pit != it->second.end()) {
      ++hits_;
      return pit->second;
    }
  }
  ++misses_;
  return std::nullopt;
}

void ConstCache::put(const ConstKey& k, const RealBall& v) {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_loaded_locked();
  entries_[k].insert_or_assign(v.precision(), v);
  flush_locked();
}

void ConstCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_loaded_locked();
  entries_.clear();
  hits_ = misses_ = 0;
  flush_locked();
}

ConstCache::Stats ConstCache::stats() {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_loaded_locked();
  Stats s;
  for (const auto& [key, byprec] : entries_) s.entries += byprec.size();
  s.hits = hits_;
  s.misses = misses_;
  s.path = path_set_ ? path_ : default_path();
  return s;
}

}  // namespace akzeta
