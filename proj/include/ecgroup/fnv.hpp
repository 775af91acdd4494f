#ifndef ECGROUP_FNV_HPP
#define ECGROUP_FNV_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace ecgroup {

// Incremental FNV-1a (64-bit). Used to fingerprint canonical renderings
// without materializing them.
class Fnv1a64 {
 public:
  void feed(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ull;
    }
  }

  std::uint64_t value() const { return hash_; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t h = hash_;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = digits[h & 0xf];
      h >>= 4;
    }
    return out;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  Fnv1a64 h;
  h.feed(bytes);
  return h.value();
}

}  // namespace ecgroup

#endif  // ECGROUP_FNV_HPP
