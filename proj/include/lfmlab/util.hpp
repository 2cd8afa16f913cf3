#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfmlab {

// Error taxonomy shared across subsystems. The CLI maps kinds to exit codes.
enum class ErrorKind {
    Config,
    Env,
    Data,
    Parse,
    Budget,
    Endpoint,
    Io,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

// --- Deterministic hashing ---
// All hashing below is fixed by specification of the artifact: values must be
// stable across platforms and runs, so std::hash is never used.

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = kFnvOffset) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

inline uint64_t hash_str(const std::string& s) { return fnv1a(s.data(), s.size()); }

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(a ^ mix64(b)); }
inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) { return mix64(mix64(a, b), c); }

// --- Deterministic RNG ---
// splitmix64 stream. Distribution helpers are hand-rolled so sequences are
// identical on every platform (std::uniform_* is implementation-defined).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        // Rejection sampling to remove modulo bias.
        uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
        uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    int range(int lo, int hi_inclusive) {
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi_inclusive - lo + 1)));
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(below(v.size()))];
    }

  private:
    uint64_t state_;
};

// --- String helpers ---

std::string to_lower(std::string s);
std::string trim(const std::string& s);
std::string collapse_ws(const std::string& s);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
bool starts_with(const std::string& s, const std::string& prefix);
bool contains(const std::string& s, const std::string& needle);
std::vector<std::string> split_lines(const std::string& s);

// Joins item names in prose style: "a", "a, and b", "a, b, and c".
std::string prose_join(const std::vector<std::string>& items);

// Fixed-width decimal formatting for reports (locale-independent).
std::string format_double(double v, int precision);

}  // namespace lfmlab
