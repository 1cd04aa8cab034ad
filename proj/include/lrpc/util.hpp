#pragma once

#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace lrpc {

// Inline-storage vector for small coefficient arrays. Falls back to the heap
// when an element needs more than N limbs.
template <typename T, std::size_t N>
class SmallVec {
    static_assert(std::is_trivially_copyable_v<T>);

   public:
    SmallVec() noexcept = default;
    explicit SmallVec(std::size_t n) { resize(n); }
    SmallVec(std::initializer_list<T> xs) {
        reserve(xs.size());
        for (const T& x : xs) push_back(x);
    }
    SmallVec(const SmallVec& o) { assign(o.data(), o.size_); }
    SmallVec& operator=(const SmallVec& o) {
        if (this != &o) assign(o.data(), o.size_);
        return *this;
    }
    SmallVec(SmallVec&& o) noexcept { steal(o); }
    SmallVec& operator=(SmallVec&& o) noexcept {
        if (this != &o) {
            release();
            steal(o);
        }
        return *this;
    }
    ~SmallVec() { release(); }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    T* data() noexcept { return heap_ ? heap_ : inline_; }
    const T* data() const noexcept { return heap_ ? heap_ : inline_; }
    T& operator[](std::size_t i) noexcept { return data()[i]; }
    const T& operator[](std::size_t i) const noexcept { return data()[i]; }
    T* begin() noexcept { return data(); }
    T* end() noexcept { return data() + size_; }
    const T* begin() const noexcept { return data(); }
    const T* end() const noexcept { return data() + size_; }

    void clear() noexcept { size_ = 0; }
    void reserve(std::size_t n) {
        if (n > cap_) grow(n);
    }
    void resize(std::size_t n) {
        reserve(n);
        for (std::size_t i = size_; i < n; ++i) data()[i] = T{};
        size_ = static_cast<std::uint32_t>(n);
    }
    void push_back(const T& x) {
        if (size_ == cap_) grow(cap_ * 2);
        data()[size_++] = x;
    }
    void assign(const T* src, std::size_t n) {
        reserve(n);
        std::memcpy(data(), src, n * sizeof(T));
        size_ = static_cast<std::uint32_t>(n);
    }

    friend bool operator==(const SmallVec& a, const SmallVec& b) {
        if (a.size_ != b.size_) return false;
        return std::memcmp(a.data(), b.data(), a.size_ * sizeof(T)) == 0;
    }
    friend bool operator!=(const SmallVec& a, const SmallVec& b) { return !(a == b); }

   private:
    void grow(std::size_t n) {
        if (n < 2 * cap_) n = 2 * cap_;
        T* fresh = new T[n];
        std::memcpy(fresh, data(), size_ * sizeof(T));
        release();
        heap_ = fresh;
        cap_ = static_cast<std::uint32_t>(n);
    }
    void release() noexcept {
        delete[] heap_;
        heap_ = nullptr;
        cap_ = N;
    }
    void steal(SmallVec& o) noexcept {
        if (o.heap_) {
            heap_ = o.heap_;
            cap_ = o.cap_;
            size_ = o.size_;
            o.heap_ = nullptr;
            o.cap_ = N;
            o.size_ = 0;
        } else {
            heap_ = nullptr;
            cap_ = N;
            size_ = o.size_;
            std::memcpy(inline_, o.inline_, o.size_ * sizeof(T));
            o.size_ = 0;
        }
    }

    T inline_[N];
    T* heap_ = nullptr;
    std::uint32_t size_ = 0;
    std::uint32_t cap_ = N;
};

enum class Errc {
    kNonUnit,
    kParameter,
    kConstruction,
    kDecomposition,
    kProfileTooLarge,
    kSampling,
    kInvalid,
    kIo,
};

class Error : public std::runtime_error {
   public:
    Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

// Counter-based splittable generator (SplitMix64 core). Child streams are a
// pure function of (parent state, tag), so a stream derived per trial index is
// identical no matter how work is scheduled across threads.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed + kGamma)) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += kGamma);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t lim = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= lim);
        return x % n;
    }

    Rng split(std::uint64_t tag) const { return Rng(mix(state_ ^ mix(tag + kGamma))); }

    static std::uint64_t combine(std::uint64_t a, std::uint64_t b) { return mix(mix(a) ^ (b + kGamma)); }

   private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
        return z ^ (z >> 33);
    }
    std::uint64_t state_;
};

}  // namespace lrpc
