#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lrpc/util.hpp"

namespace lrpc {

// Element of GR(p^r, s): coefficient vector of length s, entries in [0, p^r).
// Kept canonical (fully reduced) by every operation.
using GrElem = SmallVec<std::uint64_t, 4>;

// The Galois ring GR(p^r, s) = Z_{p^r}[z]/(h(z)) with h monic of degree s,
// chosen as the Hensel lift of the smallest primitive polynomial over F_p.
// The maximal ideal is generated by p; the residue field is F_{p^s}.
//
// Immutable after construction and safe to share across threads. All element
// operations are pure.
class GaloisRing {
   public:
    using Elem = GrElem;

    // Deterministic construction: for fixed (p, r, s) the modulus is always
    // the same polynomial. Requires p prime, r >= 1, s >= 1, p^s <= 2^20
    // (primitive-polynomial search stays feasible), p^r < 2^32 and
    // p^(rs) < 2^62 (coefficient arithmetic stays in one limb).
    static GaloisRing make(std::uint64_t p, int r, int s);

    // Trusts the caller-provided modulus; validates its invariants
    // (monic, degree s, primitive mod p, divides z^(p^s-1)-1).
    static GaloisRing make_with_modulus(std::uint64_t p, int r, int s, std::vector<std::uint64_t> h);

    std::uint64_t p() const { return p_; }
    int chain_length() const { return r_; }
    int degree() const { return s_; }
    std::uint64_t char_mod() const { return q_; }  // p^r
    const std::vector<std::uint64_t>& modulus() const { return h_; }
    std::uint64_t card() const { return card_; }        // p^(rs)
    std::uint64_t unit_count() const { return units_; }  // p^(rs) - p^((r-1)s)
    std::uint64_t residue_size() const { return res_q_; }  // p^s

    bool same_spec(const GaloisRing& o) const { return o.p_ == p_ && o.r_ == r_ && o.s_ == s_ && o.h_ == h_; }

    Elem zero() const { return make_elem(); }
    Elem one() const { return from_int(1); }
    Elem from_int(std::uint64_t v) const;
    // Canonicalizes an arbitrary coefficient vector (length <= s).
    Elem from_coeffs(const std::vector<std::uint64_t>& c) const;

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;

    // Largest j with a in m^j; v(0) = r.
    int valuation(const Elem& a) const;
    bool is_unit(const Elem& a) const { return valuation(a) == 0; }

    // The element p^e (e in [0, r]; e == r gives zero).
    Elem ideal_pow(int e) const;
    // Divides by p^e; requires v(a) >= e.
    Elem exact_div_ideal(const Elem& a, int e) const;

    // Inverse of a unit. Tries the polynomial extended Euclidean algorithm on
    // representatives first; falls back to solving the s x s coefficient
    // system, which always succeeds. Throws Errc::kNonUnit when v(a) > 0.
    Elem unit_inverse(const Elem& a) const;

    // Teichmueller digits t_0..t_{r-1} with a = sum p^i t_i, each digit in
    // {0} or the cyclic subgroup of order p^s - 1.
    std::vector<Elem> teichmueller(const Elem& a) const;

    Elem sample_uniform(Rng& rng) const;
    Elem sample_unit(Rng& rng) const;

    std::string to_string(const Elem& a) const;

    // Log/antilog tables of the residue field F_{p^s}, indexed by the base-p
    // packing of an element's reduction mod p. exp_table[i] = code of g^i for
    // the residue of z (primitive by construction); log_table[0] is unused.
    struct ResidueTables {
        std::vector<std::uint32_t> exp_table;  // size p^s - 1
        std::vector<std::int32_t> log_table;   // size p^s; -1 for 0
    };
    const ResidueTables& residue_tables() const;
    std::uint32_t residue_code(const Elem& a) const;  // base-p packing of a mod p

   private:
    GaloisRing() = default;
    Elem make_elem() const {
        Elem e;
        e.resize(static_cast<std::size_t>(s_));
        return e;
    }
    std::uint64_t coeff_mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % q_; }

    std::uint64_t p_ = 0, q_ = 0;  // q = p^r
    int r_ = 0, s_ = 0;
    std::vector<std::uint64_t> h_;  // modulus, length s+1, monic
    std::uint64_t card_ = 0, units_ = 0, res_q_ = 0;
    mutable std::shared_ptr<ResidueTables> residue_tables_;  // built lazily
};

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e);
bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

}  // namespace lrpc
