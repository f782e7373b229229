#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgdual {

// Arithmetic in F_p for a machine-word prime p (p <= 2^31). Residues are
// kept reduced to [0, p); all reductions are explicit.

inline long long fp_norm(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

inline long long fp_add(long long a, long long b, long long p) { return (a + b) % p; }
inline long long fp_sub(long long a, long long b, long long p) { return fp_norm(a - b, p); }
inline long long fp_mul(long long a, long long b, long long p) { return (a * b) % p; }
inline long long fp_neg(long long a, long long p) { return a == 0 ? 0 : p - a; }

inline long long fp_pow(long long a, long long e, long long p) {
    long long r = 1 % p;
    a = fp_norm(a, p);
    while (e > 0) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline long long fp_inv(long long a, long long p) {
    a = fp_norm(a, p);
    if (a == 0) throw std::domain_error("fp_inv: zero is not invertible");
    // extended Euclid
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("fp_inv: modulus is not prime");
    return fp_norm(t, p);
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// Scalar with its modulus attached. Used at API boundaries; hot loops work
// on raw residues with the modulus carried by the container.
struct FpScalar {
    long long value = 0;
    long long modulus = 2;

    FpScalar() = default;
    FpScalar(long long v, long long p) : value(fp_norm(v, p)), modulus(p) {
        if (!is_prime(p)) throw std::domain_error("FpScalar: modulus must be prime");
        if (p > (1LL << 31)) throw std::domain_error("FpScalar: modulus too large");
    }

    friend FpScalar operator+(FpScalar a, FpScalar b) {
        require_same(a, b);
        return FpScalar(fp_add(a.value, b.value, a.modulus), a.modulus);
    }
    friend FpScalar operator-(FpScalar a, FpScalar b) {
        require_same(a, b);
        return FpScalar(fp_sub(a.value, b.value, a.modulus), a.modulus);
    }
    friend FpScalar operator*(FpScalar a, FpScalar b) {
        require_same(a, b);
        return FpScalar(fp_mul(a.value, b.value, a.modulus), a.modulus);
    }
    FpScalar inv() const { return FpScalar(fp_inv(value, modulus), modulus); }
    FpScalar operator-() const { return FpScalar(fp_neg(value, modulus), modulus); }
    friend bool operator==(const FpScalar& a, const FpScalar& b) {
        return a.modulus == b.modulus && a.value == b.value;
    }

private:
    static void require_same(const FpScalar& a, const FpScalar& b) {
        if (a.modulus != b.modulus)
            throw std::invalid_argument("FpScalar: mixed moduli");
    }
};

}  // namespace dgdual
