#include "sunit/sintring.hpp"

#include "sunit/primes.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace sunit {

//======================================================================
// PrimeSet
//======================================================================

PrimeSet::PrimeSet() : primes_(std::make_shared<const std::vector<BigInt>>()) {}

PrimeSet::PrimeSet(std::vector<BigInt> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const BigInt& p : primes) {
        if (!is_prime(p)) throw NotAPrime("PrimeSet: " + p.get_str() + " is not prime");
    }
    primes_ = std::make_shared<const std::vector<BigInt>>(std::move(primes));
}

bool PrimeSet::contains(const BigInt& p) const {
    return std::binary_search(primes_->begin(), primes_->end(), p);
}

PrimeSet PrimeSet::with(const std::vector<BigInt>& more) const {
    std::vector<BigInt> all = *primes_;
    all.insert(all.end(), more.begin(), more.end());
    return PrimeSet(std::move(all));
}

bool operator==(const PrimeSet& a, const PrimeSet& b) {
    return a.primes_ == b.primes_ || *a.primes_ == *b.primes_;
}

//======================================================================
// SInteger
//======================================================================

SInteger::SInteger(PrimeSet s)
    : set_(std::move(s)), sign_(0), exps_(set_.size(), BigInt(0)), cof_(1) {}

SInteger::SInteger(PrimeSet s, int sign, std::vector<BigInt> exponents, BigInt cofactor)
    : set_(std::move(s)), sign_(sign), exps_(std::move(exponents)), cof_(std::move(cofactor)) {
    if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("SInteger: sign out of range");
    if (exps_.size() != set_.size()) throw std::invalid_argument("SInteger: exponent count mismatch");
    if (sign_ == 0) {
        std::fill(exps_.begin(), exps_.end(), BigInt(0));
        cof_ = 1;
        return;
    }
    if (cof_ <= 0) throw std::invalid_argument("SInteger: cofactor must be positive");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (mpz_divisible_p(cof_.get_mpz_t(), set_.primes()[i].get_mpz_t()))
            throw std::invalid_argument("SInteger: cofactor not coprime to S");
    }
}

bool SInteger::is_integral() const {
    if (sign_ == 0) return true;
    for (const BigInt& e : exps_)
        if (e < 0) return false;
    return true;
}

BigRat SInteger::value() const {
    if (sign_ == 0) return BigRat(0);
    BigInt num = cof_, den = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] >= 0)
            num *= pow_big(set_.primes()[i], exps_[i]);
        else
            den *= pow_big(set_.primes()[i], BigInt(-exps_[i]));
    }
    BigRat v(sign_ > 0 ? num : BigInt(-num), den);
    v.canonicalize();
    return v;
}

std::string SInteger::str() const { return rat_to_string(value()); }

SInteger SInteger::operator-() const {
    return SInteger(set_, -sign_, exps_, cof_);
}

SInteger SInteger::unit_inverse() const {
    if (!is_s_unit(*this)) throw std::domain_error("unit_inverse: not an S-unit");
    std::vector<BigInt> e(exps_);
    for (BigInt& x : e) x = -x;
    return SInteger(set_, sign_, std::move(e), BigInt(1));
}

namespace {

void require_same_set(const SInteger& a, const SInteger& b) {
    if (a.prime_set() != b.prime_set())
        throw PrimeSetMismatch("operands live over different prime sets");
}

} // namespace

SInteger operator*(const SInteger& a, const SInteger& b) {
    require_same_set(a, b);
    if (a.is_zero() || b.is_zero()) return SInteger(a.prime_set());
    std::vector<BigInt> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
    // cofactors are coprime to S, so their product needs no renormalization
    return SInteger(a.prime_set(), a.sign() * b.sign(), std::move(e), a.cofactor() * b.cofactor());
}

SInteger operator+(const SInteger& a, const SInteger& b) {
    require_same_set(a, b);
    return from_rational(a.value() + b.value(), a.prime_set());
}

SInteger operator-(const SInteger& a, const SInteger& b) {
    require_same_set(a, b);
    return from_rational(a.value() - b.value(), a.prime_set());
}

bool operator==(const SInteger& a, const SInteger& b) {
    require_same_set(a, b);
    return a.sign_ == b.sign_ && a.cof_ == b.cof_ && a.exps_ == b.exps_;
}

bool operator<(const SInteger& a, const SInteger& b) {
    require_same_set(a, b);
    return a.value() < b.value();
}

//======================================================================
// free functions
//======================================================================

SInteger from_rational(const BigInt& num, const BigInt& den, const PrimeSet& s) {
    if (den == 0) throw std::domain_error("from_rational: zero denominator");
    return from_rational(BigRat(num, den), s);
}

SInteger from_rational(const BigRat& q0, const PrimeSet& s) {
    BigRat q = q0;
    q.canonicalize();
    if (q == 0) return SInteger(s);
    const int sign = sgn(q) > 0 ? 1 : -1;
    BigInt num = abs(q.get_num());
    BigInt den = q.get_den();
    std::vector<BigInt> exps(s.size(), BigInt(0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const BigInt& p = s.primes()[i];
        while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) { num /= p; ++exps[i]; }
        while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) { den /= p; --exps[i]; }
    }
    if (den != 1)
        throw DenominatorNotSOnly("denominator retains factor " + den.get_str() + " outside S");
    return SInteger(s, sign, std::move(exps), std::move(num));
}

bool is_s_unit(const SInteger& x) {
    return x.sign() != 0 && x.cofactor() == 1;
}

std::pair<BigInt, BigInt> split_s_part(const BigInt& n, const PrimeSet& s) {
    if (n == 0) throw std::domain_error("split_s_part: zero");
    BigInt rest = abs(n), s_part = 1;
    for (const BigInt& p : s.primes()) {
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) { rest /= p; s_part *= p; }
    }
    return {s_part, rest};
}

CrtSolution crt_solve(const std::vector<std::pair<BigInt, BigInt>>& congruences) {
    BigInt x = 0, m = 1;
    for (const auto& [r, mod] : congruences) {
        if (mod < 2) throw std::invalid_argument("crt_solve: modulus must be >= 2");
        BigInt g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mod.get_mpz_t());
        if (g != 1)
            throw ModuliNotCoprime("crt_solve: moduli share factor " + g.get_str());
        // x' = x + m*t with x' = r (mod mod)  =>  t = (r-x) * m^-1 (mod mod)
        BigInt minv;
        if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw ModuliNotCoprime("crt_solve: modulus not invertible");
        BigInt t = ((r - x) % mod) * minv % mod;
        x += m * t;
        m *= mod;
        x %= m;
        if (x < 0) x += m;
    }
    return {x, m};
}

std::vector<BigInt> primes_outside(const std::vector<BigInt>& excluded, int count) {
    if (count < 0) throw std::invalid_argument("primes_outside: negative count");
    std::vector<BigInt> out;
    BigInt c = 1;
    while (static_cast<int>(out.size()) < count) {
        c = next_prime_above(c);
        if (std::find(excluded.begin(), excluded.end(), c) == excluded.end())
            out.push_back(c);
    }
    return out;
}

std::vector<SInteger> s_units_by_height(const PrimeSet& s, int max_exponent) {
    if (max_exponent < 0) throw std::invalid_argument("s_units_by_height: negative bound");

    // memoized per (set, bound): the synthesis searches rescan these lists
    struct Key {
        std::vector<BigInt> primes;
        int bound;
        bool operator<(const Key& o) const {
            return std::tie(primes, bound) < std::tie(o.primes, o.bound);
        }
    };
    static std::map<Key, std::vector<SInteger>> cache;
    static std::mutex cache_mutex;

    const Key key{s.primes(), max_exponent};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    std::vector<SInteger> units;
    std::vector<BigInt> exps(s.size(), BigInt(-max_exponent));
    while (true) {
        units.emplace_back(s, 1, exps, BigInt(1));
        units.emplace_back(s, -1, exps, BigInt(1));
        // odometer over [-B, B]^|S|
        std::size_t i = 0;
        while (i < exps.size() && exps[i] == max_exponent) exps[i++] = -max_exponent;
        if (i == exps.size()) break;
        ++exps[i];
    }
    std::stable_sort(units.begin(), units.end(), [](const SInteger& a, const SInteger& b) {
        const BigRat va = abs(a.value()), vb = abs(b.value());
        if (va != vb) return va < vb;
        if (a.sign() != b.sign()) return a.sign() > b.sign();
        return a.exponents() < b.exponents();
    });

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(units)).first->second;
}

} // namespace sunit
