#include "grassclique/gf.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace grassclique {

namespace {

constexpr int kMaxOrder = 32;

bool is_prime(int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

// q = p^e with p prime, or throws.
std::pair<int, int> factor_prime_power(int q) {
    if (q < 2 || q > kMaxOrder)
        throw std::invalid_argument("field order must be a prime power in [2, 32], got " +
                                    std::to_string(q));
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int e = 0, m = q;
        while (m % p == 0) { m /= p; ++e; }
        if (m != 1)
            throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        return {p, e};
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

// Default modulus polynomials, constant term first.
std::vector<int> default_modulus(int q) {
    switch (q) {
        case 4:  return {1, 1, 1};           // x^2 + x + 1
        case 8:  return {1, 1, 0, 1};        // x^3 + x + 1
        case 9:  return {1, 0, 1};           // x^2 + 1
        case 16: return {1, 1, 0, 0, 1};     // x^4 + x + 1
        case 25: return {1, 1, 1};           // x^2 + x + 1
        case 27: return {1, 2, 0, 1};        // x^3 + 2x + 1
        case 32: return {1, 0, 1, 0, 0, 1};  // x^5 + x^2 + 1
        default: return {};
    }
}

// Dense polynomial helpers over GF(p), coefficient lists constant-first.
std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    // b monic (leading coefficient 1 after scaling by caller)
    a = poly_trim(std::move(a));
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int c = a.back();
        for (int i = 0; i <= db; ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        a = poly_trim(std::move(a));
    }
    return a;
}

// Exhaustive divisor search: irreducible iff no monic divisor of degree
// 1..deg/2. Feasible for the supported range (e <= 5, p <= 5 for e > 1).
bool poly_irreducible(const std::vector<int>& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::vector<int> g(d + 1, 0);
        g[d] = 1;
        // odometer over the d lower coefficients
        long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(c % p); c /= p; }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < e_; ++i) q_ *= p_;

    const auto to_poly = [&](int code) {
        std::array<int, 8> cs{};
        for (int i = 0; i < e_; ++i) { cs[i] = code % p_; code /= p_; }
        return cs;
    };
    const auto from_poly = [&](const std::vector<int>& cs) {
        int v = 0;
        for (int i = e_ - 1; i >= 0; --i)
            v = v * p_ + (i < static_cast<int>(cs.size()) ? cs[i] : 0);
        return static_cast<std::uint8_t>(v);
    };

    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        const auto pa = to_poly(a);
        for (int b = 0; b < q_; ++b) {
            const auto pb = to_poly(b);
            std::vector<int> sum(e_), prod(2 * e_ - 1, 0);
            for (int i = 0; i < e_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            add_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
                from_poly(sum);
            mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
                from_poly(e_ == 1 ? poly_trim(std::move(prod))
                                  : poly_mod(std::move(prod), modulus_, p_));
        }
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            if (add_[idx(a, b)] == 0) neg_[a] = static_cast<std::uint8_t>(b);
            if (a != 0 && mul_[idx(a, b)] == 1) inv_[a] = static_cast<std::uint8_t>(b);
        }
}

FieldPtr Field::make(int q) { return make(q, default_modulus(q)); }

FieldPtr Field::make(int q, const std::vector<int>& modulus) {
    const auto [p, e] = factor_prime_power(q);
    if (e == 1)
        return std::shared_ptr<const Field>(new Field(p, 1, {}));

    std::vector<int> mod = modulus.empty() ? default_modulus(q) : modulus;
    if (static_cast<int>(mod.size()) != e + 1)
        throw std::invalid_argument("modulus must have degree " + std::to_string(e) +
                                    " (" + std::to_string(e + 1) + " coefficients)");
    for (int c : mod)
        if (c < 0 || c >= p)
            throw std::invalid_argument("modulus coefficients must lie in [0, " +
                                        std::to_string(p) + ")");
    if (mod.back() != 1)
        throw std::invalid_argument("modulus must be monic");
    if (!poly_irreducible(mod, p))
        throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
    return std::shared_ptr<const Field>(new Field(p, e, std::move(mod)));
}

std::uint8_t Field::inv(std::uint8_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

bool Field::same_as(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

std::string Field::element_table() const {
    std::ostringstream out;
    for (int a = 0; a < q_; ++a) {
        out << a << " = ";
        if (e_ == 1) {
            out << a;
        } else {
            bool first = true;
            int code = a;
            for (int i = 0; i < e_; ++i, code /= p_) {
                const int c = code % p_;
                if (c == 0) continue;
                if (!first) out << " + ";
                if (c != 1 || i == 0) out << c;
                if (i >= 1) out << (c != 1 ? "*x" : "x");
                if (i >= 2) out << "^" << i;
                first = false;
            }
            if (first) out << 0;
        }
        out << "\n";
    }
    return out.str();
}

void require_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b))
        throw std::invalid_argument("field mismatch: GF(" + std::to_string(a.q()) +
                                    ") vs GF(" + std::to_string(b.q()) + ")");
}

Elem::Elem(FieldPtr field, int code) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("element requires a field");
    if (code < 0 || code >= field_->q())
        throw std::invalid_argument("element code " + std::to_string(code) +
                                    " out of range for GF(" + std::to_string(field_->q()) + ")");
    code_ = static_cast<std::uint8_t>(code);
}

Elem operator+(const Elem& a, const Elem& b) {
    require_same_field(a.field(), b.field());
    return Elem(a.field_, a.field().add(a.code_, b.code_));
}

Elem operator-(const Elem& a, const Elem& b) {
    require_same_field(a.field(), b.field());
    return Elem(a.field_, a.field().sub(a.code_, b.code_));
}

Elem operator*(const Elem& a, const Elem& b) {
    require_same_field(a.field(), b.field());
    return Elem(a.field_, a.field().mul(a.code_, b.code_));
}

bool operator==(const Elem& a, const Elem& b) {
    return a.field().same_as(b.field()) && a.code_ == b.code_;
}

Elem Elem::inverse() const { return Elem(field_, field_->inv(code_)); }

Elem Elem::operator-() const { return Elem(field_, field_->neg(code_)); }

}  // namespace grassclique
