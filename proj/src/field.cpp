#include "prelie/field.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>

namespace prelie {

namespace detail {

struct FieldData {
    FieldDescriptor desc;
    std::int64_t p = 0;  // characteristic of the base (0 = Q)
    bool quadratic = false;
    mpq_class d;         // canonical non-square of the base
    std::string name;
    const FieldData* base = nullptr;  // self unless quadratic
};

} // namespace detail

namespace {

using detail::FieldData;

// Interned field table. Entries are never removed, so raw pointers to them
// stay valid for the whole process.
std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::deque<FieldData>& registry() {
    static std::deque<FieldData> r;
    return r;
}

mpz_class mod_floor(const mpz_class& x, std::int64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    return r;
}

// Reduces a base-field value into canonical form. Over GF(p) the value may be
// any rational whose denominator is invertible mod p.
mpq_class reduce_base(mpq_class v, std::int64_t p) {
    v.canonicalize();
    if (p == 0) {
        return v;
    }
    mpz_class num = mod_floor(v.get_num(), p);
    mpz_class den = mod_floor(v.get_den(), p);
    if (den == 0) {
        throw Error("denominator divisible by the characteristic " + std::to_string(p));
    }
    if (den != 1) {
        mpz_class inv;
        mpz_class pz = static_cast<long>(p);
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        num = mod_floor(num * inv, p);
    }
    return mpq_class(num);
}

mpq_class base_inverse(const mpq_class& v, std::int64_t p) {
    if (sgn(v) == 0) {
        throw Error("division by zero");
    }
    if (p == 0) {
        return 1 / v;
    }
    mpz_class inv;
    mpz_class pz = static_cast<long>(p);
    mpz_invert(inv.get_mpz_t(), v.get_num().get_mpz_t(), pz.get_mpz_t());
    return mpq_class(inv);
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    __int128 result = 1;
    __int128 base = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

// Tonelli-Shanks. Returns the smaller of the two roots.
std::optional<std::int64_t> sqrt_mod_prime(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a == 0) {
        return 0;
    }
    if (p == 2) {
        return a;
    }
    if (powmod(a, (p - 1) / 2, p) != 1) {
        return std::nullopt;
    }
    std::int64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::int64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) {
        ++z;
    }
    std::int64_t m = s;
    std::int64_t c = powmod(z, q, p);
    std::int64_t t = powmod(a, q, p);
    std::int64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t tt = t;
        while (tt != 1) {
            tt = static_cast<std::int64_t>(static_cast<__int128>(tt) * tt % p);
            ++i;
        }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j) {
            b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
        }
        m = i;
        c = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
        t = static_cast<std::int64_t>(static_cast<__int128>(t) * c % p);
        r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
    }
    return std::min(r, p - r);
}

// Square root inside the base field (Q or GF(p)); canonical sign: the
// nonnegative rational, the smaller residue.
std::optional<mpq_class> base_sqrt(const mpq_class& v, std::int64_t p) {
    if (p == 0) {
        if (sgn(v) < 0) {
            return std::nullopt;
        }
        const mpz_class& num = v.get_num();
        const mpz_class& den = v.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
            return std::nullopt;
        }
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        mpq_class r(rn, rd);
        r.canonicalize();
        return r;
    }
    auto r = sqrt_mod_prime(v.get_num().get_si(), p);
    if (!r) {
        return std::nullopt;
    }
    return mpq_class(static_cast<long>(*r));
}

std::string base_to_string(const mpq_class& v) { return v.get_str(); }

mpq_class parse_base_literal(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw Error("empty scalar literal");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-')) {
            throw Error("malformed scalar literal '" + std::string(text) + "'");
        }
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) {
        throw Error("malformed scalar literal '" + std::string(text) + "'");
    }
    if (v.get_den() == 0) {
        throw Error("zero denominator in scalar literal '" + std::string(text) + "'");
    }
    v.canonicalize();
    return v;
}

std::string field_name(const FieldDescriptor& desc) {
    switch (desc.kind) {
    case FieldKind::rational:
        return "Q";
    case FieldKind::prime:
        return "GF(" + std::to_string(desc.p) + ")";
    case FieldKind::quadratic:
        return (desc.p == 0 ? std::string("Q") : "GF(" + std::to_string(desc.p) + ")") + "(sqrt(" +
               desc.d.get_str() + "))";
    }
    return "?";
}

const FieldData* intern_locked(std::deque<FieldData>& reg, const FieldDescriptor& desc) {
    for (const auto& f : reg) {
        if (f.desc == desc) {
            return &f;
        }
    }
    const FieldData* base = nullptr;
    if (desc.kind == FieldKind::quadratic) {
        base = intern_locked(reg, desc.base());
    }
    FieldData& f = reg.emplace_back();
    f.desc = desc;
    f.p = desc.p;
    f.quadratic = desc.kind == FieldKind::quadratic;
    if (f.quadratic) {
        f.d = desc.d;
    }
    f.name = field_name(desc);
    f.base = base != nullptr ? base : &f;
    return &f;
}

const FieldData* intern(const FieldDescriptor& desc) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    return intern_locked(registry(), desc);
}

} // namespace

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor FieldDescriptor::rational() { return {}; }

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
    FieldDescriptor d;
    d.kind = FieldKind::prime;
    d.p = p;
    return d;
}

FieldDescriptor FieldDescriptor::quadratic(const FieldDescriptor& base, const mpq_class& d) {
    if (base.kind == FieldKind::quadratic) {
        throw Error("quadratic extensions are only supported over Q or GF(p)");
    }
    FieldDescriptor out;
    out.kind = FieldKind::quadratic;
    out.p = base.p;
    out.d = d;
    return out;
}

FieldDescriptor FieldDescriptor::base() const {
    if (kind != FieldKind::quadratic) {
        return *this;
    }
    return p == 0 ? rational() : prime(p);
}

// ---------------------------------------------------------------------------
// Field

bool is_prime(std::int64_t p) {
    if (p < 2) {
        return false;
    }
    for (std::int64_t k = 2; k * k <= p; ++k) {
        if (p % k == 0) {
            return false;
        }
    }
    return true;
}

Field make_field(const FieldDescriptor& spec, Char2 char2) {
    if (spec.kind == FieldKind::prime || (spec.kind == FieldKind::quadratic && spec.p != 0)) {
        if (!is_prime(spec.p)) {
            throw Error("modulus " + std::to_string(spec.p) + " is not prime");
        }
        if (spec.p == 2 && (char2 == Char2::reject || spec.kind == FieldKind::quadratic)) {
            throw Error("characteristic 2 is not supported here");
        }
    }
    if (spec.kind != FieldKind::quadratic) {
        return Field(intern(spec));
    }
    FieldDescriptor canon = spec;
    canon.d = reduce_base(spec.d, spec.p);
    if (auto r = base_sqrt(canon.d, canon.p)) {
        throw Error("d = " + canon.d.get_str() + " is already a square in the base field (" +
                    base_to_string(*r) + "^2 = " + canon.d.get_str() + ")");
    }
    return Field(intern(canon));
}

Field parse_field_name(std::string_view name, Char2 char2) {
    std::string s;
    for (char ch : name) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    if (s == "q") {
        return make_field(FieldDescriptor::rational());
    }
    if (s == "qi") {
        return make_field(FieldDescriptor::quadratic(FieldDescriptor::rational(), -1));
    }
    if (s == "gf9") {
        return make_field(FieldDescriptor::quadratic(FieldDescriptor::prime(3), 2));
    }
    auto parse_int = [&](const std::string& t) -> std::int64_t {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
            throw Error("unknown field '" + std::string(name) + "'");
        }
        return std::stoll(t);
    };
    std::string head = s;
    std::string ext;
    if (auto pos = s.find("(sqrt"); pos != std::string::npos) {
        if (s.back() != ')') {
            throw Error("unknown field '" + std::string(name) + "'");
        }
        head = s.substr(0, pos);
        ext = s.substr(pos + 5, s.size() - pos - 6);
    }
    FieldDescriptor base;
    if (head == "q") {
        base = FieldDescriptor::rational();
    } else if (head.rfind("gf", 0) == 0) {
        base = FieldDescriptor::prime(parse_int(head.substr(2)));
    } else {
        throw Error("unknown field '" + std::string(name) + "'");
    }
    if (ext.empty()) {
        return make_field(base, char2);
    }
    return make_field(FieldDescriptor::quadratic(base, parse_base_literal(ext)), char2);
}

FieldKind Field::kind() const { return data_->desc.kind; }
const FieldDescriptor& Field::descriptor() const { return data_->desc; }
std::int64_t Field::characteristic() const { return data_->p; }
bool Field::is_finite() const { return data_->p != 0; }

std::uint64_t Field::order() const {
    if (!is_finite()) {
        throw InfiniteFieldError(data_->name + " is infinite");
    }
    auto p = static_cast<std::uint64_t>(data_->p);
    return data_->quadratic ? p * p : p;
}

Field Field::base() const { return Field(data_->base); }

Scalar Field::zero() const { return Scalar(data_, 0, 0); }
Scalar Field::one() const { return Scalar(data_, 1, 0); }

Scalar Field::from_integer(std::int64_t v) const {
    return Scalar(data_, reduce_base(mpq_class(static_cast<long>(v)), data_->p), 0);
}

Scalar Field::from_rational(const mpq_class& v) const {
    return Scalar(data_, reduce_base(v, data_->p), 0);
}

Scalar Field::make(const mpq_class& a, const mpq_class& b) const {
    if (!data_->quadratic && sgn(b) != 0) {
        throw Error("sqrt component given outside a quadratic extension");
    }
    return Scalar(data_, reduce_base(a, data_->p), reduce_base(b, data_->p));
}

Scalar Field::root() const {
    if (!data_->quadratic) {
        throw Error(data_->name + " has no adjoined root");
    }
    return Scalar(data_, 0, 1);
}

Scalar Field::parse(std::string_view literal) const {
    std::string s;
    for (char ch : literal) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw Error("empty scalar literal");
    }
    if (!data_->quadratic || s.back() != 'r') {
        return make(parse_base_literal(s), 0);
    }
    s.pop_back();
    if (!s.empty() && s.back() == '*') {
        s.pop_back();
    }
    // s is now "[a]<sign>b" or "b" (b possibly empty or a bare sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    }
    std::string a_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string b_part = split == std::string::npos ? s : s.substr(split);
    mpq_class a = a_part.empty() ? mpq_class(0) : parse_base_literal(a_part);
    mpq_class b;
    if (b_part.empty() || b_part == "+") {
        b = 1;
    } else if (b_part == "-") {
        b = -1;
    } else {
        b = parse_base_literal(b_part);
    }
    return make(a, b);
}

Scalar Field::element(std::uint64_t index) const {
    auto q = order();
    if (index >= q) {
        throw Error("element index out of range");
    }
    auto p = static_cast<std::uint64_t>(data_->p);
    return Scalar(data_, mpq_class(static_cast<unsigned long>(index % p)),
                  mpq_class(static_cast<unsigned long>(index / p)));
}

std::uint64_t Field::index_of(const Scalar& s) const {
    if (s.field() != *this) {
        throw Error("scalar does not belong to " + data_->name);
    }
    auto p = static_cast<std::uint64_t>(data_->p);
    if (p == 0) {
        throw InfiniteFieldError(data_->name + " is infinite");
    }
    return s.a().get_num().get_ui() + p * s.b().get_num().get_ui();
}

std::string Field::name() const { return data_ ? data_->name : "<null>"; }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const detail::FieldData* f, mpq_class a, mpq_class b)
    : f_(f), a_(std::move(a)), b_(std::move(b)) {}

void Scalar::check_same_field(const Scalar& o) const {
    if (f_ != o.f_ || f_ == nullptr) {
        throw Error("scalar field mismatch (" + Field(f_).name() + " vs " + Field(o.f_).name() + ")");
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    a_ = reduce_base(a_ + o.a_, f_->p);
    if (f_->quadratic) {
        b_ = reduce_base(b_ + o.b_, f_->p);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    a_ = reduce_base(a_ - o.a_, f_->p);
    if (f_->quadratic) {
        b_ = reduce_base(b_ - o.b_, f_->p);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (!f_->quadratic) {
        a_ = reduce_base(a_ * o.a_, f_->p);
        return *this;
    }
    mpq_class na = a_ * o.a_ + f_->d * b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = reduce_base(na, f_->p);
    b_ = reduce_base(nb, f_->p);
    return *this;
}

Scalar Scalar::inverse() const {
    if (f_ == nullptr) {
        throw Error("inverse of an unset scalar");
    }
    if (is_zero()) {
        throw Error("division by zero");
    }
    if (!f_->quadratic) {
        return Scalar(f_, base_inverse(a_, f_->p), 0);
    }
    // (a + b r)^-1 = (a - b r) / (a^2 - d b^2)
    mpq_class norm = reduce_base(a_ * a_ - f_->d * b_ * b_, f_->p);
    mpq_class inv = base_inverse(norm, f_->p);
    return Scalar(f_, reduce_base(a_ * inv, f_->p), reduce_base(-b_ * inv, f_->p));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    if (f_ == nullptr) {
        throw Error("negation of an unset scalar");
    }
    return Scalar(f_, reduce_base(-a_, f_->p), reduce_base(-b_, f_->p));
}

std::string Scalar::to_string() const {
    if (f_ == nullptr) {
        return "<unset>";
    }
    if (!f_->quadratic || sgn(b_) == 0) {
        return base_to_string(a_);
    }
    std::string b_text;
    bool negative = sgn(b_) < 0;
    mpq_class mag = negative ? mpq_class(-b_) : b_;
    b_text = mag == 1 ? "r" : base_to_string(mag) + "*r";
    if (sgn(a_) == 0) {
        return (negative ? "-" : "") + b_text;
    }
    return base_to_string(a_) + (negative ? "-" : "+") + b_text;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// Square roots and enumeration

namespace {

// Canonical preference between r and -r.
bool preferred(const Scalar& x, const Scalar& y, std::int64_t p) {
    if (p != 0) {
        if (x.a() != y.a()) {
            return x.a() < y.a();
        }
        return x.b() <= y.b();
    }
    if (sgn(x.a()) != 0) {
        return sgn(x.a()) > 0;
    }
    return sgn(x.b()) >= 0;
}

} // namespace

std::optional<Scalar> sqrt_in_field(const Field& field, const Scalar& a) {
    if (a.field() != field) {
        throw Error("scalar does not belong to " + field.name());
    }
    const auto* f = field.data();
    const std::int64_t p = f->p;
    if (!f->quadratic) {
        auto r = base_sqrt(a.a(), p);
        if (!r) {
            return std::nullopt;
        }
        return field.make(*r);
    }
    // (x + y r)^2 = (x^2 + d y^2) + 2xy r
    std::vector<Scalar> candidates;
    if (sgn(a.b()) == 0) {
        if (auto x = base_sqrt(a.a(), p)) {
            candidates.push_back(field.make(*x, 0));
        }
        mpq_class ratio = reduce_base(a.a() * base_inverse(f->d, p), p);
        if (auto y = base_sqrt(ratio, p)) {
            candidates.push_back(field.make(0, *y));
        }
    } else {
        mpq_class disc = reduce_base(a.a() * a.a() - f->d * a.b() * a.b(), p);
        if (auto s = base_sqrt(disc, p)) {
            mpq_class half = base_inverse(reduce_base(2, p), p);
            for (const mpq_class& sign_s : {*s, mpq_class(-*s)}) {
                mpq_class x2 = reduce_base((a.a() + sign_s) * half, p);
                auto x = base_sqrt(x2, p);
                if (!x || sgn(*x) == 0) {
                    continue;
                }
                mpq_class y = reduce_base(a.b() * half * base_inverse(*x, p), p);
                candidates.push_back(field.make(*x, y));
            }
        }
    }
    for (const Scalar& c : candidates) {
        if (c * c == a) {
            Scalar neg = -c;
            return preferred(c, neg, p) ? c : neg;
        }
    }
    return std::nullopt;
}

std::vector<Scalar> enumerate_field(const Field& field) {
    const std::uint64_t q = field.order();
    std::vector<Scalar> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) {
        out.push_back(field.element(i));
    }
    return out;
}

} // namespace prelie
