#include "quatideal/hurwitz.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace quatideal {

static void check_parity(const std::array<Int, 4>& d) {
    const int p = mpz_odd_p(d[0].get_mpz_t());
    for (int i = 1; i < 4; ++i)
        if (mpz_odd_p(d[i].get_mpz_t()) != p)
            throw std::domain_error("ParityViolation: doubled coordinates not congruent mod 2");
}

HurwitzQuaternion HurwitzQuaternion::from_doubled(Int da, Int db, Int dc, Int dd) {
    HurwitzQuaternion q;
    q.d_ = {std::move(da), std::move(db), std::move(dc), std::move(dd)};
    check_parity(q.d_);
    return q;
}

HurwitzQuaternion HurwitzQuaternion::integers(const Int& t, const Int& x, const Int& y, const Int& z) {
    HurwitzQuaternion q;
    q.d_ = {2 * t, 2 * x, 2 * y, 2 * z};
    return q;
}

bool HurwitzQuaternion::is_zero() const {
    return d_[0] == 0 && d_[1] == 0 && d_[2] == 0 && d_[3] == 0;
}

bool HurwitzQuaternion::is_integral() const {
    return mpz_even_p(d_[0].get_mpz_t());
}

Rat HurwitzQuaternion::real() const {
    Rat r(d_[0], 2);
    r.canonicalize();
    return r;
}

Int HurwitzQuaternion::norm() const {
    Int s = d_[0] * d_[0] + d_[1] * d_[1] + d_[2] * d_[2] + d_[3] * d_[3];
    return s / 4;
}

HurwitzQuaternion HurwitzQuaternion::conjugate() const {
    HurwitzQuaternion q;
    q.d_ = {d_[0], -d_[1], -d_[2], -d_[3]};
    return q;
}

HurwitzQuaternion HurwitzQuaternion::vector_part() const {
    if (!is_integral())
        throw std::domain_error("NotIntegral: vector part of a half-integral quaternion is not Hurwitz");
    HurwitzQuaternion q;
    q.d_ = {0, d_[1], d_[2], d_[3]};
    return q;
}

RationalQuaternion HurwitzQuaternion::inverse() const {
    return RationalQuaternion(*this).inverse();
}

static Int coord(const Int& dv) {
    if (mpz_odd_p(dv.get_mpz_t()))
        throw std::domain_error("NotIntegral: half-integral coordinate");
    return dv / 2;
}
Int HurwitzQuaternion::t() const { return coord(d_[0]); }
Int HurwitzQuaternion::x() const { return coord(d_[1]); }
Int HurwitzQuaternion::y() const { return coord(d_[2]); }
Int HurwitzQuaternion::z() const { return coord(d_[3]); }

HurwitzQuaternion HurwitzQuaternion::operator-() const {
    HurwitzQuaternion q;
    q.d_ = {-d_[0], -d_[1], -d_[2], -d_[3]};
    return q;
}

HurwitzQuaternion HurwitzQuaternion::operator+(const HurwitzQuaternion& r) const {
    return from_doubled(d_[0] + r.d_[0], d_[1] + r.d_[1], d_[2] + r.d_[2], d_[3] + r.d_[3]);
}

HurwitzQuaternion HurwitzQuaternion::operator-(const HurwitzQuaternion& r) const {
    return from_doubled(d_[0] - r.d_[0], d_[1] - r.d_[1], d_[2] - r.d_[2], d_[3] - r.d_[3]);
}

HurwitzQuaternion HurwitzQuaternion::operator*(const HurwitzQuaternion& r) const {
    const Int& a = d_[0]; const Int& b = d_[1]; const Int& c = d_[2]; const Int& d = d_[3];
    const Int& e = r.d_[0]; const Int& f = r.d_[1]; const Int& g = r.d_[2]; const Int& h = r.d_[3];
    // doubled(qr) = (doubled(q) * doubled(r)) / 2, always integral
    Int w0 = a * e - b * f - c * g - d * h;
    Int w1 = a * f + b * e + c * h - d * g;
    Int w2 = a * g + c * e + d * f - b * h;
    Int w3 = a * h + d * e + b * g - c * f;
    return from_doubled(w0 / 2, w1 / 2, w2 / 2, w3 / 2);
}

HurwitzQuaternion HurwitzQuaternion::operator*(const Int& n) const {
    return from_doubled(d_[0] * n, d_[1] * n, d_[2] * n, d_[3] * n);
}

RationalQuaternion::RationalQuaternion(Rat t, Rat x, Rat y, Rat z) {
    c_ = {std::move(t), std::move(x), std::move(y), std::move(z)};
    for (auto& v : c_) v.canonicalize();
}

RationalQuaternion::RationalQuaternion(const HurwitzQuaternion& q) {
    for (int i = 0; i < 4; ++i) {
        c_[i] = Rat(q.doubled()[i], 2);
        c_[i].canonicalize();
    }
}

bool RationalQuaternion::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool RationalQuaternion::is_hurwitz() const {
    int parity = -1;
    for (const auto& v : c_) {
        Rat w = 2 * v;
        if (w.get_den() != 1) return false;
        int p = mpz_odd_p(w.get_num().get_mpz_t());
        if (parity < 0) parity = p;
        else if (parity != p) return false;
    }
    return true;
}

HurwitzQuaternion RationalQuaternion::to_hurwitz() const {
    if (!is_hurwitz())
        throw std::domain_error("NotIntegral: rational quaternion is not a Hurwitz quaternion");
    std::array<Int, 4> d;
    for (int i = 0; i < 4; ++i) d[i] = Rat(2 * c_[i]).get_num();
    return HurwitzQuaternion::from_doubled(d[0], d[1], d[2], d[3]);
}

Rat RationalQuaternion::norm() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

RationalQuaternion RationalQuaternion::conjugate() const {
    return {c_[0], -c_[1], -c_[2], -c_[3]};
}

RationalQuaternion RationalQuaternion::inverse() const {
    Rat n = norm();
    if (n == 0) throw std::domain_error("DivisionByZero: inverse of zero quaternion");
    RationalQuaternion q = conjugate();
    return {q.c_[0] / n, q.c_[1] / n, q.c_[2] / n, q.c_[3] / n};
}

RationalQuaternion RationalQuaternion::operator+(const RationalQuaternion& r) const {
    return {c_[0] + r.c_[0], c_[1] + r.c_[1], c_[2] + r.c_[2], c_[3] + r.c_[3]};
}

RationalQuaternion RationalQuaternion::operator-(const RationalQuaternion& r) const {
    return {c_[0] - r.c_[0], c_[1] - r.c_[1], c_[2] - r.c_[2], c_[3] - r.c_[3]};
}

RationalQuaternion RationalQuaternion::operator*(const RationalQuaternion& r) const {
    const Rat &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3];
    const Rat &e = r.c_[0], &f = r.c_[1], &g = r.c_[2], &h = r.c_[3];
    return {a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g + c * e + d * f - b * h,
            a * h + d * e + b * g - c * f};
}

const std::vector<Unit>& units() {
    static const std::vector<Unit> us = [] {
        std::vector<Unit> v;
        for (int i = 0; i < 4; ++i)
            for (int s : {1, -1}) {
                std::array<Int, 4> d{0, 0, 0, 0};
                d[i] = 2 * s;
                v.push_back(HurwitzQuaternion::from_doubled(d[0], d[1], d[2], d[3]));
            }
        for (int s0 : {1, -1})
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1})
                        v.push_back(HurwitzQuaternion::from_doubled(s0, s1, s2, s3));
        return v;
    }();
    return us;
}

Rat scalar_product(const HurwitzQuaternion& q, const HurwitzQuaternion& r) {
    Rat s(q.db() * r.db() + q.dc() * r.dc() + q.dd() * r.dd(), 4);
    s.canonicalize();
    return s;
}

Rat full_scalar_product(const HurwitzQuaternion& q, const HurwitzQuaternion& r) {
    Rat s(q.da() * r.da() + q.db() * r.db() + q.dc() * r.dc() + q.dd() * r.dd(), 4);
    s.canonicalize();
    return s;
}

RationalQuaternion vector_product(const HurwitzQuaternion& q, const HurwitzQuaternion& r) {
    Rat x(q.dc() * r.dd() - r.dc() * q.dd(), 4);
    Rat y(r.db() * q.dd() - q.db() * r.dd(), 4);
    Rat z(q.db() * r.dc() - r.db() * q.dc(), 4);
    return {Rat(0), x, y, z};
}

Int content(const HurwitzQuaternion& q) {
    if (q.is_zero()) throw std::domain_error("ZeroQuaternion: content of zero undefined");
    Int g = 0;
    for (const auto& v : q.doubled()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    bool all_odd = true;
    for (const auto& v : q.doubled()) {
        Int w = v / g;
        if (mpz_even_p(w.get_mpz_t())) { all_odd = false; break; }
    }
    return all_odd ? g : g / 2;
}

bool is_primitive(const HurwitzQuaternion& q) { return content(q) == 1; }

HurwitzQuaternion divide_exact(const HurwitzQuaternion& q, const Int& n) {
    return HurwitzQuaternion::from_doubled(q.da() / n, q.db() / n, q.dc() / n, q.dd() / n);
}

Int round_half_up(const Rat& x) {
    // floor(x + 1/2) = floor((2 num + den) / (2 den))
    Int num = 2 * x.get_num() + x.get_den();
    Int den = 2 * x.get_den();
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

DivRem div_rem_right(const HurwitzQuaternion& q, const HurwitzQuaternion& d) {
    if (d.is_zero()) throw std::domain_error("DivisionByZero: division by zero quaternion");
    RationalQuaternion exact = RationalQuaternion(q) * d.inverse();
    std::array<Rat, 4> e{exact.t(), exact.x(), exact.y(), exact.z()};
    // nearest integer point and nearest half-integer point
    std::array<Int, 4> c1, c2;
    for (int i = 0; i < 4; ++i) {
        c1[i] = 2 * round_half_up(e[i]);
        Rat shifted = e[i] - Rat(1, 2);
        c2[i] = 2 * round_half_up(shifted) + 1;
    }
    HurwitzQuaternion q1 = HurwitzQuaternion::from_doubled(c1[0], c1[1], c1[2], c1[3]);
    HurwitzQuaternion q2 = HurwitzQuaternion::from_doubled(c2[0], c2[1], c2[2], c2[3]);
    HurwitzQuaternion r1 = q - q1 * d;
    HurwitzQuaternion r2 = q - q2 * d;
    Int n1 = r1.norm(), n2 = r2.norm();
    bool take1 = n1 < n2 || (n1 == n2 && q1.doubled() < q2.doubled());
    DivRem out{take1 ? q1 : q2, take1 ? r1 : r2};
    return out;
}

bool divides_right(const HurwitzQuaternion& d, const HurwitzQuaternion& q) {
    if (d.is_zero()) throw std::domain_error("DivisionByZero: divisibility by zero");
    return (RationalQuaternion(q) * RationalQuaternion(d).inverse()).is_hurwitz();
}

bool divides_left(const HurwitzQuaternion& d, const HurwitzQuaternion& q) {
    if (d.is_zero()) throw std::domain_error("DivisionByZero: divisibility by zero");
    return (RationalQuaternion(d).inverse() * RationalQuaternion(q)).is_hurwitz();
}

static HurwitzQuaternion gcd_right_raw(HurwitzQuaternion q, HurwitzQuaternion r) {
    if (q.is_zero() && r.is_zero())
        throw std::domain_error("ZeroQuaternion: gcd of two zero quaternions");
    while (!r.is_zero()) {
        HurwitzQuaternion s = div_rem_right(q, r).remainder;
        q = r;
        r = s;
    }
    return q;
}

HurwitzQuaternion gcd_right(const HurwitzQuaternion& q, const HurwitzQuaternion& r) {
    return canonical_associate(gcd_right_raw(q, r));
}

HurwitzQuaternion gcd_left(const HurwitzQuaternion& q, const HurwitzQuaternion& r) {
    // left divisors of q, r are conjugates of right divisors of the conjugates
    return canonical_associate_right(gcd_right_raw(q.conjugate(), r.conjugate()).conjugate());
}

static bool sign_normalized(const std::array<Int, 4>& d) {
    for (const auto& v : d) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return true;
}

// smallest |vector part| first, then |real part|, ties by signed values
static bool key_less(const std::array<Int, 4>& a, const std::array<Int, 4>& b) {
    static const int order[4] = {1, 2, 3, 0};
    for (int k : order) {
        int c = mpz_cmpabs(a[k].get_mpz_t(), b[k].get_mpz_t());
        if (c != 0) return c < 0;
    }
    for (int k : order) {
        int c = cmp(a[k], b[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

static HurwitzQuaternion canonical_over(const HurwitzQuaternion& q, bool left_units) {
    if (q.is_zero()) return q;
    const HurwitzQuaternion* best = nullptr;
    std::array<Int, 4> best_d;
    HurwitzQuaternion best_q;
    for (const Unit& u : units()) {
        HurwitzQuaternion w = left_units ? u * q : q * u;
        if (!sign_normalized(w.doubled())) continue;
        if (best == nullptr || key_less(w.doubled(), best_d)) {
            best_q = w;
            best_d = best_q.doubled();
            best = &best_q;
        }
    }
    return best_q;
}

HurwitzQuaternion canonical_associate(const HurwitzQuaternion& q) { return canonical_over(q, true); }
HurwitzQuaternion canonical_associate_right(const HurwitzQuaternion& q) { return canonical_over(q, false); }

HurwitzQuaternion integral_associate(const HurwitzQuaternion& q) {
    if (q.is_integral()) return q;
    for (const Unit& u : units()) {
        HurwitzQuaternion w = u * q;
        if (w.is_integral()) return w;
    }
    throw std::logic_error("no integral associate exists");  // unreachable
}

// ---------- text / json ----------

std::string HurwitzQuaternion::str() const {
    bool half = !is_integral();
    std::array<Int, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = half ? d_[i] : d_[i] / 2;
    static const char* sym[4] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        Int v = c[i];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (i == 0 || v != 1) os << v.get_str();
        os << sym[i];
        first = false;
    }
    if (first) return "0";
    if (half) return "(" + os.str() + ")/2";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HurwitzQuaternion& q) { return os << q.str(); }

std::string HurwitzQuaternion::json() const {
    nlohmann::json j;
    const char* keys[4] = {"da", "db", "dc", "dd"};
    for (int i = 0; i < 4; ++i) {
        if (d_[i].fits_slong_p()) j[keys[i]] = d_[i].get_si();
        else j[keys[i]] = d_[i].get_str();
    }
    return j.dump();
}

HurwitzQuaternion quaternion_from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    const char* keys[4] = {"da", "db", "dc", "dd"};
    std::array<Int, 4> d;
    for (int i = 0; i < 4; ++i) {
        const auto& v = j.at(keys[i]);
        d[i] = v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>());
    }
    return HurwitzQuaternion::from_doubled(d[0], d[1], d[2], d[3]);
}

HurwitzQuaternion parse_quaternion(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::domain_error("ParseError: empty quaternion");

    bool half = false;
    if (s.front() == '(') {
        auto close = s.rfind(')');
        if (close == std::string::npos || s.substr(close) != ")/2")
            throw std::domain_error("ParseError: expected (...)/2 form");
        half = true;
        s = s.substr(1, close - 1);
    }

    std::array<Int, 4> c{0, 0, 0, 0};
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) throw std::domain_error("ParseError: dangling sign");
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits.push_back(s[pos++]);
        int idx = 0;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
            idx = s[pos] == 'i' ? 1 : (s[pos] == 'j' ? 2 : 3);
            ++pos;
        } else if (digits.empty()) {
            throw std::domain_error("ParseError: unexpected character in quaternion");
        }
        Int mag = digits.empty() ? Int(1) : Int(digits);
        c[idx] += sign * mag;
        any = true;
    }
    if (!any) throw std::domain_error("ParseError: empty quaternion");
    if (half) return HurwitzQuaternion::from_doubled(c[0], c[1], c[2], c[3]);
    return HurwitzQuaternion::integers(c[0], c[1], c[2], c[3]);
}

}  // namespace quatideal
