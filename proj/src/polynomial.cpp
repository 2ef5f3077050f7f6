#include "hyperpend/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperpend {

namespace {

double ipow(double x, unsigned n)
{
    double r = 1.0;
    while (n) {
        if (n & 1u) r *= x;
        x *= x;
        n >>= 1u;
    }
    return r;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars)
{
    if (nvars > kMaxVars) throw std::invalid_argument("Polynomial: too many variables");
}

Polynomial Polynomial::constant(std::size_t nvars, double c)
{
    Polynomial p(nvars);
    p.add_term(Exponents{}, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(nvars);
    Exponents e{};
    e[index] = 1;
    p.add_term(e, 1.0);
    return p;
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

double Polynomial::operator()(std::span<const double> point) const
{
    if (point.size() < nvars_) throw std::invalid_argument("Polynomial: point has too few coordinates");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= ipow(point[i], e[i]);
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    if (var >= nvars_) throw std::out_of_range("Polynomial::derivative: variable out of range");
    Polynomial d(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        d.add_term(f, c * e[var]);
    }
    return d;
}

Polynomial Polynomial::compose(std::span<const Polynomial> subs) const
{
    if (subs.size() != nvars_) throw std::invalid_argument("Polynomial::compose: wrong number of substitutes");
    const std::size_t m = subs.empty() ? 0 : subs[0].num_vars();
    for (const auto& s : subs)
        if (s.num_vars() != m) throw std::invalid_argument("Polynomial::compose: substitutes disagree on variable count");

    // Cache powers of each substitute as they are needed.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(m, 1.0));
        while (cache.size() <= k) cache.push_back(cache.back() * subs[i]);
        return cache[k];
    };

    Polynomial result(m);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(m, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= power_of(i, e[i]);
        result += t;
    }
    return result;
}

Polynomial Polynomial::pow(unsigned n) const
{
    Polynomial r = Polynomial::constant(nvars_, 1.0);
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
}

void Polynomial::add_term(const Exponents& e, double c)
{
    if (c == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
}

void Polynomial::require_same_vars(const Polynomial& other) const
{
    if (other.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    require_same_vars(other);
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e{};
            for (std::size_t i = 0; i < kMaxVars; ++i) {
                const unsigned s = unsigned(ea[i]) + eb[i];
                if (s > 255) throw std::overflow_error("Polynomial: exponent overflow");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    terms_ = std::move(r.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(double s)
{
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator+(Polynomial a, double c)
{
    a.add_term(Polynomial::Exponents{}, c);
    return a;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string(std::span<const std::string> names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Graded lexicographic order: highest degree first, then x1 before x2 ...
    std::vector<std::pair<Exponents, double>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (auto k : a.first) da += k;
        for (auto k : b.first) db += k;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [e, c] : sorted) {
        double mag = std::abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        for (auto k : e) has_var = has_var || k;
        if (!has_var || mag != 1.0) {
            os << mag;
            if (has_var) os << "*";
        }
        bool need_star = false;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            if (i < names.size())
                os << names[i];
            else
                os << "v" << (i + 1);
            if (e[i] > 1) os << "^" << int(e[i]);
            need_star = true;
        }
    }
    return os.str();
}

Polynomial phase_coordinate(std::size_t index) { return Polynomial::variable(kPhaseDim, index); }

Polynomial reduced_coordinate(std::size_t index) { return Polynomial::variable(kReducedDim, index); }

}  // namespace hyperpend
