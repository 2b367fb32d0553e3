#include "eulerkind/identities.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/euler.hpp"
#include "eulerkind/families.hpp"
#include "eulerkind/wfamily.hpp"

namespace eulerkind {

IdentityGrid IdentityGrid::defaults(std::size_t order) {
    IdentityGrid g;
    g.lambdas = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 5), Rational(-2)};
    g.ab = {{Rational(1), Rational(0)},
            {Rational(2), Rational(-1)},
            {Rational(1, 2), Rational(1, 3)},
            {Rational(1), Rational(-1)}};
    g.xs = {Rational(0), Rational(1), Rational(2, 7)};
    g.order = order;
    return g;
}

namespace {

using Check = std::function<std::optional<Counterexample>(const IdentityGrid&)>;

struct IdentityCase {
    std::string id;
    std::string statement;
    CheckStatus expected_literal;
    Check literal;
    std::string corrected_statement;
    Check corrected; // engaged only when the stated form fails
    std::string grid_note;
};

std::string describe(std::initializer_list<std::pair<const char*, std::string>> fields) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& [k, v] : fields) {
        if (!first) os << ", ";
        os << k << '=' << v;
        first = false;
    }
    os << ')';
    return os.str();
}

std::optional<Counterexample> mismatch(const Rational& lhs, const Rational& rhs,
                                       std::initializer_list<std::pair<const char*, std::string>> fields) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{describe(fields), lhs.to_string(), rhs.to_string()};
}

Rational neg1(unsigned e) { return Rational(sign_pow(e)); }

// d/dlambda of the y3 closed sum, term by term.
Rational dy3_dlambda(unsigned n, unsigned k, const Rational& lambda, const Rational& a,
                     const Rational& b) {
    Rational acc;
    for (unsigned j = 1; j <= k; ++j) {
        const Rational base = b * Rational(Int(k)) + Rational(Int(j)) * (a - b);
        acc += Rational(binomial(k, j)) * Rational(Int(j)) * int_pow(lambda, j - 1) * int_pow(base, n);
    }
    return acc / Rational(factorial(k));
}

// Exact integral over [0,1] of y3(n,k;lambda;1,x) as a polynomial in x.
Rational y3_integral_01(unsigned n, unsigned k, const Rational& lambda) {
    Rational acc;
    for (unsigned j = 0; j <= k; ++j) {
        Rational inner;
        for (unsigned i = 0; i <= n; ++i)
            inner += Rational(binomial(n, i)) * int_pow(Rational(Int(k)) - Rational(Int(j)), i) *
                     int_pow(Rational(Int(j)), n - i) / Rational(Int(static_cast<long>(i) + 1));
        acc += Rational(binomial(k, j)) * int_pow(lambda, j) * inner;
    }
    return acc / Rational(factorial(k));
}

// Convolution scan shared by the stated and corrected forms of I19. The
// series for each (k, x, lambda) are built once; failures are reduced to the
// lexicographically minimal (n, k, x, lambda) grid point.
std::optional<Counterexample> i19_scan(const IdentityGrid& g, bool negate_second_arg) {
    std::optional<std::tuple<unsigned, unsigned, std::size_t, std::size_t>> best_key;
    std::optional<Counterexample> best;
    for (unsigned k = 0; k <= g.k_max; ++k)
        for (std::size_t xi = 0; xi < g.xs.size(); ++xi)
            for (std::size_t li = 0; li < g.lambdas.size(); ++li) {
                const Rational& x = g.xs[xi];
                const Rational& lam = g.lambdas[li];
                if (lam == Rational(-1)) continue;
                const Rational half_x = x / Rational(2);
                const TruncatedSeries first = euler1_pos_series(k, half_x, lam, g.n_max);
                const TruncatedSeries second = euler1_pos_series(
                    k, negate_second_arg ? -half_x : half_x, lam.reciprocal(), g.n_max);
                const TruncatedSeries wk = k == 0
                                               ? TruncatedSeries::constant(Rational(1), g.n_max)
                                               : w_order_k_series(k, lam, g.n_max);
                const Rational scale = int_pow(Rational(1, 4), k);
                for (unsigned n = 0; n <= g.n_max; ++n) {
                    Rational lhs;
                    for (unsigned m = 0; m <= n; ++m)
                        lhs += Rational(binomial(n, m)) * int_pow(x, n - m) * wk.egf_coeff(m);
                    Rational conv;
                    for (unsigned m = 0; m <= n; ++m)
                        conv += neg1(n - m) * Rational(binomial(n, m)) * first.egf_coeff(m) *
                                second.egf_coeff(n - m);
                    const Rational rhs = scale * conv;
                    if (lhs == rhs) continue;
                    const auto key = std::make_tuple(n, k, xi, li);
                    if (!best_key || key < *best_key) {
                        best_key = key;
                        best = Counterexample{describe({{"n", std::to_string(n)},
                                                        {"k", std::to_string(k)},
                                                        {"x", x.to_string()},
                                                        {"lambda", lam.to_string()}}),
                                              lhs.to_string(), rhs.to_string()};
                    }
                }
            }
    return best;
}

// Frobenius-style kernel ((1-u)/(e^t - u))^k e^{tx}, EGF coefficient n.
Rational frobenius_h(unsigned n, unsigned k, const Rational& x, const Rational& u) {
    const std::size_t order = n;
    TruncatedSeries denom = TruncatedSeries::exp_linear(Rational(1), order) -
                            TruncatedSeries::constant(u, order);
    TruncatedSeries kernel = denom.reciprocal() * (Rational(1) - u);
    return (kernel.pow(k) * TruncatedSeries::exp_linear(x, order)).egf_coeff(n);
}

const std::vector<IdentityCase>& registry() {
    static const std::vector<IdentityCase> cases = [] {
        std::vector<IdentityCase> r;

        r.push_back({"I1",
                     "y3(n,k;lambda;a,b) = sum_{j<=k} sum_{m<=n} C(n,m) a^m b^(n-m) "
                     "y1(m,j;lambda) S2(n-m,k-j)",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         Rational rhs;
                                         for (unsigned j = 0; j <= k; ++j)
                                             for (unsigned m = 0; m <= n; ++m)
                                                 rhs += Rational(binomial(n, m)) * int_pow(a, m) *
                                                        int_pow(b, n - m) * y1(m, j, lam) *
                                                        stirling2(n - m, static_cast<long long>(k) - j);
                                         if (auto c = mismatch(y3(n, k, lam, a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "", nullptr, ""});

        r.push_back({"I2",
                     "y3(n,k;lambda;a,b) = sum_{j<=n} C(n,j) (a-b)^j (bk)^(n-j) y1(j,k;lambda)",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         Rational rhs;
                                         for (unsigned j = 0; j <= n; ++j)
                                             rhs += Rational(binomial(n, j)) * int_pow(a - b, j) *
                                                    int_pow(b * Rational(Int(k)), n - j) * y1(j, k, lam);
                                         if (auto c = mismatch(y3(n, k, lam, a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "", nullptr, ""});

        r.push_back({"I3",
                     "y3(n,k;-1;a,b) = (-1)^k (a-b)^n S_k^n(bk/(a-b))   [array argument bk/(a-b); "
                     "the form with argument b/(a-b) fails for k >= 2, b != 0]",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& [a, b] : g.ab) {
                                     const Rational arg = b * Rational(Int(k)) / (a - b);
                                     const Rational rhs =
                                         neg1(k) * int_pow(a - b, n) * array_poly(n, k, arg, Rational(1));
                                     if (auto c = mismatch(y3(n, k, Rational(-1), a, b), rhs,
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"a", a.to_string()},
                                                            {"b", b.to_string()}}))
                                         return c;
                                 }
                         return std::nullopt;
                     },
                     "", nullptr, "a != b"});

        r.push_back({"I4",
                     "y3(n,k;-lambda^2;a,b) = (-1)^k k! ((a-b)/2)^n sum_{j<=n} C(n,j) "
                     "y1(n,j;lambda) S_k^(n-j)(b/(a-b);lambda)",
                     CheckStatus::Failed,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         Rational conv;
                                         for (unsigned j = 0; j <= n; ++j)
                                             conv += Rational(binomial(n, j)) * y1(n, j, lam) *
                                                     array_poly(n - j, k, b / (a - b), lam);
                                         const Rational rhs = neg1(k) * Rational(factorial(k)) *
                                                              int_pow((a - b) / Rational(2), n) * conv;
                                         if (auto c = mismatch(y3(n, k, -(lam * lam), a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "y3(n,k;-lambda^2;a,b) = (-1)^k k! ((a-b)/2)^n sum_{j<=n} C(n,j) "
                     "y1(j,k;lambda) S_k^(n-j)(2bk/(a-b);lambda)",
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         const Rational arg = Rational(2) * b * Rational(Int(k)) / (a - b);
                                         Rational conv;
                                         for (unsigned j = 0; j <= n; ++j)
                                             conv += Rational(binomial(n, j)) * y1(j, k, lam) *
                                                     array_poly(n - j, k, arg, lam);
                                         const Rational rhs = neg1(k) * Rational(factorial(k)) *
                                                              int_pow((a - b) / Rational(2), n) * conv;
                                         if (auto c = mismatch(y3(n, k, -(lam * lam), a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "a != b"});

        r.push_back({"I5",
                     "even n: y3(n,k;1;1,-1) = (1/k!) sum_{j<=k} C(k,j) 2^(k-j) (2j)! T(n/2,j); "
                     "odd n: y3(n,k;1;1,-1) = 0   [2^(k-j) per the generating-function "
                     "decomposition; the printed factor (-2)^(k-j) fails for k >= 2]",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max + 2; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k) {
                                 const Rational lhs = y3(n, k, Rational(1), Rational(1), Rational(-1));
                                 Rational rhs;
                                 if (n % 2 == 0) {
                                     for (unsigned j = 0; j <= k; ++j)
                                         rhs += Rational(binomial(k, j)) * int_pow(Rational(2), k - j) *
                                                Rational(factorial(2 * j)) * central_T(n / 2, j);
                                     rhs /= Rational(factorial(k));
                                 }
                                 if (auto c = mismatch(lhs, rhs,
                                                       {{"n", std::to_string(n)},
                                                        {"k", std::to_string(k)}}))
                                     return c;
                             }
                         return std::nullopt;
                     },
                     "", nullptr, "n ranges to n_max+2 so both parities reach the table range"});

        r.push_back({"I6",
                     "y3(n,k;lambda;1,-1) = sum_{m<=n} C(n,m) (-1)^(n-m) k^(n-m) 2^m y1(m,k;lambda)",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas) {
                                     Rational rhs;
                                     for (unsigned m = 0; m <= n; ++m)
                                         rhs += Rational(binomial(n, m)) * neg1(n - m) *
                                                int_pow(Rational(Int(k)), n - m) * int_pow(Rational(2), m) *
                                                y1(m, k, lam);
                                     if (auto c = mismatch(y3(n, k, lam, Rational(1), Rational(-1)), rhs,
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"lambda", lam.to_string()}}))
                                         return c;
                                 }
                         return std::nullopt;
                     },
                     "", nullptr, ""});

        r.push_back({"I7",
                     "y3(n,k;lambda;1,x) = sum_{m<=n} k^m B_m^n(x) y1(n-m,k;lambda)",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& x : g.xs) {
                                         Rational rhs;
                                         for (unsigned m = 0; m <= n; ++m)
                                             rhs += int_pow(Rational(Int(k)), m) * bernstein(m, n, x) *
                                                    y1(n - m, k, lam);
                                         if (auto c = mismatch(y3(n, k, lam, Rational(1), x), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"x", x.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "", nullptr, ""});

        r.push_back({"I8",
                     "int_0^1 y3(n,k;lambda;1,x) dx = (1/(n+1)) sum_{m<=n} k^m y1(n-m,k;lambda)",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas) {
                                     Rational rhs;
                                     for (unsigned m = 0; m <= n; ++m)
                                         rhs += int_pow(Rational(Int(k)), m) * y1(n - m, k, lam);
                                     rhs /= Rational(Int(static_cast<long>(n) + 1));
                                     if (auto c = mismatch(y3_integral_01(n, k, lam), rhs,
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"lambda", lam.to_string()}}))
                                         return c;
                                 }
                         return std::nullopt;
                     },
                     "", nullptr, "left side integrated exactly, monomial by monomial"});

        r.push_back({"I9",
                     "y3(n+1,k;lambda;a,b) = bk y3(n,k;lambda;a,b) + (a-b) y3(n,k-1;lambda;a,b)",
                     CheckStatus::Failed,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 1; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         const Rational rhs = b * Rational(Int(k)) * y3(n, k, lam, a, b) +
                                                              (a - b) * y3(n, k - 1, lam, a, b);
                                         if (auto c = mismatch(y3(n + 1, k, lam, a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "y3(n+1,k;lambda;a,b) = bk y3(n,k;lambda;a,b) + lambda (a-b) sum_{m<=n} "
                     "C(n,m) a^(n-m) y3(m,k-1;lambda;a,b)",
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 1; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         Rational conv;
                                         for (unsigned m = 0; m <= n; ++m)
                                             conv += Rational(binomial(n, m)) * int_pow(a, n - m) *
                                                     y3(m, k - 1, lam, a, b);
                                         const Rational rhs =
                                             b * Rational(Int(k)) * y3(n, k, lam, a, b) + lam * (a - b) * conv;
                                         if (auto c = mismatch(y3(n + 1, k, lam, a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "k >= 1"});

        r.push_back({"I10",
                     "d/dlambda y3(n,k;lambda;a,b) = sum_{m<=n} C(n,m) (a-b)^(n-m) y3(m,k-1;lambda;a,b)",
                     CheckStatus::Failed,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 1; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         Rational rhs;
                                         for (unsigned m = 0; m <= n; ++m)
                                             rhs += Rational(binomial(n, m)) * int_pow(a - b, n - m) *
                                                    y3(m, k - 1, lam, a, b);
                                         if (auto c = mismatch(dy3_dlambda(n, k, lam, a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "d/dlambda y3(n,k;lambda;a,b) = sum_{m<=n} C(n,m) a^(n-m) y3(m,k-1;lambda;a,b)",
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 1; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& [a, b] : g.ab) {
                                         Rational rhs;
                                         for (unsigned m = 0; m <= n; ++m)
                                             rhs += Rational(binomial(n, m)) * int_pow(a, n - m) *
                                                    y3(m, k - 1, lam, a, b);
                                         if (auto c = mismatch(dy3_dlambda(n, k, lam, a, b), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"a", a.to_string()},
                                                                {"b", b.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "k >= 1; left side differentiated term by term"});

        r.push_back({"I11",
                     "S2(n,k) = (-1)^(k+n) y3(n,k;-1;-1,0)",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k) {
                                 const Rational rhs =
                                     neg1(k + n) * y3(n, k, Rational(-1), Rational(-1), Rational(0));
                                 if (auto c = mismatch(stirling2(n, k), rhs,
                                                       {{"n", std::to_string(n)},
                                                        {"k", std::to_string(k)}}))
                                     return c;
                             }
                         return std::nullopt;
                     },
                     "", nullptr, ""});

        r.push_back({"I12",
                     "y3(n,k;lambda;1,0) = y1(n,k;lambda)   [the a=1, b=0 substitution lands on "
                     "the y1 generating function; the y2 bridge is "
                     "y2(n,k;lambda) = lambda^(-k) y3(n,2k;lambda;1/2,-1/2)]",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas) {
                                     if (auto c = mismatch(y3(n, k, lam, Rational(1), Rational(0)),
                                                           y1(n, k, lam),
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"lambda", lam.to_string()}}))
                                         return c;
                                     const Rational bridge = int_pow(lam.reciprocal(), k) *
                                                             y3(n, 2 * k, lam, Rational(1, 2), Rational(-1, 2));
                                     if (auto c = mismatch(y2(n, k, lam), bridge,
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"lambda", lam.to_string()},
                                                            {"form", "y2-bridge"}}))
                                         return c;
                                 }
                         return std::nullopt;
                     },
                     "", nullptr, ""});

        r.push_back({"I13",
                     "E*_n^(-k)(lambda) from k! 2^(n-k) lambda^(-k) y3(n,k;lambda^2;1/2,-1/2) "
                     "equals the EGF coefficient of ((lambda e^t + lambda^(-1) e^(-t))/2)^k",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned k = 0; k <= g.k_max + 1; ++k)
                             for (const auto& lam : g.lambdas) {
                                 const TruncatedSeries s = euler2_neg_series(k, lam, g.order);
                                 for (unsigned n = 0; n <= g.order; ++n)
                                     if (auto c = mismatch(euler2_neg_num(n, k, lam), s.egf_coeff(n),
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"lambda", lam.to_string()}}))
                                         return c;
                             }
                         return std::nullopt;
                     },
                     "", nullptr, "n ranges over the full series order"});

        r.push_back({"I14",
                     "W_n(lambda) = (lambda/4) E_n^(2)(1;lambda) and W_n(lambda) = (lambda/4) "
                     "sum_{m<=n} C(n,m) E_m(1;lambda) E_(n-m)(lambda)   [first-kind polynomials: "
                     "lambda e^t + lambda^(-1) e^(-t) + 2 factors as lambda^(-1) e^(-t) "
                     "(lambda e^t + 1)^2]",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (const auto& lam : g.lambdas) {
                                 if (lam == Rational(-1)) continue;
                                 const Rational w = w_n(n, lam);
                                 const Rational quarter = lam / Rational(4);
                                 if (auto c = mismatch(w, quarter * euler1_pos_poly(n, 2, Rational(1), lam),
                                                       {{"n", std::to_string(n)},
                                                        {"lambda", lam.to_string()},
                                                        {"form", "order-2"}}))
                                     return c;
                                 Rational conv;
                                 for (unsigned m = 0; m <= n; ++m)
                                     conv += Rational(binomial(n, m)) *
                                             euler1_pos_poly(m, 1, Rational(1), lam) *
                                             euler1_pos_poly(n - m, 1, Rational(0), lam);
                                 if (auto c = mismatch(w, quarter * conv,
                                                       {{"n", std::to_string(n)},
                                                        {"lambda", lam.to_string()},
                                                        {"form", "convolution"}}))
                                     return c;
                             }
                         return std::nullopt;
                     },
                     "", nullptr, "lambda != 0, -1"});

        r.push_back({"I15",
                     "sum_{m<=n} C(n,m) W_(n-m)^(k)(lambda) y2(m,k;lambda) = 0 for n >= 1 "
                     "(and = 1/(2k)! at n = 0)",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         std::optional<std::tuple<unsigned, unsigned, std::size_t>> best_key;
                         std::optional<Counterexample> best;
                         for (unsigned k = 0; k <= g.k_max; ++k)
                             for (std::size_t li = 0; li < g.lambdas.size(); ++li) {
                                 const Rational& lam = g.lambdas[li];
                                 if (lam == Rational(-1)) continue;
                                 const TruncatedSeries wk =
                                     k == 0 ? TruncatedSeries::constant(Rational(1), g.n_max)
                                            : w_order_k_series(k, lam, g.n_max);
                                 std::vector<Rational> y2row(g.n_max + 1);
                                 for (unsigned m = 0; m <= g.n_max; ++m) y2row[m] = y2(m, k, lam);
                                 for (unsigned n = 0; n <= g.n_max; ++n) {
                                     Rational acc;
                                     for (unsigned m = 0; m <= n; ++m)
                                         acc += Rational(binomial(n, m)) * wk.egf_coeff(n - m) * y2row[m];
                                     const Rational expect =
                                         n == 0 ? Rational(factorial(2 * k)).reciprocal() : Rational(0);
                                     if (acc == expect) continue;
                                     const auto key = std::make_tuple(n, k, li);
                                     if (!best_key || key < *best_key) {
                                         best_key = key;
                                         best = Counterexample{describe({{"n", std::to_string(n)},
                                                                         {"k", std::to_string(k)},
                                                                         {"lambda", lam.to_string()}}),
                                                               acc.to_string(), expect.to_string()};
                                     }
                                 }
                             }
                         return best;
                     },
                     "", nullptr, "lambda != 0, -1"});

        r.push_back({"I16",
                     "E*_n^(-k)(lambda) = sum_{m<=k} C(k,m) 2^(-m) W_n^(-m)(lambda)",
                     CheckStatus::Failed,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas) {
                                     Rational rhs;
                                     for (unsigned m = 0; m <= k; ++m)
                                         rhs += Rational(binomial(k, m)) * int_pow(Rational(1, 2), m) *
                                                w_neg_k(n, m, lam);
                                     if (auto c = mismatch(euler2_neg_num(n, k, lam), rhs,
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"lambda", lam.to_string()}}))
                                         return c;
                                 }
                         return std::nullopt;
                     },
                     "E*_n^(-k)(lambda) = sum_{m<=k} C(k,m) (-1)^(k-m) 2^(-m) W_n^(-m)(lambda)",
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas) {
                                     Rational rhs;
                                     for (unsigned m = 0; m <= k; ++m)
                                         rhs += Rational(binomial(k, m)) * neg1(k - m) *
                                                int_pow(Rational(1, 2), m) * w_neg_k(n, m, lam);
                                     if (auto c = mismatch(euler2_neg_num(n, k, lam), rhs,
                                                           {{"n", std::to_string(n)},
                                                            {"k", std::to_string(k)},
                                                            {"lambda", lam.to_string()}}))
                                         return c;
                                 }
                         return std::nullopt;
                     },
                     ""});

        r.push_back({"I17",
                     "E*_n^(k)(x;lambda) = 2^n lambda^(2-k)/(lambda^2+1) H_n((x+k)/2;-lambda^(-2)) "
                     "with H from (1-u) e^{tx}/(e^t-u)",
                     CheckStatus::Failed,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& x : g.xs) {
                                         const Rational u = -(lam * lam).reciprocal();
                                         const Rational arg = (x + Rational(Int(k))) / Rational(2);
                                         const Rational rhs =
                                             int_pow(Rational(2), n) *
                                             pow_signed(lam, 2 - static_cast<long long>(k)) /
                                             (lam * lam + Rational(1)) * frobenius_h(n, 1, arg, u);
                                         if (auto c = mismatch(euler2_pos_poly(n, k, x, lam), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"x", x.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     "E*_n^(k)(x;lambda) = (2 lambda/(lambda^2+1))^k 2^n "
                     "H_n^(k)((x+k)/2;-lambda^(-2)) with H^(k) from ((1-u)/(e^t-u))^k e^{tx}",
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         for (unsigned n = 0; n <= g.n_max; ++n)
                             for (unsigned k = 0; k <= g.k_max; ++k)
                                 for (const auto& lam : g.lambdas)
                                     for (const auto& x : g.xs) {
                                         const Rational u = -(lam * lam).reciprocal();
                                         const Rational arg = (x + Rational(Int(k))) / Rational(2);
                                         const Rational pre = int_pow(
                                             Rational(2) * lam / (lam * lam + Rational(1)), k);
                                         const Rational rhs =
                                             pre * int_pow(Rational(2), n) * frobenius_h(n, k, arg, u);
                                         if (auto c = mismatch(euler2_pos_poly(n, k, x, lam), rhs,
                                                               {{"n", std::to_string(n)},
                                                                {"k", std::to_string(k)},
                                                                {"lambda", lam.to_string()},
                                                                {"x", x.to_string()}}))
                                             return c;
                                     }
                         return std::nullopt;
                     },
                     ""});

        r.push_back({"I18",
                     "B(n,k) = d^n/dt^n (e^t+1)^k at t = 0",
                     CheckStatus::Verified,
                     [](const IdentityGrid& g) -> std::optional<Counterexample> {
                         const unsigned k_top = std::max(g.k_max, 10u);
                         const unsigned n_top = std::max(g.n_max, 10u);
                         for (unsigned k = 0; k <= k_top; ++k) {
                             const TruncatedSeries s =
                                 (TruncatedSeries::exp_linear(Rational(1), n_top) +
                                  TruncatedSeries::constant(Rational(1), n_top))
                                     .pow(k);
                             // the n-th derivative at 0 is exactly n! times the
                             // ordinary coefficient
                             for (unsigned n = 0; n <= n_top; ++n)
                                 if (auto c = mismatch(big_B(n, k), s.egf_coeff(n),
                                                       {{"n", std::to_string(n)},
                                                        {"k", std::to_string(k)}}))
                                     return c;
                         }
                         return std::nullopt;
                     },
                     "", nullptr, "n, k up to at least 10"});

        r.push_back({"I19",
                     "W_n^(k)(x;lambda) = 4^(-k) sum_{m<=n} (-1)^(n-m) C(n,m) E_m^(k)(x/2;lambda) "
                     "E_(n-m)^(k)(x/2;lambda^(-1))",
                     CheckStatus::Failed,
                     [](const IdentityGrid& g) { return i19_scan(g, false); },
                     "W_n^(k)(x;lambda) = 4^(-k) sum_{m<=n} (-1)^(n-m) C(n,m) E_m^(k)(x/2;lambda) "
                     "E_(n-m)^(k)(-x/2;lambda^(-1))",
                     [](const IdentityGrid& g) { return i19_scan(g, true); },
                     "lambda != 0, -1; the two sides of the stated form coincide at x = 0"});

        return r;
    }();
    return cases;
}

std::string summarize_grid(const IdentityGrid& g, const std::string& note) {
    std::ostringstream os;
    os << "n<=" << g.n_max << ", k<=" << g.k_max << ", lambdas=" << g.lambdas.size()
       << ", ab-pairs=" << g.ab.size() << ", xs=" << g.xs.size() << ", order=" << g.order;
    if (!note.empty()) os << "; " << note;
    return os.str();
}

} // namespace

std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    ids.reserve(registry().size());
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
}

IdentityReport verify_identity(const std::string& id, const IdentityGrid& grid) {
    for (const auto& c : registry()) {
        if (c.id != id) continue;
        IdentityReport rep;
        rep.id = c.id;
        rep.statement = c.statement;
        rep.expected_literal = c.expected_literal;
        rep.corrected_statement = c.corrected_statement;
        rep.grid_summary = summarize_grid(grid, c.grid_note);
        rep.literal_counterexample = c.literal(grid);
        rep.literal = rep.literal_counterexample ? CheckStatus::Failed : CheckStatus::Verified;
        if (rep.literal == CheckStatus::Failed && c.corrected) {
            rep.corrected_counterexample = c.corrected(grid);
            rep.corrected =
                rep.corrected_counterexample ? CheckStatus::Failed : CheckStatus::Verified;
        }
        return rep;
    }
    throw UnknownIdentityError(id);
}

std::vector<IdentityReport> verify_all(const IdentityGrid& grid) {
    std::vector<IdentityReport> reports;
    reports.reserve(registry().size());
    for (const auto& c : registry()) reports.push_back(verify_identity(c.id, grid));
    return reports;
}

} // namespace eulerkind
