#include "eulerkind/errata.hpp"

#include <functional>
#include <sstream>

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/euler.hpp"
#include "eulerkind/families.hpp"
#include "eulerkind/rooks.hpp"
#include "eulerkind/wfamily.hpp"

namespace eulerkind {

namespace {

Rational rat(const char* s) { return Rational::from_string(s); }

// Stated row 0 of the first-kind order -k table, k = 0..7 (the remaining
// columns are elided in the source of these values).
const std::vector<const char*> kFirstKindRow0 = {"0",     "1/2",   "3/4",   "7/8",
                                                 "15/16", "33/32", "33/64", "81/64"};

// Stated row labeled 9 of the first-kind table, k = 1..9.
const std::vector<const char*> kFirstKindRow9 = {
    "1/2",       "513/2",     "15531/2", "161365/2", "1951155/4",
    "8499057/4", "7418789",   "22071123", "232549335/4"};

// Stated row 0 of the second-kind order -k table, k = 0..9.
const std::vector<const char*> kSecondKindRow0 = {"1", "0", "1", "0", "1",
                                                  "0", "1", "0", "1", "0"};

using CellFn = std::function<Rational(const Rational&)>;

// Stated cells of the W order -k table (n = 0..4 down, k = 0..3 across),
// transcribed verbatim; "lambda/15" appears exactly as printed.
const std::vector<std::vector<CellFn>>& stated_w_neg_cells() {
    static const std::vector<std::vector<CellFn>> cells = [] {
        auto P = [](const Rational& v, unsigned e) { return int_pow(v, e); };
        std::vector<std::vector<CellFn>> t;
        t.push_back(std::vector<CellFn>{
            [](const Rational&) { return Rational(1); },
            [](const Rational& L) { return L + L.reciprocal(); },
            [P](const Rational& L) {
                return P(L, 2) + Rational(4) * L + (Rational(4) * L + Rational(1)) / P(L, 2);
            },
            [P](const Rational& L) {
                return P(L, 3) + Rational(6) * P(L, 2) + Rational(15) * L + L / Rational(15) +
                       (Rational(6) * L + Rational(1)) / P(L, 3);
            },
        });
        t.push_back(std::vector<CellFn>{
            [](const Rational&) { return Rational(0); },
            [](const Rational& L) { return L - L.reciprocal(); },
            [P](const Rational& L) {
                return Rational(2) * P(L, 2) + Rational(4) * L -
                       (Rational(4) * L + Rational(2)) / P(L, 2);
            },
            [P](const Rational& L) {
                return Rational(3) * P(L, 3) + Rational(12) * P(L, 2) + Rational(15) * L -
                       L / Rational(15) - (Rational(12) * L + Rational(3)) / P(L, 3);
            },
        });
        t.push_back(std::vector<CellFn>{
            [](const Rational&) { return Rational(0); },
            [](const Rational& L) { return L + L.reciprocal(); },
            [P](const Rational& L) {
                return Rational(4) * P(L, 2) + Rational(4) * L +
                       (Rational(4) * L + Rational(4)) / P(L, 2);
            },
            [P](const Rational& L) {
                return Rational(9) * P(L, 3) + Rational(24) * P(L, 2) + Rational(15) * L +
                       L / Rational(15) + Rational(24) / P(L, 2) + Rational(9) / P(L, 3);
            },
        });
        t.push_back(std::vector<CellFn>{
            [](const Rational&) { return Rational(0); },
            [](const Rational& L) { return L - L.reciprocal(); },
            [P](const Rational& L) {
                return Rational(4) * P(L, 2) + Rational(2) * L -
                       (Rational(2) * L + Rational(4)) / P(L, 2);
            },
            [P](const Rational& L) {
                return Rational(27) * P(L, 3) + Rational(48) * P(L, 2) + Rational(15) * L -
                       Rational(15) / L - Rational(48) / P(L, 2) - Rational(27) / P(L, 3);
            },
        });
        t.push_back(std::vector<CellFn>{
            [](const Rational&) { return Rational(0); },
            [](const Rational& L) { return L + L.reciprocal(); },
            [P](const Rational& L) {
                return Rational(16) * P(L, 2) + Rational(8) * L +
                       (Rational(4) * L + Rational(16)) / P(L, 2);
            },
            [P](const Rational& L) {
                return Rational(81) * P(L, 3) + Rational(96) * P(L, 2) + Rational(15) * L +
                       L / Rational(15) + Rational(96) / P(L, 2) + Rational(81) / P(L, 3);
            },
        });
        return t;
    }();
    return cells;
}

const std::vector<Rational>& w_cell_sample_lambdas() {
    static const std::vector<Rational> pts = {rat("1"),  rat("2"),  rat("1/2"), rat("3/5"),
                                              rat("-2"), rat("7"),  rat("-3"),  rat("5")};
    return pts;
}

std::string status_word(CheckStatus s) { return s == CheckStatus::Verified ? "verified" : "FAILED"; }

} // namespace

std::vector<ErratumEntry> collect_errata(const IdentityGrid& grid) {
    return collect_errata(grid, verify_all(grid));
}

std::vector<ErratumEntry> collect_errata(const IdentityGrid& grid,
                                         const std::vector<IdentityReport>& reports) {
    (void)grid;
    std::vector<ErratumEntry> out;

    // First-kind table, row 0: the stated cells do not follow 0^0 = 1.
    {
        std::ostringstream claimed, computed;
        bool any = false;
        for (std::size_t k = 0; k < kFirstKindRow0.size(); ++k) {
            const Rational c = euler1_neg(0, static_cast<unsigned>(k), Rational(1));
            if (c != rat(kFirstKindRow0[k])) any = true;
            claimed << (k ? ", " : "") << kFirstKindRow0[k];
            computed << (k ? ", " : "") << c.to_string();
        }
        if (any)
            out.push_back({"E1neg.row0",
                           "first-kind order -k table, row n=0 (k = 0..7)",
                           claimed.str(),
                           computed.str() + "  (0^0 = 1 makes every entry 1 for k >= 0; the stated "
                                            "cells resemble 2^-k(2^k-1) and are internally irregular)"});
    }

    // First-kind table, row labeled 9: matches n = 10, not n = 9.
    {
        bool matches_10 = true, matches_9 = true;
        for (std::size_t i = 0; i < kFirstKindRow9.size(); ++i) {
            const unsigned k = static_cast<unsigned>(i) + 1;
            const Rational stated = rat(kFirstKindRow9[i]);
            if (stated != euler1_neg(10, k, Rational(1))) matches_10 = false;
            if (stated != euler1_neg(9, k, Rational(1))) matches_9 = false;
        }
        if (matches_10 && !matches_9)
            out.push_back({"E1neg.row9",
                           "first-kind order -k table, row labeled n=9",
                           "row printed as n=9 (k=2 cell 513/2, k=3 cell 15531/2, ...)",
                           "cells equal the n=10 row; the true n=9 row starts 1/2, 257/2, ... "
                           "(k=2 computed at n=9 is " + euler1_neg(9, 2, Rational(1)).to_string() + ")"});
    }

    // Second-kind table, row 0: stated alternating 1,0,1,0,... vs computed all 1s.
    {
        std::ostringstream claimed, computed;
        bool any = false;
        for (std::size_t k = 0; k < kSecondKindRow0.size(); ++k) {
            const Rational c = euler2_neg_num(0, static_cast<unsigned>(k), Rational(1));
            if (c != rat(kSecondKindRow0[k])) any = true;
            claimed << (k ? ", " : "") << kSecondKindRow0[k];
            computed << (k ? ", " : "") << c.to_string();
        }
        if (any)
            out.push_back({"E2neg.row0",
                           "second-kind order -k table, row n=0 (k = 0..9)",
                           claimed.str(), computed.str()});
    }

    // W order -k table: evaluate every stated cell against (2k)! y2(n,k;lambda)
    // at rational sample points; a Laurent-polynomial disagreement survives
    // sampling at 8 points.
    {
        const auto& cells = stated_w_neg_cells();
        for (unsigned n = 0; n < cells.size(); ++n)
            for (unsigned k = 0; k < cells[n].size(); ++k) {
                for (const auto& L : w_cell_sample_lambdas()) {
                    const Rational stated = cells[n][k](L);
                    const Rational computed = w_neg_k(n, k, L);
                    if (stated != computed) {
                        std::ostringstream subject, claimed, comp;
                        subject << "W order -k table, cell (n=" << n << ", k=" << k << ")";
                        claimed << "stated cell evaluates to " << stated.to_string()
                                << " at lambda=" << L.to_string();
                        comp << "(2k)! y2(n,k;lambda) = " << computed.to_string()
                             << " at lambda=" << L.to_string();
                        out.push_back({"Wnegk.cell(" + std::to_string(n) + "," + std::to_string(k) + ")",
                                       subject.str(), claimed.str(), comp.str()});
                        break;
                    }
                }
            }
    }

    // Stated closed forms for W_2 and W_3: both disagree with the recurrence
    // and the series reciprocal away from lambda = 1.
    {
        struct ClosedForm {
            unsigned n;
            const char* stated_text;
            CellFn stated;
            const char* corrected_text;
        };
        const std::vector<ClosedForm> forms = {
            {2, "W_2(lambda) = -2 lambda^2/(lambda+1)^4",
             [](const Rational& L) { return Rational(-2) * L * L / int_pow(L + Rational(1), 4); },
             "W_2(lambda) = lambda (lambda^2 - 4 lambda + 1)/(lambda+1)^4"},
            {3, "W_3(lambda) = 4 lambda (1-lambda)(lambda^2 - lambda + 1)/(lambda+1)^5",
             [](const Rational& L) {
                 return Rational(4) * L * (Rational(1) - L) * (L * L - L + Rational(1)) /
                        int_pow(L + Rational(1), 5);
             },
             "W_3(lambda) = lambda (1-lambda)(lambda^2 - 10 lambda + 1)/(lambda+1)^5"},
        };
        for (const auto& f : forms) {
            for (const auto& L : w_cell_sample_lambdas()) {
                if (L == Rational(-1)) continue;
                const Rational stated = f.stated(L);
                const Rational computed = w_n(f.n, L);
                if (stated != computed) {
                    std::ostringstream comp;
                    comp << "recurrence and series reciprocal give " << computed.to_string()
                         << " at lambda=" << L.to_string() << " (stated form evaluates to "
                         << stated.to_string() << "); corrected form " << f.corrected_text
                         << " holds at all sample points";
                    out.push_back({"W.closed" + std::to_string(f.n),
                                   "closed form for W_" + std::to_string(f.n), f.stated_text,
                                   comp.str()});
                    break;
                }
            }
        }
    }

    // The conjectured coefficient shape for B(d;k): the fit is exact with
    // integer coefficients, but they are not all positive.
    {
        const auto f3 = conjecture_fit(3, 30);
        const auto f4 = conjecture_fit(4, 30);
        if (f3.formula_verified && f4.formula_verified && (!f3.all_positive || !f4.all_positive)) {
            std::ostringstream comp;
            comp << "coefficients are integers and the fit verifies for k <= 30, but d=3 gives "
                    "x2=" << f3.coefficients[1].to_string() << " and d=4 gives x3="
                 << f4.coefficients[2].to_string() << ", so they are not all positive";
            out.push_back({"B.conjecture", "conjectured coefficient shape for B(d;k)",
                           "x_1, ..., x_(d-1) are positive integers", comp.str()});
        }
    }

    // Identity forms whose stated version fails on the default grid.
    for (const auto& rep : reports) {
        if (rep.literal != CheckStatus::Failed) continue;
        std::ostringstream claimed, computed;
        claimed << rep.statement;
        computed << "fails at " << rep.literal_counterexample->point << ": lhs "
                 << rep.literal_counterexample->lhs << ", rhs " << rep.literal_counterexample->rhs;
        if (rep.corrected)
            computed << "; corrected form " << status_word(*rep.corrected) << ": "
                     << rep.corrected_statement;
        out.push_back({rep.id, "identity " + rep.id, claimed.str(), computed.str()});
    }

    // Notation notes: statements the suite repaired before verifying.
    out.push_back({"note.I3", "identity I3 array argument",
                   "stated array argument b/(a-b)",
                   "generating-function argument is bk/(a-b); with b/(a-b) the relation fails for "
                   "k >= 2, b != 0 (e.g. n=3, k=2, a=2, b=1: 9 vs 6). I3 is verified with bk/(a-b)."});
    out.push_back({"note.I5", "identity I5 binomial weight",
                   "stated weight (-2)^(k-j)",
                   "the decomposition e^t+e^-t = (e^t+e^-t-2)+2 forces +2^(k-j); with -2 the "
                   "relation fails for k >= 2 (e.g. n=2, k=2: 4 vs -4). I5 is verified with 2^(k-j)."});
    out.push_back({"note.I12", "identity I12 family label",
                   "stated as y2(n,k;lambda) = y3(n,k;lambda;1,0)",
                   "the a=1, b=0 substitution gives the y1 generating function, so the identity "
                   "holds with y1 (y2(1,1;1) = 0 but y3(1,1;1;1,0) = 1); the y2 bridge is "
                   "y2(n,k;lambda) = lambda^-k y3(n,2k;lambda;1/2,-1/2), also verified."});
    out.push_back({"note.I14", "identity I14 Euler kind",
                   "stated with second-kind polynomials E*^(2)(1;lambda)",
                   "fails even at lambda=1 (n=1: 1/4 vs W_1(1)=0); the factorization "
                   "lambda e^t + lambda^-1 e^-t + 2 = lambda^-1 e^-t (lambda e^t+1)^2 forces the "
                   "first kind. I14 is verified with E^(2)(1;lambda)."});
    out.push_back({"note.I15", "identity I15 at n = 0",
                   "constant term sometimes taken as 1",
                   "F_y2 x F_w^(k) = 1/(2k)!, so the n=0 convolution equals 1/(2k)!, which is 1 "
                   "only for k=0. The n >= 1 statement is as stated."});
    out.push_back({"note.y3k0", "y3(n,0;lambda;a,b) at n = 0",
                   "stated special value y3(n,0;lambda;a,b) = 0",
                   "the order-0 generating function is the constant series 1, so y3(0,0;...) = 1; "
                   "the value 0 is kept for n >= 1."});
    out.push_back({"note.bernstein", "Bernstein basis index",
                   "stated as B_m^n(x) = C(n,k) x^k (1-x)^(n-k), mixing m and k",
                   "read as B_m^n(x) = C(n,m) x^m (1-x)^(n-m)."});

    return out;
}

} // namespace eulerkind
