#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "c4gb/polynomial.hpp"
#include "support.hpp"

using namespace c4gb;
using c4gb::testing::make_set;

namespace {

FieldElement q(long n, long d = 1) { return FieldElement::rational(n, d); }

// Delta = {0,1} in one variable with basis {x^2 - 1}.
ReducedGB univariate_example() {
    auto delta = make_set(1, {{0}, {1}});
    LexPolynomial f(1, field_q());
    f.add_term({2}, q(1));
    f.add_term({0}, q(-1));
    std::map<Exponent, LexPolynomial, LexLess> entries;
    entries.emplace(Exponent{2}, f);
    return ReducedGB(delta, field_q(), entries);
}

}  // namespace

TEST_CASE("field element canonical form and arithmetic") {
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(1, -2) == q(-1, 2));
    CHECK((q(1, 2) + q(1, 3)) == q(5, 6));
    CHECK((q(1, 2) * q(2, 1)) == q(1));
    CHECK(q(3, 7).inverse() == q(7, 3));
    CHECK_THROWS_AS(q(0).inverse(), ZeroDivision);
    CHECK(q(-3, 6).str() == "-1/2");

    auto a = FieldElement::prime(99, 101);
    auto b = FieldElement::prime(5, 101);
    CHECK((a + b).residue() == 3);
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(a + q(1), FieldMismatch);
    CHECK_THROWS_AS(a + FieldElement::prime(1, 7), FieldMismatch);

    CHECK(q(7, 2).to_prime_field(101) == FieldElement::prime(7, 101) * FieldElement::prime(2, 101).inverse());
    CHECK_THROWS_AS(q(1, 101).to_prime_field(101), ZeroDivision);
}

TEST_CASE("quadratic extension arithmetic and Frobenius") {
    const std::uint64_t p = 101;
    auto t = FieldElement::quad(0, 1, p);
    auto x = FieldElement::quad(3, 4, p);
    CHECK((x * x.inverse()).is_one());
    CHECK(x.frobenius().frobenius() == x);
    CHECK(x.frobenius() == x.pow(p));  // Frobenius is the p-th power map
    CHECK((t * t).parts().second == 0);  // t^2 lands in the prime field
}

TEST_CASE("polynomial arithmetic examples") {
    LexPolynomial xp1(1, field_q()), xm1(1, field_q());
    xp1.add_term({1}, q(1));
    xp1.add_term({0}, q(1));
    xm1.add_term({1}, q(1));
    xm1.add_term({0}, q(-1));
    auto prod = xp1 * xm1;
    LexPolynomial expected(1, field_q());
    expected.add_term({2}, q(1));
    expected.add_term({0}, q(-1));
    CHECK(prod == expected);

    CHECK((prod + LexPolynomial::zero(1, field_q())) == prod);

    auto f2 = field_fp(2);
    LexPolynomial y(2, f2);
    y.add_term({0, 1}, FieldElement::one(f2));
    CHECK((y + y).is_zero());  // characteristic 2
    CHECK(y.scaled(FieldElement::from_integer(2, f2)).is_zero());
}

TEST_CASE("leading term bookkeeping") {
    LexPolynomial p(2, field_q());
    p.add_term({0, 3}, q(5));
    p.add_term({1, 0}, q(2));
    CHECK(p.leading_exponent() == Exponent{1, 0});  // x_1 beats any power of x_2
    CHECK(p.leading_coefficient() == q(2));
    CHECK_THROWS_AS(LexPolynomial::zero(2, field_q()).leading_exponent(), Error);
    p.add_term({1, 0}, q(-2));
    CHECK(p.leading_exponent() == Exponent{0, 3});  // cancellation re-exposes the next term
}

TEST_CASE("normal form against the univariate basis") {
    auto gb = univariate_example();
    // members reduce to zero
    for (const auto& [corner, f] : gb.entries()) CHECK(gb.normal_form(f).is_zero());
    // monomials inside Delta are fixed points
    for (const auto& e : gb.delta().elements()) {
        auto m = LexPolynomial::monomial(e, q(1));
        CHECK(gb.normal_form(m) == m);
    }
    // x^3 -> x
    auto x3 = LexPolynomial::monomial({3}, q(1));
    CHECK(gb.normal_form(x3) == LexPolynomial::monomial({1}, q(1)));
}

TEST_CASE("normal form is idempotent, linear, and detects membership") {
    auto gb = univariate_example();
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        LexPolynomial p(1, field_q()), r(1, field_q());
        for (int k = 0; k < 5; ++k) {
            p.add_term({static_cast<int>(rng() % 7)}, q(static_cast<long>(rng() % 19) - 9));
            r.add_term({static_cast<int>(rng() % 7)}, q(static_cast<long>(rng() % 19) - 9));
        }
        auto nf = gb.normal_form(p);
        CHECK(gb.normal_form(nf) == nf);
        auto a = q(static_cast<long>(rng() % 9) - 4);
        CHECK(gb.normal_form(p.scaled(a) + r) == nf.scaled(a) + gb.normal_form(r));
        CHECK(gb.normal_form(p - nf).is_zero());
    }
}

TEST_CASE("basis extension") {
    auto gb = univariate_example();
    CHECK(gb.extended({2}) == gb.entries().at({2}));
    LexPolynomial expected(1, field_q());
    expected.add_term({3}, q(1));
    expected.add_term({1}, q(-1));
    CHECK(gb.extended({3}) == expected);
    CHECK(gb.extended({3}) == expected);  // memoized path returns the same value
    CHECK_THROWS_AS(gb.extended({1}), Error);
}

TEST_CASE("basis construction rejects malformed entries") {
    auto delta = make_set(1, {{0}, {1}});
    std::map<Exponent, LexPolynomial, LexLess> entries;
    LexPolynomial bad(1, field_q());
    bad.add_term({2}, q(2));  // not monic
    entries.emplace(Exponent{2}, bad);
    CHECK_THROWS_AS(ReducedGB(delta, field_q(), entries), Error);

    entries.clear();
    LexPolynomial tail(1, field_q());
    tail.add_term({2}, q(1));
    tail.add_term({3}, q(1));  // tail outside Delta and above the corner
    entries.emplace(Exponent{2}, tail);
    CHECK_THROWS_AS(ReducedGB(delta, field_q(), entries), Error);
}

TEST_CASE("shared values are safe to use from several threads") {
    auto gb = univariate_example();
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&gb, &ok, w]() {
            for (int k = 0; k < 50; ++k) {
                int e = 2 + (k + w) % 9;
                auto f = gb.extended({e});
                if (!(f.leading_exponent() == Exponent{e})) ok = false;
                if (!gb.normal_form(f).is_zero()) ok = false;
            }
        });
    }
    for (auto& t : workers) t.join();
    CHECK(ok.load());
}

TEST_CASE("reduced basis entries are fixed points of reduction by the others") {
    // Delta = {0, e2} in two variables: corners x_1, x_2^2.
    auto delta = make_set(2, {{0, 0}, {0, 1}});
    std::map<Exponent, LexPolynomial, LexLess> entries;
    LexPolynomial f1(2, field_q());
    f1.add_term({1, 0}, q(1));
    f1.add_term({0, 1}, q(3));
    f1.add_term({0, 0}, q(-2));
    LexPolynomial f2(2, field_q());
    f2.add_term({0, 2}, q(1));
    f2.add_term({0, 1}, q(-5));
    entries.emplace(Exponent{1, 0}, f1);
    entries.emplace(Exponent{0, 2}, f2);
    ReducedGB gb(delta, field_q(), entries);
    for (const auto& [corner, f] : gb.entries()) {
        auto tail = f - LexPolynomial::monomial(corner, q(1));
        CHECK(gb.normal_form(-tail) == -tail);  // the tail is already reduced
    }
}
