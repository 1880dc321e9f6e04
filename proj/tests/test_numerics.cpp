#include "doctest.h"

#include <random>
#include <sstream>

#include "grat/bigint.hpp"
#include "grat/quadratic.hpp"
#include "grat/rational.hpp"

using grat::BigInt;
using grat::QuadraticNumber;
using grat::Rational;

namespace {

BigInt big(const char* s) { return BigInt::from_decimal(s); }

BigInt random_bigint(std::mt19937_64& rng, int max_bits) {
    std::uniform_int_distribution<int> bits_dist(1, max_bits);
    int bits = bits_dist(rng);
    std::string decimal;
    BigInt out = 0;
    for (int produced = 0; produced < bits; produced += 32) {
        out = out * big("4294967296") + BigInt(static_cast<long long>(rng() & 0xffffffffu));
    }
    if (rng() & 1u) out = -out;
    return out;
}

}  // namespace

TEST_CASE("bigint decimal round-trip and small arithmetic") {
    CHECK(BigInt(0).to_decimal() == "0");
    CHECK(BigInt(-1).to_decimal() == "-1");
    CHECK(big("-0").to_decimal() == "0");
    CHECK(big("00123").to_decimal() == "123");
    CHECK((BigInt(7) + BigInt(-9)).to_decimal() == "-2");
    CHECK((BigInt(1000000000) * BigInt(1000000000)).to_decimal() == "1000000000000000000");
    CHECK(BigInt(-17) / BigInt(5) == BigInt(-3));
    CHECK(BigInt(-17) % BigInt(5) == BigInt(-2));
    CHECK(BigInt(17) / BigInt(-5) == BigInt(-3));
    CHECK(BigInt(17) % BigInt(-5) == BigInt(2));
    CHECK_THROWS_AS(big("12x4"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("bigint frozen vectors from an independent bignum implementation") {
    struct Row {
        const char *a, *b, *prod, *quot, *rem;
    };
    static const Row rows[] = {
        {"753926718742", "442815", "333850059959738730", "1702577", "84487"},
        {"1947983152472983894", "3870579361", "7539823385537647570201811734", "503279475",
         "3723068419"},
        {"-701524050074805862653113454257", "896943642506566251101239",
         "-629227536780055150994787633003005850723767033502524423", "-782127",
         "-209792072720378054698904"},
        {"247331870423591383822220344370764655052", "18206560582546509243",
         "4503062682861659684847440434053233448849836263227624645636",
         "13584766288076012372", "9992482418884300656"},
        {"-936536643673981983721951785222461451646826063396", "-56773193343060792026921101985",
         "53170175944164210981399874665550113228468219619267897675389320286239791441060",
         "16496106498974165902", "-55168791928642249518774547926"},
        {"-1152808524638915396716137761732242335792770961312555653917314", "-5730767337",
         "6606477438815856074607239345727422917729797825812084589464019169972818",
         "201161285539538105438904814804252161492483037322189", "-2987376621"},
        {"7909845041494540298585087794335616332220", "-3662240013120790094207754648570077064243",
         "-28967751008546381730250142305526154558075054746468324890176677481885980970809460",
         "-2", "585365015252960110169578497195462203734"},
        {"-22830703124220363468239878297", "-47404957244993584387019145749",
         "1082288505476807781214945568206066685814331039120664909453", "0",
         "-22830703124220363468239878297"},
        {"79228162514264337593543950335", "4294967295",
         "340282366841710300949110269833929293825", "18446744078004518913", "0"},
        {"170141183460469231744032982617118673618", "9223372036854775809",
         "1569275433846670191242957328816020742780902697738832906962", "18446744073709551615",
         "3122306864379792083"},
        {"-1361129467683753853853498429727072845817", "36893488147419103229",
         "-50216813883093446106602926982610069767000093849499123843093",
         "-36893488147419103235", "-2"},
        {"10000000000000000000000000000000000000000", "99999999999999999999",
         "999999999999999999990000000000000000000000000000000000000000",
         "100000000000000000001", "1"},
    };
    for (const Row& row : rows) {
        CAPTURE(row.a);
        BigInt a = big(row.a), b = big(row.b);
        CHECK(a * b == big(row.prod));
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q == big(row.quot));
        CHECK(r == big(row.rem));
    }
}

TEST_CASE("bigint divmod self-consistency on random inputs") {
    std::mt19937_64 rng(0xabcdef12u);
    for (int i = 0; i < 2000; ++i) {
        BigInt a = random_bigint(rng, 192);
        BigInt b = random_bigint(rng, 128);
        if (b.is_zero()) b = 7;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
}

TEST_CASE("bigint ring identities on random inputs") {
    std::mt19937_64 rng(0x5eed5eedu);
    for (int i = 0; i < 500; ++i) {
        BigInt a = random_bigint(rng, 160);
        BigInt b = random_bigint(rng, 160);
        BigInt c = random_bigint(rng, 96);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BigInt(0));
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("integer_sqrt frozen vectors and basic contract") {
    struct Row {
        const char* x;
        const char* root;
        bool exact;
    };
    static const Row rows[] = {
        {"0", "0", true},
        {"1", "1", true},
        {"2", "1", false},
        {"3", "1", false},
        {"4", "2", true},
        {"15", "3", false},
        {"16", "4", true},
        {"17", "4", false},
        {"100000000000000000000", "10000000000", true},
        {"10000000000000000000000000000000000000000", "100000000000000000000", true},
        {"9999999999999999999800000000000000000001", "99999999999999999999", true},
        {"9999999999999999999800000000000000000000", "99999999999999999998", false},
        {"1267650600228229401496703205376", "1125899906842624", true},
    };
    for (const Row& row : rows) {
        CAPTURE(row.x);
        auto result = grat::integer_sqrt(big(row.x));
        CHECK(result.root == big(row.root));
        CHECK(result.exact == row.exact);
    }
    CHECK_THROWS_AS(grat::integer_sqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("integer_sqrt bracket property for random x up to 10^40") {
    std::mt19937_64 rng(0x600df00du);
    const BigInt limit = big("10000000000000000000000000000000000000000");
    for (int i = 0; i < 400; ++i) {
        BigInt x = random_bigint(rng, 133).abs() % limit;
        auto result = grat::integer_sqrt(x);
        CHECK(result.root * result.root <= x);
        CHECK((result.root + 1) * (result.root + 1) > x);
        CHECK(result.exact == (result.root * result.root == x));
    }
}

TEST_CASE("rational canonicalization is idempotent") {
    Rational r(BigInt(-6), BigInt(-8));
    CHECK(r.num() == BigInt(3));
    CHECK(r.den() == BigInt(4));
    Rational again(r.num(), r.den());
    CHECK(again == r);
    CHECK(Rational(BigInt(0), BigInt(-5)) == Rational(0));
    CHECK(Rational(BigInt(4), BigInt(-6)).to_string() == "-2/3");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational field behavior") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(1), BigInt(3));
    CHECK(half + third == Rational(BigInt(5), BigInt(6)));
    CHECK(half * third == Rational(BigInt(1), BigInt(6)));
    CHECK(half / third == Rational(BigInt(3), BigInt(2)));
    CHECK(half - half == Rational(0));
    CHECK(half < Rational(BigInt(2), BigInt(3)));
    CHECK(Rational(BigInt(7), BigInt(1)).is_integer());
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 2001) - 1000;
    long long den = static_cast<long long>(rng() % 999) + 1;
    return Rational(BigInt(num), BigInt(den));
}

}  // namespace

TEST_CASE("quadratic numbers: golden ratio and paper examples") {
    const BigInt five(5);
    Rational half(BigInt(1), BigInt(2));
    QuadraticNumber phi(five, half, half);  // (1 + sqrt 5)/2
    // phi^2 = phi + 1 = (3 + sqrt 5)/2
    CHECK(phi * phi == QuadraticNumber(five, Rational(BigInt(3), BigInt(2)), half));

    const BigInt three(3);
    QuadraticNumber sqrt3 = QuadraticNumber::sqrt_term(three, Rational(1));
    CHECK((sqrt3 - sqrt3).is_zero());

    QuadraticNumber v(five, Rational(4), Rational(2));  // 4 + 2*sqrt5
    QuadraticNumber two = QuadraticNumber::from_rational(five, Rational(2));
    CHECK(v / two == QuadraticNumber(five, Rational(2), Rational(1)));

    CHECK_THROWS_AS(phi + sqrt3, std::domain_error);  // radicand mismatch
    CHECK_THROWS_AS(phi / QuadraticNumber::from_rational(five, Rational(0)), std::domain_error);
}

TEST_CASE("quadratic division rejects zero-norm divisors over square radicands") {
    const BigInt four(4);
    // 2 - sqrt(4) is nonzero componentwise but has norm 0.
    QuadraticNumber bad(four, Rational(2), Rational(-1));
    QuadraticNumber one = QuadraticNumber::from_rational(four, Rational(1));
    CHECK(bad.norm().is_zero());
    CHECK_THROWS_AS(one / bad, std::domain_error);
}

TEST_CASE("quadratic field axioms on random triples, checked exactly") {
    std::mt19937_64 rng(0x9e3779b9u);
    const BigInt seven(7);
    for (int i = 0; i < 200; ++i) {
        QuadraticNumber x(seven, random_rational(rng), random_rational(rng));
        QuadraticNumber y(seven, random_rational(rng), random_rational(rng));
        QuadraticNumber z(seven, random_rational(rng), random_rational(rng));
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) {
            QuadraticNumber one = QuadraticNumber::from_rational(seven, Rational(1));
            CHECK((one / x) * x == one);
        }
    }
}

TEST_CASE("bigint stream output") {
    std::ostringstream os;
    os << big("-123456789012345678901234567890");
    CHECK(os.str() == "-123456789012345678901234567890");
}
