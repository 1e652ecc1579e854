#include "tamedeg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tamedeg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("exponent overflow in monomial arithmetic");
    }
    return out;
}

void require_same_dimension(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::grlex(a, b) == std::strong_ordering::greater;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(int dimension) {
    if (dimension <= 0) {
        throw std::invalid_argument("monomial dimension must be positive");
    }
    exponents_.assign(static_cast<std::size_t>(dimension), 0);
}

Monomial::Monomial(std::initializer_list<std::int64_t> exponents)
    : Monomial(from_exponents(std::vector<std::int64_t>(exponents))) {}

Monomial Monomial::variable(int dimension, int var) {
    Monomial m(dimension);
    m.exponents_.at(static_cast<std::size_t>(var)) = 1;
    return m;
}

Monomial Monomial::from_exponents(std::vector<std::int64_t> exponents) {
    if (exponents.empty()) {
        throw std::invalid_argument("monomial dimension must be positive");
    }
    for (std::int64_t e : exponents) {
        if (e < 0) {
            throw std::invalid_argument("monomial exponents must be nonnegative");
        }
    }
    Monomial m(static_cast<int>(exponents.size()));
    m.exponents_ = std::move(exponents);
    m.total_degree();  // overflow check
    return m;
}

std::int64_t Monomial::total_degree() const {
    std::int64_t sum = 0;
    for (std::int64_t e : exponents_) {
        sum = checked_add(sum, e);
    }
    return sum;
}

bool Monomial::is_unit() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& other) const {
    require_same_dimension(dimension(), other.dimension(), "monomial product");
    Monomial out(dimension());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        out.exponents_[i] = checked_add(exponents_[i], other.exponents_[i]);
    }
    return out;
}

std::strong_ordering Monomial::grlex(const Monomial& a, const Monomial& b) {
    require_same_dimension(a.dimension(), b.dimension(), "grlex comparison");
    if (auto cmp = a.total_degree() <=> b.total_degree(); cmp != 0) {
        return cmp;
    }
    for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
        if (auto cmp = a.exponents_[i] <=> b.exponents_[i]; cmp != 0) {
            return cmp;
        }
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial construction

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
    if (dimension <= 0) {
        throw std::invalid_argument("polynomial dimension must be positive");
    }
}

Polynomial Polynomial::constant(int dimension, Rational value) {
    Polynomial p(dimension);
    if (value != 0) {
        p.terms_.push_back({Monomial::unit(dimension), std::move(value)});
    }
    return p;
}

Polynomial Polynomial::variable(int dimension, int var) {
    return monomial(Monomial::variable(dimension, var), Rational(1));
}

Polynomial Polynomial::monomial(Monomial m, Rational coefficient) {
    Polynomial p(m.dimension());
    if (coefficient != 0) {
        p.terms_.push_back({std::move(m), std::move(coefficient)});
    }
    return p;
}

Polynomial Polynomial::from_terms(int dimension, std::vector<Term> terms) {
    std::map<Monomial, Rational, GrlexGreater> acc;
    for (auto& [m, c] : terms) {
        require_same_dimension(dimension, m.dimension(), "polynomial term");
        acc[m] += c;
    }
    Polynomial p(dimension);
    for (auto& [m, c] : acc) {
        if (c != 0) {
            p.terms_.push_back({m, std::move(c)});
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_unit());
}

Degree Polynomial::total_degree() const {
    if (terms_.empty()) {
        return Degree::minus_infinity();
    }
    // Leading term has maximal total degree by the grlex order.
    return Degree::finite(terms_.front().monomial.total_degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
    require_same_dimension(dimension_, m.dimension(), "coefficient lookup");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return Monomial::grlex(t.monomial, key) == std::strong_ordering::greater;
    });
    if (it != terms_.end() && it->monomial == m) {
        return it->coefficient;
    }
    return Rational(0);
}

bool Polynomial::depends_on(int var) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const Term& t) { return t.monomial.exponent(var) != 0; });
}

// ---------------------------------------------------------------------------
// Arithmetic

Polynomial Polynomial::operator-() const {
    Polynomial out(dimension_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        out.terms_.push_back({t.monomial, -t.coefficient});
    }
    return out;
}

Polynomial Polynomial::adopt(int dimension, std::vector<Term> sorted_terms) {
    Polynomial p(dimension);
    p.terms_ = std::move(sorted_terms);
    return p;
}

// Merge of two descending-sorted term lists; `sign` applies to b.
Polynomial Polynomial::merged(const Polynomial& a, const Polynomial& b, int sign) {
    require_same_dimension(a.dimension(), b.dimension(), "polynomial sum");
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ai = a.terms_.begin(), ae = a.terms_.end();
    auto bi = b.terms_.begin(), be = b.terms_.end();
    while (ai != ae && bi != be) {
        auto cmp = Monomial::grlex(ai->monomial, bi->monomial);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(*ai++);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back({bi->monomial, sign > 0 ? bi->coefficient : -bi->coefficient});
            ++bi;
        } else {
            Rational c = sign > 0 ? Rational(ai->coefficient + bi->coefficient)
                                  : Rational(ai->coefficient - bi->coefficient);
            if (c != 0) {
                out.push_back({ai->monomial, std::move(c)});
            }
            ++ai;
            ++bi;
        }
    }
    out.insert(out.end(), ai, ae);
    for (; bi != be; ++bi) {
        out.push_back({bi->monomial, sign > 0 ? bi->coefficient : -bi->coefficient});
    }
    return adopt(a.dimension(), std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return Polynomial::merged(a, b, +1); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial::merged(a, b, -1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_dimension(a.dimension(), b.dimension(), "polynomial product");
    std::map<Monomial, Rational, GrlexGreater> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            acc[ta.monomial.times(tb.monomial)] += ta.coefficient * tb.coefficient;
        }
    }
    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) {
            out.push_back({m, std::move(c)});
        }
    }
    return Polynomial::adopt(a.dimension(), std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor == 0) {
        return Polynomial(dimension_);
    }
    Polynomial out(dimension_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        out.terms_.push_back({t.monomial, t.coefficient * factor});
    }
    return out;
}

Polynomial Polynomial::pow(std::int64_t exponent) const {
    if (exponent < 0) {
        throw std::invalid_argument("polynomial power must be nonnegative");
    }
    Polynomial result = constant(dimension_, Rational(1));
    Polynomial base = *this;
    std::int64_t e = exponent;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Polynomial Polynomial::partial(int var) const {
    if (var < 0 || var >= dimension_) {
        throw std::invalid_argument("partial derivative variable out of range");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::int64_t e = t.monomial.exponent(var);
        if (e == 0) {
            continue;
        }
        auto exps = t.monomial.exponents();
        exps[static_cast<std::size_t>(var)] = e - 1;
        out.push_back({Monomial::from_exponents(std::move(exps)), t.coefficient * Rational(e)});
    }
    return from_terms(dimension_, std::move(out));
}

Polynomial Polynomial::compose(std::span<const Polynomial> args) const {
    if (static_cast<int>(args.size()) != dimension_) {
        throw std::invalid_argument("compose: argument count must equal polynomial dimension");
    }
    int target_dim = args.empty() ? dimension_ : args.front().dimension();
    for (const Polynomial& arg : args) {
        require_same_dimension(target_dim, arg.dimension(), "compose arguments");
    }
    // Per-variable power cache, filled on demand.
    std::vector<std::vector<Polynomial>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        powers[i].push_back(Polynomial::constant(target_dim, Rational(1)));
    }
    auto power = [&](std::size_t var, std::int64_t e) -> const Polynomial& {
        auto& cache = powers[var];
        while (static_cast<std::int64_t>(cache.size()) <= e) {
            cache.push_back(cache.back() * args[var]);
        }
        return cache[static_cast<std::size_t>(e)];
    };
    Polynomial result(target_dim);
    for (const Term& t : terms_) {
        Polynomial product = Polynomial::constant(target_dim, t.coefficient);
        for (int var = 0; var < dimension_; ++var) {
            std::int64_t e = t.monomial.exponent(var);
            if (e != 0) {
                product = product * power(static_cast<std::size_t>(var), e);
            }
        }
        result = result + product;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Text form

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coefficient;
        bool negative = c < 0;
        if (first) {
            if (negative) {
                out << "-";
            }
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        Rational mag = negative ? Rational(-c) : c;
        bool unit_monomial = t.monomial.is_unit();
        if (mag != 1 || unit_monomial) {
            out << tamedeg::to_string(mag);
            if (!unit_monomial) {
                out << "*";
            }
        }
        bool first_var = true;
        for (int var = 0; var < dimension_; ++var) {
            std::int64_t e = t.monomial.exponent(var);
            if (e == 0) {
                continue;
            }
            if (!first_var) {
                out << "*";
            }
            first_var = false;
            out << "x" << (var + 1);
            if (e != 1) {
                out << "^" << e;
            }
        }
    }
    return out.str();
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    int dimension;

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                    ": " + message);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            fail("expected digits");
        }
        return std::string(text.substr(start, pos - start));
    }

    std::int64_t small_number() {
        std::string s = digits();
        try {
            return std::stoll(s);
        } catch (const std::exception&) {
            fail("number out of range: " + s);
        }
    }

    // var ::= 'x' uint ['^' uint]
    void variable_power(std::vector<std::int64_t>& exps) {
        if (!consume('x')) {
            fail("expected variable");
        }
        std::int64_t index = small_number();
        if (index < 1 || index > dimension) {
            fail("variable index out of range: x" + std::to_string(index));
        }
        std::int64_t e = 1;
        if (consume('^')) {
            e = small_number();
        }
        auto& slot = exps[static_cast<std::size_t>(index - 1)];
        std::int64_t sum = 0;
        if (__builtin_add_overflow(slot, e, &sum)) {
            fail("exponent overflow");
        }
        slot = sum;
    }

    // term ::= coeff ['*' var ('*' var)*] | var ('*' var)*
    Polynomial::Term term() {
        skip_ws();
        Rational coefficient(1);
        std::vector<std::int64_t> exps(static_cast<std::size_t>(dimension), 0);
        bool saw_coefficient = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            std::string den;
            if (consume('/')) {
                den = digits();
            }
            Integer d = den.empty() ? Integer(1) : Integer(den);
            if (d == 0) {
                fail("zero denominator");
            }
            coefficient = Rational(Integer(num), d);
            saw_coefficient = true;
        }
        bool saw_variable = false;
        if (!saw_coefficient) {
            variable_power(exps);
            saw_variable = true;
        }
        while (true) {
            std::size_t mark = pos;
            skip_ws();
            if (!consume('*')) {
                pos = mark;
                break;
            }
            skip_ws();
            variable_power(exps);
            saw_variable = true;
        }
        (void)saw_variable;
        return {Monomial::from_exponents(std::move(exps)), std::move(coefficient)};
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int dimension) {
    if (dimension <= 0) {
        throw std::invalid_argument("polynomial dimension must be positive");
    }
    Parser parser{text, 0, dimension};
    std::vector<Term> terms;
    parser.skip_ws();
    if (parser.at_end()) {
        parser.fail("empty input");
    }
    bool negative = false;
    if (parser.consume('-')) {
        negative = true;
    } else {
        parser.consume('+');
    }
    while (true) {
        Term t = parser.term();
        if (negative) {
            t.coefficient = -t.coefficient;
        }
        terms.push_back(std::move(t));
        if (parser.at_end()) {
            break;
        }
        parser.skip_ws();
        if (parser.consume('+')) {
            negative = false;
        } else if (parser.consume('-')) {
            negative = true;
        } else {
            parser.fail("expected '+' or '-' between terms");
        }
    }
    return from_terms(dimension, std::move(terms));
}

bool Polynomial::well_formed() const {
    for (const Term& t : terms_) {
        if (t.monomial.dimension() != dimension_ || t.coefficient == 0) {
            return false;
        }
    }
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (Monomial::grlex(terms_[i - 1].monomial, terms_[i].monomial) !=
            std::strong_ordering::greater) {
            return false;
        }
    }
    return true;
}

}  // namespace tamedeg
