#include "arithmon/expr.hpp"

#include "arithmon/classical.hpp"
#include "arithmon/polycyclic.hpp"

#include <cctype>
#include <limits>

namespace arithmon {

namespace {

enum class Tok {
    nat, ident, string, lparen, rparen, lbracket, rbracket,
    comma, semi, star, plus, circ, ddag, end
};

struct Token {
    Tok kind;
    std::string text;    // raw bytes (string tokens: content without quotes)
    std::size_t offset;  // 1-based byte offset of the first byte
    std::size_t width;   // bytes consumed in the source
};

std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    if (t.kind == Tok::string) return "'\"" + t.text + "\"'";
    return "'" + t.text + "'";
}

[[noreturn]] void fail(std::size_t offset, const std::string& expected,
                       const Token& found) {
    throw std::invalid_argument("syntax error at offset " +
                                std::to_string(offset) + ": expected " +
                                expected + ", found " + describe(found));
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t start, std::size_t width,
                    std::string text) {
        out.push_back({k, std::move(text), start + 1, width});
    };
    while (i < src.size()) {
        unsigned char c = src[i];
        if (std::isspace(c)) { ++i; continue; }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            push(Tok::nat, start, i - start, std::string(src.substr(start, i - start)));
            continue;
        }
        if (std::isalpha(c)) {
            while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
            push(Tok::ident, start, i - start, std::string(src.substr(start, i - start)));
            continue;
        }
        if (c == '"') {
            ++i;
            while (i < src.size() && src[i] != '"') ++i;
            if (i == src.size())
                throw std::invalid_argument("syntax error at offset " +
                                            std::to_string(start + 1) +
                                            ": unterminated string");
            ++i;  // closing quote
            push(Tok::string, start, i - start,
                 std::string(src.substr(start + 1, i - start - 2)));
            continue;
        }
        auto simple = [&](Tok k) {
            push(k, start, 1, std::string(1, static_cast<char>(c)));
            ++i;
        };
        switch (c) {
            case '(': simple(Tok::lparen); continue;
            case ')': simple(Tok::rparen); continue;
            case '[': simple(Tok::lbracket); continue;
            case ']': simple(Tok::rbracket); continue;
            case ',': simple(Tok::comma); continue;
            case ';': simple(Tok::semi); continue;
            case '*': simple(Tok::star); continue;
            case '+': simple(Tok::plus); continue;
            default: break;
        }
        if (src.substr(i, 3) == "‡") {  // ‡
            push(Tok::ddag, start, 3, "‡");
            i += 3;
            continue;
        }
        if (src.substr(i, 3) == "∘") {  // ∘
            push(Tok::circ, start, 3, "∘");
            i += 3;
            continue;
        }
        throw std::invalid_argument("syntax error at offset " +
                                    std::to_string(start + 1) +
                                    ": unexpected character");
    }
    out.push_back({Tok::end, "", src.size() + 1, 0});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src)
        : src_(src), tokens_(tokenize(src)) {}

    Expression run() {
        Expression e = parse_expr();
        if (peek().kind != Tok::end)
            fail(peek().offset, "'*' or end of input", peek());
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail(peek().offset, what, peek());
        return take();
    }

    Natural nat(const std::string& what = "natural number") {
        return Natural::parse(expect(Tok::nat, what).text);
    }

    /// Wraps a node with its source span [from .. last consumed token].
    Expression locate(Expression::Node node, std::size_t from_tok) {
        Expression e;
        e.node = std::move(node);
        std::size_t begin = tokens_[from_tok].offset;
        const Token& last = tokens_[pos_ - 1];
        std::size_t end = last.offset + last.width;  // one past
        e.offset = begin;
        e.text = std::string(src_.substr(begin - 1, end - begin));
        return e;
    }

    Expression parse_expr() {
        std::size_t from = pos_;
        Expression acc = parse_atom();
        while (peek().kind == Tok::star || peek().kind == Tok::circ) {
            take();
            Expression rhs = parse_atom();
            acc = locate(Expression::Compose{
                             std::make_shared<Expression>(std::move(acc)),
                             std::make_shared<Expression>(std::move(rhs))},
                         from);
        }
        return acc;
    }

    Expression parse_atom() {
        std::size_t from = pos_;
        const Token& t = peek();
        if (t.kind == Tok::ident) {
            if (t.text == "R") return parse_generator(from);
            if (t.text == "dag") {
                take();
                expect(Tok::lparen, "'('");
                Expression inner = parse_expr();
                expect(Tok::rparen, "')'");
                return locate(Expression::Dag{std::make_shared<Expression>(
                                  std::move(inner))},
                              from);
            }
            if (t.text == "id") {
                take();
                return locate(Expression::Id{}, from);
            }
            if (t.text == "zero") {
                take();
                return locate(Expression::Zero{}, from);
            }
            if (t.text == "P") return parse_poly(from);
            fail(t.offset, "'R', 'dag', 'id', 'zero' or 'P'", t);
        }
        if (t.kind == Tok::lparen) {
            take();
            Expression inner = parse_expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind == Tok::lbracket) return parse_pair(from);
        fail(t.offset, "an atom ('R', 'dag', 'id', 'zero', 'P', '(' or '[')", t);
    }

    Expression parse_generator(std::size_t from) {
        take();  // R
        bool daggered = false;
        if (peek().kind == Tok::ddag) {
            take();
            daggered = true;
        }
        expect(Tok::lparen, "'('");
        Natural first = nat();
        expect(Tok::comma, "','");
        Natural second = nat();
        expect(Tok::rparen, "')'");
        if (daggered)
            return locate(Expression::GenDag{std::move(first), std::move(second)},
                          from);
        return locate(Expression::Gen{std::move(first), std::move(second)}, from);
    }

    Expression parse_pair(std::size_t from) {
        take();  // [
        Natural first = nat();
        expect(Tok::comma, "','");
        Natural second = nat();
        expect(Tok::rbracket, "']'");
        const Token& sigil = peek();
        if (sigil.kind == Tok::plus) {
            take();
            return locate(Expression::Bicyclic{std::move(first), std::move(second)},
                          from);
        }
        if (sigil.kind == Tok::star) {
            take();
            return locate(Expression::Leech{std::move(first), std::move(second)},
                          from);
        }
        fail(sigil.offset, "'+' or '*' after ']'", sigil);
    }

    std::vector<Natural> word_digits(const Token& str) {
        std::vector<Natural> digits;
        const std::string& s = str.text;
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.emplace_back(static_cast<unsigned>(c - '0'));
                ++i;
                continue;
            }
            if (c == '[') {
                std::size_t close = s.find(']', i);
                std::string inner = s.substr(i + 1, close - i - 1);
                if (close == std::string::npos || inner.empty())
                    throw std::invalid_argument(
                        "syntax error at offset " +
                        std::to_string(str.offset) +
                        ": malformed bracketed digit in word");
                digits.push_back(Natural::parse(inner));
                i = close + 1;
                continue;
            }
            throw std::invalid_argument("syntax error at offset " +
                                        std::to_string(str.offset) +
                                        ": invalid character in word");
        }
        return digits;
    }

    Expression parse_poly(std::size_t from) {
        take();  // P
        expect(Tok::lparen, "'('");
        Natural k = nat();
        expect(Tok::semi, "';'");
        std::vector<Natural> up = word_digits(expect(Tok::string, "a quoted word"));
        expect(Tok::comma, "','");
        std::vector<Natural> down = word_digits(expect(Tok::string, "a quoted word"));
        expect(Tok::rparen, "')'");
        return locate(Expression::Poly{std::move(k), std::move(up), std::move(down)},
                      from);
    }

    std::string_view src_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Word to_word(std::uint32_t k, const std::vector<Natural>& digits) {
    std::vector<std::uint32_t> d;
    d.reserve(digits.size());
    for (const Natural& n : digits) {
        std::uint64_t v = n.to_u64();
        if (v > std::numeric_limits<std::uint32_t>::max())
            throw std::domain_error("digit " + n.str() + " out of range");
        d.push_back(static_cast<std::uint32_t>(v));
    }
    return Word(k, std::move(d));
}

}  // namespace

Expression parse(std::string_view input) {
    return Parser(input).run();
}

EvalError::EvalError(const Expression& where, const std::string& message)
    : std::domain_error("in sub-expression '" + where.text + "' at offset " +
                        std::to_string(where.offset) + ": " + message) {}

ArithElement evaluate(const Expression& e) {
    try {
        return std::visit(
            [](const auto& n) -> ArithElement {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Expression::Gen>) {
                    return generator(n.a, n.b);
                } else if constexpr (std::is_same_v<T, Expression::GenDag>) {
                    return dagger(generator(n.c, n.d));
                } else if constexpr (std::is_same_v<T, Expression::Id>) {
                    return ArithElement::identity();
                } else if constexpr (std::is_same_v<T, Expression::Zero>) {
                    return ArithElement::zero();
                } else if constexpr (std::is_same_v<T, Expression::Dag>) {
                    return dagger(evaluate(*n.child));
                } else if constexpr (std::is_same_v<T, Expression::Compose>) {
                    return compose(evaluate(*n.lhs), evaluate(*n.rhs));
                } else if constexpr (std::is_same_v<T, Expression::Bicyclic>) {
                    throw std::domain_error(
                        "a bicyclic pair is not a map between congruence "
                        "classes (its domain is a shifted copy of N); embed "
                        "it exponentially first, e.g. [" + n.b.str() + "," +
                        n.a.str() + "]+ at base p becomes [p^" + n.b.str() +
                        ",p^" + n.a.str() + "]*");
                } else if constexpr (std::is_same_v<T, Expression::Leech>) {
                    return leech_embed(LeechElement(n.m, n.n));
                } else {
                    static_assert(std::is_same_v<T, Expression::Poly>);
                    std::uint64_t k64 = n.k.to_u64();
                    if (k64 < 2 || k64 > std::numeric_limits<std::uint32_t>::max())
                        throw std::domain_error("alphabet size " + n.k.str() +
                                                " out of range");
                    auto k = static_cast<std::uint32_t>(k64);
                    return theta(n.k, PolyElement::pair(to_word(k, n.up),
                                                        to_word(k, n.down)));
                }
            },
            e.node);
    } catch (const EvalError&) {
        throw;  // already located at a deeper node
    } catch (const std::domain_error& ex) {
        throw EvalError(e, ex.what());
    }
}

namespace {

FinitePartialInjection oracle_eval_rec(const Expression& e, const Natural& window,
                                       Natural& max_modulus, bool daggered) {
    if (const auto* c = std::get_if<Expression::Compose>(&e.node)) {
        // (f∘g)‡ = g‡∘f‡: under a pending dagger the factors swap.
        const Expression& first = daggered ? *c->rhs : *c->lhs;
        const Expression& second = daggered ? *c->lhs : *c->rhs;
        return oracle_compose(
            oracle_eval_rec(first, window, max_modulus, daggered),
            oracle_eval_rec(second, window, max_modulus, daggered));
    }
    if (const auto* d = std::get_if<Expression::Dag>(&e.node))
        return oracle_eval_rec(*d->child, window, max_modulus, !daggered);

    ArithElement leaf = evaluate(e);
    if (daggered) leaf = dagger(leaf);
    if (!leaf.is_zero()) {
        max_modulus = std::max(max_modulus, leaf.dom().modulus());
        max_modulus = std::max(max_modulus, leaf.img().modulus());
    }
    return from_arith(leaf, window);
}

}  // namespace

FinitePartialInjection oracle_evaluate(const Expression& e, const Natural& window,
                                       Natural& max_modulus) {
    max_modulus = std::max(max_modulus, Natural(1));
    return oracle_eval_rec(e, window, max_modulus, false);
}

}  // namespace arithmon
